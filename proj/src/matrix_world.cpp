#include "hm/matrix_world.hpp"

#include <algorithm>

namespace hm {

namespace {

int kind_of_legend(char c, const PayoffMatrix& payoff) {
  if (payoff.kinds() == 3) {
    if (c == 'y') return kRock;
    if (c == 'p') return kPaper;
    if (c == 'b') return kScissors;
  } else {
    if (c == 'g') return kCooperate;
    if (c == 'r') return kDefect;
  }
  return -1;
}

GridPos lateral_delta(Orientation o, bool right) {
  return forward_delta(right ? turn_right(o) : turn_left(o));
}

}  // namespace

MatrixWorld::MatrixWorld(GridMap map, PayoffMatrix payoff, int player_count,
                         MatrixWorldConfig config)
    : map_(std::move(map)),
      payoff_(std::move(payoff)),
      config_(config),
      rng_(config.seed) {
  if (static_cast<int>(map_.spawns().size()) < player_count) {
    throw ContractViolation("map has too few spawn points");
  }
  for (int i = 0; i < player_count; ++i) {
    MatrixPlayer p;
    p.spawn = map_.spawns()[i];
    p.pos = p.spawn;
    p.orientation = static_cast<Orientation>(rng_.uniform_int(4));
    p.inventory = Inventory::ones(payoff_.kinds());
    players_.push_back(p);
  }
  for (int y = 0; y < map_.height(); ++y) {
    for (int x = 0; x < map_.width(); ++x) {
      GridPos pos{x, y};
      int kind = kind_of_legend(map_.at(pos), payoff_);
      if (kind >= 0) resources_[pos] = ResourceCell{kind, true, 0};
    }
  }
}

std::string MatrixWorld::kind_label(int kind) const {
  if (payoff_.kinds() == 3) {
    switch (kind) {
      case kRock: return "Yellow Box";
      case kPaper: return "Purple Box";
      case kScissors: return "Blue Box";
    }
  } else {
    return kind == kCooperate ? "Green Box" : "Red Box";
  }
  return "?";
}

std::vector<GridPos> MatrixWorld::walkable_cells() const {
  std::vector<GridPos> out;
  for (int y = 0; y < map_.height(); ++y) {
    for (int x = 0; x < map_.width(); ++x) {
      GridPos p{x, y};
      if (!map_.blocks_movement(p)) out.push_back(p);
    }
  }
  return out;
}

StepResult MatrixWorld::step(const JointAction& joint) {
  if (done()) throw ContractViolation("step on a finished episode");
  if (static_cast<int>(joint.size()) != player_count()) {
    throw ContractViolation("joint action arity mismatch");
  }
  StepResult result;
  result.rewards.assign(player_count(), 0.0);

  for (int i = 0; i < player_count(); ++i) {
    if (!players_[i].alive()) continue;
    if (joint[i] == AtomicAction::TurnLeft) {
      players_[i].orientation = turn_left(players_[i].orientation);
    } else if (joint[i] == AtomicAction::TurnRight) {
      players_[i].orientation = turn_right(players_[i].orientation);
    }
  }
  apply_moves(joint, result.events);
  apply_fires(joint, result);
  tick_timers(result.events);

  ++step_;
  for (auto& e : result.events) e.step = step_;
  result.done = done();
  return result;
}

void MatrixWorld::apply_moves(const JointAction& joint,
                              std::vector<GameEvent>& events) {
  std::vector<GridPos> proposal(player_count());
  for (int i = 0; i < player_count(); ++i) {
    const MatrixPlayer& p = players_[i];
    proposal[i] = p.pos;
    if (!p.alive()) continue;
    GridPos d{0, 0};
    switch (joint[i]) {
      case AtomicAction::StepForward: d = forward_delta(p.orientation); break;
      case AtomicAction::StepBackward: {
        GridPos f = forward_delta(p.orientation);
        d = {-f.x, -f.y};
        break;
      }
      case AtomicAction::StepLeft: d = lateral_delta(p.orientation, false); break;
      case AtomicAction::StepRight: d = lateral_delta(p.orientation, true); break;
      default: break;
    }
    GridPos target{p.pos.x + d.x, p.pos.y + d.y};
    if (!map_.blocks_movement(target)) proposal[i] = target;
  }
  // Lower index wins a contested cell; nobody moves onto another player.
  for (int i = 0; i < player_count(); ++i) {
    if (!players_[i].alive() || proposal[i] == players_[i].pos) continue;
    bool blocked = false;
    for (int j = 0; j < player_count(); ++j) {
      if (j == i || !players_[j].alive()) continue;
      GridPos occupied = j < i ? proposal[j] : players_[j].pos;
      if (occupied == proposal[i]) {
        blocked = true;
        break;
      }
    }
    if (blocked) {
      proposal[i] = players_[i].pos;
      continue;
    }
    players_[i].pos = proposal[i];
    auto it = resources_.find(proposal[i]);
    if (it != resources_.end() && it->second.present) {
      players_[i].inventory.counts[it->second.kind] += 1;
      it->second.present = false;
      it->second.regrow_timer = config_.regrow_delay;
      events.push_back(GameEvent{EventKind::Collect, 0, i, -1, proposal[i],
                                 0.0, 0.0, it->second.kind});
    }
  }
}

void MatrixWorld::apply_fires(const JointAction& joint, StepResult& result) {
  for (int i = 0; i < player_count(); ++i) {
    if (joint[i] != AtomicAction::FireBeam || !players_[i].alive()) continue;
    const MatrixPlayer& shooter = players_[i];
    GridPos d = forward_delta(shooter.orientation);
    GridPos cell = shooter.pos;
    for (int k = 0; k < config_.beam_length; ++k) {
      cell = {cell.x + d.x, cell.y + d.y};
      if (map_.blocks_movement(cell)) break;
      int hit = -1;
      for (int j = 0; j < player_count(); ++j) {
        if (j != i && players_[j].alive() && players_[j].pos == cell) {
          hit = j;
          break;
        }
      }
      if (hit < 0) continue;
      if (shooter.duel_eligible() && players_[hit].duel_eligible()) {
        InteractionReward r = resolve_interaction(
            shooter.inventory, players_[hit].inventory, payoff_);
        result.rewards[i] += r.row;
        result.rewards[hit] += r.col;
        // detail packs the played kinds: shooter's * 8 + target's
        int played = players_[i].inventory.argmax() * 8 +
                     players_[hit].inventory.argmax();
        result.events.push_back(GameEvent{EventKind::Interaction, 0, i, hit,
                                          cell, r.row, r.col, played});
        for (int pid : {i, hit}) {
          players_[pid].inventory = Inventory::ones(payoff_.kinds());
          players_[pid].respawn_timer = config_.respawn_delay;
        }
      }
      break;  // beam stops at the first player either way
    }
  }
}

void MatrixWorld::tick_timers(std::vector<GameEvent>& events) {
  for (auto& [pos, cell] : resources_) {
    if (!cell.present && --cell.regrow_timer <= 0) {
      cell.present = true;
      cell.regrow_timer = 0;
    }
  }
  for (int i = 0; i < player_count(); ++i) {
    MatrixPlayer& p = players_[i];
    if (p.respawn_timer > 0 && --p.respawn_timer == 0) {
      p.pos = free_spawn_for(i);
      p.orientation = static_cast<Orientation>(rng_.uniform_int(4));
      events.push_back(
          GameEvent{EventKind::Respawn, 0, i, -1, p.pos, 0.0, 0.0, 0});
    }
  }
}

GridPos MatrixWorld::free_spawn_for(PlayerId id) const {
  auto occupied = [&](GridPos pos) {
    for (int j = 0; j < player_count(); ++j) {
      if (j != static_cast<int>(id) && players_[j].alive() &&
          players_[j].pos == pos) {
        return true;
      }
    }
    return false;
  };
  if (!occupied(players_[id].spawn)) return players_[id].spawn;
  for (GridPos s : map_.spawns()) {
    if (!occupied(s)) return s;
  }
  for (int y = 0; y < map_.height(); ++y) {
    for (int x = 0; x < map_.width(); ++x) {
      GridPos p{x, y};
      if (!map_.blocks_movement(p) && !occupied(p)) return p;
    }
  }
  throw ContractViolation("no free cell to respawn on");
}

StructuredObservation MatrixWorld::observe(PlayerId id) const {
  const MatrixPlayer& p = players_.at(id);
  StructuredObservation obs;
  obs.self = id;
  obs.pos = p.pos;
  obs.orientation = p.orientation;
  obs.step = step_;
  obs.inventory = p.inventory;

  std::vector<int> kind_order;
  if (payoff_.kinds() == 3) {
    kind_order = {kRock, kScissors, kPaper};  // yellow, blue, purple
  } else {
    kind_order = {kCooperate, kDefect};
  }
  auto visible = [&](GridPos cell) {
    return p.alive() && in_window(p.pos, p.orientation, cell,
                                  config_.window_forward, config_.window_back,
                                  config_.window_side);
  };
  for (int kind : kind_order) {
    std::vector<GridPos> cells;
    for (const auto& [pos, cell] : resources_) {
      if (cell.kind == kind && cell.present && visible(pos)) {
        cells.push_back(pos);
      }
    }
    obs.entities.emplace_back(kind_label(kind), std::move(cells));
  }
  std::vector<GridPos> walls;
  std::vector<GridPos> opponents;
  if (p.alive()) {
    for (int y = 0; y < map_.height(); ++y) {
      for (int x = 0; x < map_.width(); ++x) {
        GridPos cell{x, y};
        if (map_.at(cell) == '#' && visible(cell)) walls.push_back(cell);
      }
    }
    for (int j = 0; j < player_count(); ++j) {
      if (j != static_cast<int>(id) && players_[j].alive() &&
          visible(players_[j].pos)) {
        opponents.push_back(players_[j].pos);
      }
    }
  }
  obs.entities.emplace_back("Wall", std::move(walls));
  obs.entities.emplace_back("Opponent", std::move(opponents));
  return obs;
}

MatrixWorld make_matrix_world(const std::string& substrate,
                              const std::string& map_text, int max_steps,
                              uint64_t seed) {
  MatrixWorldConfig cfg;
  cfg.max_steps = max_steps;
  cfg.seed = seed;
  PayoffMatrix payoff;
  int players;
  if (substrate == "rws_repeated") {
    payoff = PayoffMatrix::rws();
    players = 2;
  } else if (substrate == "rws_arena") {
    payoff = PayoffMatrix::rws();
    players = 8;
    cfg.window_forward = 9;
    cfg.window_back = 1;
    cfg.window_side = 5;
  } else if (substrate == "pd_repeated") {
    payoff = PayoffMatrix::pd();
    players = 2;
  } else {
    throw ContractViolation("unknown matrix substrate: " + substrate);
  }
  GridMap map = GridMap::parse(map_text);
  if (map.substrate() != substrate) {
    throw ContractViolation("map substrate mismatch: " + map.substrate());
  }
  return MatrixWorld(std::move(map), std::move(payoff), players, cfg);
}

}  // namespace hm
