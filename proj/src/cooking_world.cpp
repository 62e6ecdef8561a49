#include "hm/cooking_world.hpp"

#include <algorithm>

namespace hm {

const char* held_item_name(HeldItem h) {
  switch (h) {
    case HeldItem::Nothing: return "nothing";
    case HeldItem::Tomato: return "tomato";
    case HeldItem::Dish: return "dish";
    case HeldItem::SoupInDish: return "soup_in_dish";
  }
  return "?";
}

std::string teammate_action_label(EventKind kind) {
  switch (kind) {
    case EventKind::PickedTomato: return "Teammate picked up a tomato";
    case EventKind::PutTomatoInPot: return "Teammate put a tomato in a pot";
    case EventKind::PickedDish: return "Teammate picked up a dish";
    case EventKind::PutDownItem: return "Teammate put down an item";
    case EventKind::PlatedSoup: return "Teammate picked up cooked soup in dish";
    case EventKind::DeliveredSoup: return "Teammate delivered cooked soup";
    default: return "";
  }
}

CookingWorld::CookingWorld(GridMap map, CookingConfig config)
    : map_(std::move(map)), config_(config), rng_(config.seed) {
  if (map_.spawns().size() < 2) {
    throw ContractViolation("cooking map needs 2 spawns");
  }
  for (int i = 0; i < 2; ++i) {
    CookPlayer p;
    p.pos = map_.spawns()[i];
    players_.push_back(p);
  }
  for (GridPos pos : map_.cells_of('P')) pots_[pos] = PotState{};
  if (pots_.empty()) throw ContractViolation("cooking map has no pots");
  barrier_x_ = pots_.begin()->first.x;
}

std::vector<GridPos> CookingWorld::side_entities(int side, char legend) const {
  std::vector<GridPos> out;
  for (GridPos pos : map_.cells_of(legend)) {
    // An entity belongs to a side if a walkable cell of that side is
    // adjacent to it. Pots on the barrier belong to both sides.
    for (GridPos d : {GridPos{1, 0}, GridPos{-1, 0}, GridPos{0, 1},
                      GridPos{0, -1}}) {
      GridPos n{pos.x + d.x, pos.y + d.y};
      if (map_.in_bounds(n) && !map_.blocks_movement(n) &&
          side_of(n) == side) {
        out.push_back(pos);
        break;
      }
    }
  }
  return out;
}

StepResult CookingWorld::step(const JointAction& joint) {
  if (done()) throw ContractViolation("step on a finished episode");
  if (static_cast<int>(joint.size()) != player_count()) {
    throw ContractViolation("joint action arity mismatch");
  }
  StepResult result;
  result.rewards.assign(player_count(), 0.0);

  for (int i = 0; i < player_count(); ++i) {
    CookPlayer& p = players_[i];
    switch (joint[i]) {
      case AtomicAction::TurnLeft: p.orientation = turn_left(p.orientation); break;
      case AtomicAction::TurnRight: p.orientation = turn_right(p.orientation); break;
      default: break;
    }
  }
  // Moves; the barrier and all entity cells block. Lower index wins.
  std::vector<GridPos> proposal(player_count());
  for (int i = 0; i < player_count(); ++i) {
    CookPlayer& p = players_[i];
    proposal[i] = p.pos;
    GridPos d{0, 0};
    GridPos f = forward_delta(p.orientation);
    switch (joint[i]) {
      case AtomicAction::StepForward: d = f; break;
      case AtomicAction::StepBackward: d = {-f.x, -f.y}; break;
      case AtomicAction::StepLeft: d = forward_delta(turn_left(p.orientation)); break;
      case AtomicAction::StepRight: d = forward_delta(turn_right(p.orientation)); break;
      default: break;
    }
    GridPos target{p.pos.x + d.x, p.pos.y + d.y};
    if (!map_.blocks_movement(target)) proposal[i] = target;
  }
  for (int i = 0; i < player_count(); ++i) {
    if (proposal[i] == players_[i].pos) continue;
    bool blocked = false;
    for (int j = 0; j < player_count(); ++j) {
      if (j == i) continue;
      GridPos occupied = j < i ? proposal[j] : players_[j].pos;
      if (occupied == proposal[i]) blocked = true;
    }
    if (!blocked) players_[i].pos = proposal[i];
  }
  // Interactions target the cell directly ahead.
  for (int i = 0; i < player_count(); ++i) {
    if (joint[i] != AtomicAction::FireBeam) continue;
    CookPlayer& p = players_[i];
    GridPos f = forward_delta(p.orientation);
    GridPos target{p.pos.x + f.x, p.pos.y + f.y};
    result.events.push_back(interact_with(i, target, result.rewards));
  }
  tick_pots();
  ++step_;
  for (auto& e : result.events) e.step = step_;
  result.done = done();
  return result;
}

GameEvent CookingWorld::interact_with(PlayerId id, GridPos target,
                                      std::vector<double>& rewards) {
  CookPlayer& p = players_[id];
  GameEvent ev{EventKind::Blocked, 0, id, -1, target, 0.0, 0.0, 0};
  if (!map_.in_bounds(target)) return ev;
  char c = map_.at(target);

  auto pot = pots_.find(target);
  if (pot != pots_.end()) {
    PotState& ps = pot->second;
    if (p.held == HeldItem::Tomato && !ps.cooked && ps.tomatoes < 3) {
      p.held = HeldItem::Nothing;
      ps.tomatoes += 1;
      if (ps.tomatoes == 3) ps.cook_timer = config_.cook_duration;
      ev.kind = EventKind::PutTomatoInPot;
      ev.detail = ps.tomatoes;
    } else if (p.held == HeldItem::Dish && ps.cooked) {
      p.held = HeldItem::SoupInDish;
      ps = PotState{};
      ev.kind = EventKind::PlatedSoup;
    }
    return ev;
  }
  switch (c) {
    case 'T':
      if (p.held == HeldItem::Nothing) {
        p.held = HeldItem::Tomato;
        ev.kind = EventKind::PickedTomato;
      }
      break;
    case 'X':
      if (p.held == HeldItem::Nothing) {
        p.held = HeldItem::Dish;
        ev.kind = EventKind::PickedDish;
      }
      break;
    case 'D':
      if (p.held == HeldItem::SoupInDish) {
        p.held = HeldItem::Nothing;
        ev.kind = EventKind::DeliveredSoup;
        for (auto& r : rewards) r += 20.0;
      }
      break;
    case 'C': {
      auto slot = counter_items_.find(target);
      bool has_item = slot != counter_items_.end();
      if (p.held != HeldItem::Nothing && !has_item) {
        counter_items_[target] = p.held;
        ev.detail = static_cast<int>(p.held);
        p.held = HeldItem::Nothing;
        ev.kind = EventKind::PutDownItem;
      } else if (p.held == HeldItem::Nothing && has_item) {
        HeldItem item = slot->second;
        counter_items_.erase(slot);
        p.held = item;
        ev.kind = item == HeldItem::Tomato  ? EventKind::PickedTomato
                  : item == HeldItem::Dish ? EventKind::PickedDish
                                           : EventKind::PlatedSoup;
      }
      break;
    }
    default:
      break;
  }
  return ev;
}

void CookingWorld::tick_pots() {
  for (auto& [pos, ps] : pots_) {
    if (ps.tomatoes == 3 && !ps.cooked) {
      if (--ps.cook_timer <= 0) ps.cooked = true;
    }
  }
}

StructuredObservation CookingWorld::observe(PlayerId id) const {
  const CookPlayer& p = players_.at(id);
  StructuredObservation obs;
  obs.self = id;
  obs.pos = p.pos;
  obs.orientation = p.orientation;
  obs.step = step_;
  obs.held = held_item_name(p.held);

  auto visible = [&](GridPos cell) {
    return in_window(p.pos, p.orientation, cell, config_.window_forward,
                     config_.window_back, config_.window_side);
  };
  struct LabelLegend {
    const char* label;
    char legend;
  };
  for (auto [label, legend] : {LabelLegend{"Tomato Dispenser", 'T'},
                               LabelLegend{"Dish Dispenser", 'X'},
                               LabelLegend{"Delivery", 'D'},
                               LabelLegend{"Pot", 'P'},
                               LabelLegend{"Counter", 'C'}}) {
    std::vector<GridPos> cells;
    for (GridPos pos : map_.cells_of(legend)) {
      if (visible(pos)) cells.push_back(pos);
    }
    obs.entities.emplace_back(label, std::move(cells));
  }
  std::vector<GridPos> teammates;
  for (int j = 0; j < player_count(); ++j) {
    if (j != id && visible(players_[j].pos)) teammates.push_back(players_[j].pos);
  }
  obs.entities.emplace_back("Teammate", std::move(teammates));
  return obs;
}

CookingWorld make_cooking_world(const std::string& map_text, int max_steps,
                                uint64_t seed) {
  CookingConfig cfg;
  cfg.max_steps = max_steps;
  cfg.seed = seed;
  GridMap map = GridMap::parse(map_text);
  if (map.substrate() != "cooking_asymmetric") {
    throw ContractViolation("map substrate mismatch: " + map.substrate());
  }
  return CookingWorld(std::move(map), cfg);
}

}  // namespace hm
