#include "hm/bots.hpp"

#include <algorithm>
#include <deque>

#include "hm/cooking_world.hpp"
#include "hm/matrix_world.hpp"
#include "hm/payoff.hpp"
#include "hm/planner.hpp"

namespace hm {

const char* bot_variant_name(BotVariant v) {
  switch (v) {
    case BotVariant::Pure: return "pure";
    case BotVariant::BestResponse: return "best_response";
    case BotVariant::FlipAfterTwo: return "flip_after_two";
    case BotVariant::FlipAfterOne: return "flip_after_one";
    case BotVariant::Gullible: return "gullible";
    case BotVariant::Cooperator: return "cooperator";
    case BotVariant::Defector: return "defector";
    case BotVariant::Grim: return "grim";
    case BotVariant::TitForTat: return "tit_for_tat";
    case BotVariant::NoisyTitForTat: return "noisy_tit_for_tat";
    case BotVariant::CoopThenDefect: return "coop_then_defect";
    case BotVariant::CorrigibleTft: return "corrigible_tft";
    case BotVariant::CorrigibleNoisyTft: return "corrigible_noisy_tft";
    case BotVariant::Unhelpful: return "unhelpful";
    case BotVariant::SkilledChef: return "skilled_chef";
    case BotVariant::SemiSkilledChef: return "semi_skilled_chef";
  }
  return "?";
}

std::pair<int, int> rws_next_target(const BotSpec& spec, const BotState& st,
                                    Rng& rng) {
  switch (spec.variant) {
    case BotVariant::Pure:
      return {spec.kind, spec.commitment};
    case BotVariant::BestResponse:
      if (st.last_focal_play < 0) return {rng.uniform_int(3), spec.commitment};
      return {rws_counter(st.last_focal_play), spec.commitment};
    case BotVariant::FlipAfterTwo:
      if (st.interactions < 2) return {spec.kind, spec.commitment};
      return {rws_counter(rws_counter(spec.kind)), spec.flip_commitment};
    case BotVariant::FlipAfterOne:
      if (st.interactions < 1) return {spec.kind, spec.commitment};
      return {rws_counter(rws_counter(spec.kind)), spec.flip_commitment};
    case BotVariant::Gullible: {
      if (st.focal_play_counts.empty()) {
        return {rng.uniform_int(3), spec.commitment};
      }
      int best = 0;
      for (size_t k = 1; k < st.focal_play_counts.size(); ++k) {
        if (st.focal_play_counts[k] > st.focal_play_counts[best]) {
          best = static_cast<int>(k);
        }
      }
      return {rws_counter(best), spec.commitment};
    }
    default:
      return {spec.kind, spec.commitment};
  }
}

int pd_next_play(const BotSpec& spec, const BotState& st, Rng& rng) {
  auto tft = [&] {
    return st.last_focal_play < 0 ? kCooperate : st.last_focal_play;
  };
  auto noisy_tft = [&] {
    int p = tft();
    if (p == kCooperate && rng.uniform01() < spec.noise) return kDefect;
    return p;
  };
  switch (spec.variant) {
    case BotVariant::Cooperator: return kCooperate;
    case BotVariant::Defector: return kDefect;
    case BotVariant::Grim:
      return st.focal_defections >= spec.grim_threshold ? kDefect
                                                        : kCooperate;
    case BotVariant::TitForTat: return tft();
    case BotVariant::NoisyTitForTat: return noisy_tft();
    case BotVariant::CoopThenDefect:
      return st.interactions < spec.switch_round ? kCooperate : kDefect;
    case BotVariant::CorrigibleTft:
      return st.persuaded ? tft() : kDefect;
    case BotVariant::CorrigibleNoisyTft:
      return st.persuaded ? noisy_tft() : kDefect;
    default: return kCooperate;
  }
}

void note_interaction(const BotSpec& spec, BotState& st, int focal_play) {
  st.interactions += 1;
  st.last_focal_play = focal_play;
  if (static_cast<size_t>(focal_play) >= st.focal_play_counts.size()) {
    st.focal_play_counts.resize(focal_play + 1, 0);
  }
  if (focal_play >= 0) st.focal_play_counts[focal_play] += 1;
  if (focal_play == kDefect) {
    st.focal_defections += 1;
    if (st.focal_defections >= spec.corrigible_trigger) st.persuaded = true;
  }
}

int scenario_count(const std::string& substrate) {
  if (substrate == "rws_repeated") return 9;
  if (substrate == "rws_arena") return 8;
  if (substrate == "pd_repeated") return 10;
  if (substrate == "cooking_asymmetric") return 3;
  throw ContractViolation("unknown substrate: " + substrate);
}

namespace {

BotSpec pure(int kind, int commitment) {
  BotSpec s;
  s.variant = BotVariant::Pure;
  s.kind = kind;
  s.commitment = commitment;
  return s;
}

BotSpec rws_repeated_bot(int scenario_id, Rng& rng) {
  BotSpec s;
  switch (scenario_id) {
    case 0: return pure(rng.uniform_int(3), 3);
    case 1:
      s.variant = BotVariant::BestResponse;
      s.commitment = 5;
      return s;
    case 2:
      if (rng.uniform01() < 0.75) return pure(rng.uniform_int(3), 3);
      s.variant = BotVariant::BestResponse;
      s.commitment = 5;
      return s;
    case 3:
      if (rng.uniform01() < 1.0 / 3.0) {
        s.variant = BotVariant::FlipAfterTwo;
        s.kind = rng.uniform_int(3);
        s.commitment = 1;  // weak until the flip
        s.flip_commitment = 5;
        return s;
      }
      return pure(rng.uniform_int(3), rng.uniform01() < 0.5 ? 5 : 1);
    case 4:
      if (rng.uniform01() < 0.75) {
        s.variant = BotVariant::FlipAfterOne;
        s.kind = rng.uniform_int(3);
        s.commitment = 5;
        s.flip_commitment = 5;
        return s;
      }
      s.variant = BotVariant::BestResponse;
      s.commitment = 5;
      return s;
    case 5:
      s.variant = BotVariant::Gullible;
      s.commitment = 3;
      return s;
    case 6: return pure(kRock, 5);
    case 7: return pure(kPaper, 5);
    case 8: return pure(kScissors, 5);
    default:
      throw ContractViolation("rws_repeated scenario out of range");
  }
}

BotSpec rws_arena_bot(int scenario_id, Rng& rng) {
  BotSpec s;
  switch (scenario_id) {
    case 0:
      return pure(rng.uniform_int(3), rng.uniform01() < 0.5 ? 3 : 5);
    case 1:
      s.variant = BotVariant::Gullible;
      s.commitment = 3;
      return s;
    case 2:
    case 3:
    case 4: {
      int majority = scenario_id == 2   ? kRock
                     : scenario_id == 3 ? kPaper
                                        : kScissors;
      if (rng.uniform01() < 2.0 / 3.0) return pure(majority, 5);
      s.variant = BotVariant::FlipAfterTwo;
      s.kind = majority;
      s.commitment = 1;
      s.flip_commitment = 5;
      return s;
    }
    case 5: return pure(kPaper, 5);
    case 6: return pure(kRock, 5);
    case 7: return pure(kScissors, 5);
    default:
      throw ContractViolation("rws_arena scenario out of range");
  }
}

BotSpec pd_bot(int scenario_id, Rng& rng) {
  BotSpec s;
  s.commitment = 5;
  switch (scenario_id) {
    case 0:
      s.variant = rng.uniform01() < 0.5 ? BotVariant::Cooperator
                                        : BotVariant::Defector;
      return s;
    case 1: s.variant = BotVariant::Cooperator; return s;
    case 2: s.variant = BotVariant::Defector; return s;
    case 3:
      s.variant = BotVariant::Grim;
      s.grim_threshold = 1;
      return s;
    case 4:
      s.variant = BotVariant::Grim;
      s.grim_threshold = 2;
      return s;
    case 5: s.variant = BotVariant::TitForTat; return s;
    case 6:
      s.variant = BotVariant::NoisyTitForTat;
      s.noise = 0.1;
      return s;
    case 7:
      s.variant = BotVariant::CoopThenDefect;
      s.switch_round = 5;
      return s;
    case 8:
      s.variant = BotVariant::CorrigibleTft;
      s.corrigible_trigger = 2;
      return s;
    case 9:
      s.variant = BotVariant::CorrigibleNoisyTft;
      s.corrigible_trigger = 2;
      s.noise = 0.1;
      return s;
    default:
      throw ContractViolation("pd_repeated scenario out of range");
  }
}

BotSpec cooking_bot(int scenario_id) {
  BotSpec s;
  switch (scenario_id) {
    case 0: s.variant = BotVariant::SkilledChef; return s;
    case 1:
      s.variant = BotVariant::SemiSkilledChef;
      s.error_prob = 0.3;
      return s;
    case 2: s.variant = BotVariant::Unhelpful; return s;
    default:
      throw ContractViolation("cooking scenario out of range");
  }
}

}  // namespace

std::vector<BotSpec> build_scenario(const std::string& substrate,
                                    int scenario_id, Rng& rng) {
  if (scenario_id < 0 || scenario_id >= scenario_count(substrate)) {
    throw ContractViolation("scenario id out of range for " + substrate);
  }
  std::vector<BotSpec> out;
  if (substrate == "rws_repeated") {
    out.push_back(rws_repeated_bot(scenario_id, rng));
  } else if (substrate == "rws_arena") {
    for (int i = 0; i < 7; ++i) out.push_back(rws_arena_bot(scenario_id, rng));
  } else if (substrate == "pd_repeated") {
    out.push_back(pd_bot(scenario_id, rng));
  } else {
    out.push_back(cooking_bot(scenario_id));
  }
  for (auto& s : out) s.seed = rng.next_u64();
  return out;
}

// ---- matrix embodiment ----------------------------------------------

namespace {

PlannerView view_of(const MatrixWorld& mw) {
  PlannerView view;
  view.width = mw.map().width();
  view.height = mw.map().height();
  for (int y = 0; y < view.height; ++y) {
    for (int x = 0; x < view.width; ++x) {
      GridPos p{x, y};
      if (mw.map().blocks_movement(p)) view.walls.insert(p);
    }
  }
  for (const auto& [pos, cell] : mw.resources()) {
    if (cell.present) view.resources[pos] = cell.kind;
  }
  // other players' cells block movement
  for (int i = 0; i < mw.player_count(); ++i) {
    if (mw.player(i).alive()) view.walls.insert(mw.player(i).pos);
  }
  return view;
}

// Fixed-policy opponent: restock the strategy kind to the commitment
// level, then chase the focal player and fire. Operates on full world
// state; these are scripted stand-ins, not learners.
class MatrixBot : public AgentController {
 public:
  MatrixBot(BotSpec spec, PlayerId id, PlayerId focal, uint64_t seed)
      : spec_(spec), id_(id), focal_(focal), rng_(seed) {
    st_.focal_play_counts.assign(3, 0);
  }

  PlayerId player() const override { return id_; }
  std::string name() const override { return bot_variant_name(spec_.variant); }

  AtomicAction act(const World& world, const StepResult* last) override {
    const auto& mw = dynamic_cast<const MatrixWorld&>(world);
    if (last) ingest(*last, mw);
    const MatrixPlayer& me = mw.player(id_);
    if (!me.alive()) return AtomicAction::Noop;
    if (!have_target_) retarget(mw);

    if (!queue_.empty()) {
      AtomicAction a = queue_.front();
      queue_.pop_front();
      return a;
    }

    PlannerView view = view_of(mw);
    view.walls.erase(me.pos);
    int collected = me.inventory.counts[target_kind_] - 1;
    if (collected < commitment_) {
      GridPos dst;
      if (nearest_resource(mw, me.pos, target_kind_, dst)) {
        view.walls.erase(dst);
        if (auto plan = compile_move_to(view, me.pos, me.orientation, dst)) {
          if (!plan->actions.empty()) {
            // take one step and replan next turn; the world shifts under us
            return plan->actions.front();
          }
        }
      }
      return wander(me, view);
    }
    // hunt the focal player
    const MatrixPlayer& prey = mw.player(focal_);
    if (!prey.alive() || !prey.duel_eligible() || !me.duel_eligible()) {
      return AtomicAction::Noop;
    }
    if (auto aim = aim_or_fire(view, me.pos, me.orientation, prey.pos,
                               mw.config().beam_length)) {
      return *aim;
    }
    view.walls.erase(prey.pos);
    if (auto plan = compile_interact(view, me.pos, me.orientation, prey.pos)) {
      if (!plan->actions.empty()) return plan->actions.front();
    }
    return wander(me, view);
  }

 private:
  void ingest(const StepResult& last, const MatrixWorld& mw) {
    for (const GameEvent& e : last.events) {
      if (e.kind != EventKind::Interaction) continue;
      bool mine = e.player == id_ || e.other == id_;
      bool focal_involved = e.player == focal_ || e.other == focal_;
      if (!focal_involved) continue;
      int focal_play = e.player == focal_ ? e.detail / 8 : e.detail % 8;
      if (mine || spec_.variant == BotVariant::Gullible) {
        note_interaction(spec_, st_, focal_play);
        have_target_ = false;
        queue_.clear();
      }
    }
  }

  void retarget(const MatrixWorld& mw) {
    auto [kind, commitment] = rws_next_target(spec_, st_, rng_);
    if (mw.kinds() == 2) {
      kind = pd_next_play(spec_, st_, rng_);
      commitment = spec_.commitment;
    }
    target_kind_ = kind;
    commitment_ = commitment;
    have_target_ = true;
  }

  bool nearest_resource(const MatrixWorld& mw, GridPos from, int kind,
                        GridPos& out) const {
    int best = -1;
    for (const auto& [pos, cell] : mw.resources()) {
      if (!cell.present || cell.kind != kind) continue;
      int d = manhattan(from, pos);
      if (best < 0 || d < best) {
        best = d;
        out = pos;
      }
    }
    return best >= 0;
  }

  AtomicAction wander(const MatrixPlayer& me, const PlannerView& view) {
    GridPos ahead = me.pos + forward_delta(me.orientation);
    if (view.in_bounds(ahead) && !view.walls.count(ahead) &&
        rng_.uniform01() < 0.8) {
      return AtomicAction::StepForward;
    }
    return rng_.uniform01() < 0.5 ? AtomicAction::TurnLeft
                                  : AtomicAction::TurnRight;
  }

  BotSpec spec_;
  BotState st_;
  PlayerId id_;
  PlayerId focal_;
  Rng rng_;
  bool have_target_ = false;
  int target_kind_ = 0;
  int commitment_ = 5;
  std::deque<AtomicAction> queue_;
};

// ---- cooking embodiment ---------------------------------------------

// Role-specialized kitchen loop with full knowledge of its own side.
class CookingBot : public AgentController {
 public:
  CookingBot(BotSpec spec, PlayerId id, uint64_t seed)
      : spec_(spec), id_(id), rng_(seed) {}

  PlayerId player() const override { return id_; }
  std::string name() const override { return bot_variant_name(spec_.variant); }

  AtomicAction act(const World& world, const StepResult*) override {
    if (spec_.variant == BotVariant::Unhelpful) return AtomicAction::Noop;
    const auto& cw = dynamic_cast<const CookingWorld&>(world);
    AtomicAction intended = skilled_step(cw);
    if (spec_.variant == BotVariant::SemiSkilledChef &&
        rng_.uniform01() < spec_.error_prob) {
      return AtomicAction::Noop;
    }
    return intended;
  }

 private:
  PlannerView view_of(const CookingWorld& cw) const {
    PlannerView view;
    view.width = cw.map().width();
    view.height = cw.map().height();
    for (int y = 0; y < view.height; ++y) {
      for (int x = 0; x < view.width; ++x) {
        GridPos p{x, y};
        if (cw.map().blocks_movement(p)) view.walls.insert(p);
      }
    }
    for (int i = 0; i < cw.player_count(); ++i) {
      if (i != id_) view.walls.insert(cw.player(i).pos);
    }
    return view;
  }

  AtomicAction toward(const CookingWorld& cw, GridPos target) {
    PlannerView view = view_of(cw);
    const CookPlayer& me = cw.player(id_);
    if (auto plan = compile_interact(view, me.pos, me.orientation, target)) {
      if (!plan->actions.empty()) return plan->actions.front();
    }
    return AtomicAction::Noop;
  }

  std::optional<GridPos> nearest_station(const CookingWorld& cw,
                                         char legend) const {
    const CookPlayer& me = cw.player(id_);
    auto cells = cw.side_entities(cw.side_of(me.pos), legend);
    std::optional<GridPos> best;
    int best_d = 0;
    for (GridPos c : cells) {
      int d = manhattan(me.pos, c);
      if (!best || d < best_d) {
        best = c;
        best_d = d;
      }
    }
    return best;
  }

  AtomicAction skilled_step(const CookingWorld& cw) {
    const CookPlayer& me = cw.player(id_);
    std::optional<GridPos> cooked;
    std::optional<GridPos> open;
    for (const auto& [pos, pot] : cw.pots()) {
      if (pot.cooked && !cooked) cooked = pos;
      if (!pot.cooked && pot.tomatoes < 3 && !open) open = pos;
    }
    switch (me.held) {
      case HeldItem::Tomato:
        if (open) return toward(cw, *open);
        if (auto c = nearest_station(cw, 'C')) return toward(cw, *c);
        return AtomicAction::Noop;
      case HeldItem::Dish:
        if (cooked) return toward(cw, *cooked);
        return AtomicAction::Noop;  // hold the dish until a pot finishes
      case HeldItem::SoupInDish:
        if (auto d = nearest_station(cw, 'D')) return toward(cw, *d);
        return AtomicAction::Noop;
      case HeldItem::Nothing:
        break;
    }
    // Empty-handed: the side close to the tomato dispenser keeps pots
    // loaded; the side close to delivery plates and delivers. Both fall
    // back to the whole recipe if their specialty has nothing to do.
    auto tomato = nearest_station(cw, 'T');
    auto dish = nearest_station(cw, 'X');
    bool tomato_side = false;
    if (tomato && dish) {
      tomato_side = manhattan(me.pos, *tomato) <= manhattan(me.pos, *dish);
    }
    bool want_plate = cooked.has_value();
    bool want_load = open.has_value();
    if (tomato_side) {
      if (want_load && tomato) return toward(cw, *tomato);
      if (want_plate && dish) return toward(cw, *dish);
    } else {
      if (want_plate && dish) return toward(cw, *dish);
      if (want_load && tomato) return toward(cw, *tomato);
    }
    return AtomicAction::Noop;
  }

  BotSpec spec_;
  PlayerId id_;
  Rng rng_;
};

}  // namespace

std::unique_ptr<AgentController> make_matrix_bot(BotSpec spec, PlayerId id,
                                                 PlayerId focal,
                                                 uint64_t seed) {
  return std::make_unique<MatrixBot>(spec, id, focal, seed);
}

std::unique_ptr<AgentController> make_cooking_bot(BotSpec spec, PlayerId id,
                                                  uint64_t seed) {
  return std::make_unique<CookingBot>(spec, id, seed);
}

}  // namespace hm
