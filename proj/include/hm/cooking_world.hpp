#pragma once

#include <map>
#include <vector>

#include "hm/world.hpp"

namespace hm {

enum class HeldItem : uint8_t { Nothing, Tomato, Dish, SoupInDish };

const char* held_item_name(HeldItem h);

struct PotState {
  int tomatoes = 0;     // 0..3
  int cook_timer = 0;   // counts down once full
  bool cooked = false;
};

struct CookingConfig {
  int max_steps = 1200;
  uint64_t seed = 0;
  int cook_duration = 20;
  int window_forward = 3;
  int window_back = 1;
  int window_side = 2;
};

struct CookPlayer {
  GridPos pos{};
  Orientation orientation = Orientation::South;
  HeldItem held = HeldItem::Nothing;
};

// Collaborative Cooking Asymmetric: divided kitchen, shared pots on the
// barrier column, +20 team reward per delivered soup. The interact verb
// rides on FireBeam: it targets the cell directly ahead.
class CookingWorld : public World {
 public:
  CookingWorld(GridMap map, CookingConfig config);

  int player_count() const override {
    return static_cast<int>(players_.size());
  }
  int step_count() const override { return step_; }
  int max_steps() const override { return config_.max_steps; }
  bool done() const override { return step_ >= config_.max_steps; }
  const GridMap& map() const override { return map_; }

  StepResult step(const JointAction& joint) override;
  StructuredObservation observe(PlayerId player) const override;

  const CookPlayer& player(PlayerId id) const { return players_.at(id); }
  const std::map<GridPos, PotState>& pots() const { return pots_; }
  const CookingConfig& config() const { return config_; }

  // 0 for x < barrier, 1 for x > barrier.
  int side_of(GridPos p) const { return p.x < barrier_x_ ? 0 : 1; }
  int barrier_x() const { return barrier_x_; }

  // Entities adjacent-interactable from `side` (walls carrying T/X/D/C
  // plus pots on the barrier).
  std::vector<GridPos> side_entities(int side, char legend) const;

 private:
  GameEvent interact_with(PlayerId id, GridPos target,
                          std::vector<double>& rewards);
  void tick_pots();

  GridMap map_;
  CookingConfig config_;
  std::vector<CookPlayer> players_;
  std::map<GridPos, PotState> pots_;
  std::map<GridPos, HeldItem> counter_items_;
  Rng rng_;
  int step_ = 0;
  int barrier_x_ = 4;
};

CookingWorld make_cooking_world(const std::string& map_text, int max_steps,
                                uint64_t seed);

// The teammate-action vocabulary used in ToM prompts, e.g.
// "Teammate picked up a dish" for PickedDish.
std::string teammate_action_label(EventKind kind);

}  // namespace hm
