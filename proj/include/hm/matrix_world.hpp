#pragma once

#include <map>
#include <vector>

#include "hm/payoff.hpp"
#include "hm/world.hpp"

namespace hm {

struct MatrixWorldConfig {
  int max_steps = 1200;
  uint64_t seed = 0;
  int beam_length = 3;
  int respawn_delay = 5;
  int regrow_delay = 10;
  int window_forward = 3;
  int window_back = 1;
  int window_side = 2;
};

struct MatrixPlayer {
  GridPos pos{};
  Orientation orientation = Orientation::North;
  Inventory inventory;
  GridPos spawn{};
  int respawn_timer = 0;  // >0: off the grid, counting down

  bool alive() const { return respawn_timer == 0; }
  // Needs at least 2 of some resource to enter a duel.
  bool duel_eligible() const {
    for (int c : inventory.counts) {
      if (c >= 2) return true;
    }
    return false;
  }
};

struct ResourceCell {
  int kind = 0;
  bool present = true;
  int regrow_timer = 0;
};

// The "* in the Matrix" grid worlds: resource collection, interaction
// beams, payoff resolution, respawn. Covers RWS Repeated, RWS Arena and
// PD Repeated; they differ only in map, payoff, player count and window.
class MatrixWorld : public World {
 public:
  MatrixWorld(GridMap map, PayoffMatrix payoff, int player_count,
              MatrixWorldConfig config);

  int player_count() const override {
    return static_cast<int>(players_.size());
  }
  int step_count() const override { return step_; }
  int max_steps() const override { return config_.max_steps; }
  bool done() const override { return step_ >= config_.max_steps; }
  const GridMap& map() const override { return map_; }

  StepResult step(const JointAction& joint) override;
  StructuredObservation observe(PlayerId player) const override;

  const MatrixPlayer& player(PlayerId id) const { return players_.at(id); }
  const PayoffMatrix& payoff() const { return payoff_; }
  int kinds() const { return payoff_.kinds(); }
  const std::map<GridPos, ResourceCell>& resources() const {
    return resources_;
  }
  const MatrixWorldConfig& config() const { return config_; }

  // Entity label for a resource kind ("Yellow Box" etc.).
  std::string kind_label(int kind) const;

  std::vector<GridPos> walkable_cells() const;

 private:
  void apply_moves(const JointAction& joint, std::vector<GameEvent>& events);
  void apply_fires(const JointAction& joint, StepResult& result);
  void tick_timers(std::vector<GameEvent>& events);
  GridPos free_spawn_for(PlayerId id) const;

  GridMap map_;
  PayoffMatrix payoff_;
  MatrixWorldConfig config_;
  std::vector<MatrixPlayer> players_;
  std::map<GridPos, ResourceCell> resources_;
  Rng rng_;
  int step_ = 0;
};

// Builds the stock world for a substrate id ("rws_repeated", "rws_arena",
// "pd_repeated") from the bundled map data.
MatrixWorld make_matrix_world(const std::string& substrate,
                              const std::string& map_text, int max_steps,
                              uint64_t seed);

// Bundled default map text for a substrate.
const std::string& default_map_text(const std::string& substrate);

}  // namespace hm
