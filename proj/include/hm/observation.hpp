#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hm/core.hpp"
#include "hm/payoff.hpp"

namespace hm {

// What one player can see this step, in absolute map coordinates.
struct StructuredObservation {
  PlayerId self = 0;
  GridPos pos{};
  Orientation orientation = Orientation::North;
  int step = 0;
  Inventory inventory;  // matrix substrates; empty for cooking
  std::string held;     // cooking held item; empty for matrix substrates
  // Fixed-order entity lists, e.g. {"Yellow Box", [...]}, {"Opponent", [...]}.
  std::vector<std::pair<std::string, std::vector<GridPos>>> entities;

  const std::vector<GridPos>* find(const std::string& label) const {
    for (const auto& [k, v] : entities) {
      if (k == label) return &v;
    }
    return nullptr;
  }

  friend bool operator==(const StructuredObservation&,
                         const StructuredObservation&) = default;
};

// True if `cell` lies in the egocentric window of a player at `self`
// facing `o`: fwd cells ahead, back behind, side to each side.
bool in_window(GridPos self, Orientation o, GridPos cell, int fwd, int back,
               int side);

// The prompt-visible position-and-entities line, e.g.
// "Player Position: {'player_0-S': [(21, 4)]}, Observable Yellow Box
//  Locations: [(13, 10), (14, 11)], ...".
std::string serialize_observation(const StructuredObservation& obs);

// serialize_observation plus inventory/held-item and step lines; injective
// on the observation.
std::string serialize_observation_full(const StructuredObservation& obs);

// Inverse of serialize_observation_full (entity lists, pose, inventory,
// held item, step).
std::optional<StructuredObservation> parse_observation(const std::string& text);

}  // namespace hm
