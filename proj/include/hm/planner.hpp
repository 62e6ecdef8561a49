#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hm/core.hpp"

namespace hm {

// A planning snapshot: static walls plus currently present resources.
// Built either from full world state (scripted bots) or from an agent's
// observation and memory (focal agents plan through unseen space).
struct PlannerView {
  int width = 0;
  int height = 0;
  std::set<GridPos> walls;
  std::map<GridPos, int> resources;  // cell -> resource kind

  bool in_bounds(GridPos p) const {
    return p.x >= 0 && p.x < width && p.y >= 0 && p.y < height;
  }
};

// Resource-avoidance tiers, tried strictest first.
enum class ObstacleTier {
  AvoidAllOtherResources,  // any resource cell except dst blocks
  AllowSameKindAsTarget,   // only resources of a different kind block
  AllowAny,                // only walls block
};

struct MovePlan {
  std::vector<AtomicAction> actions;
  ObstacleTier tier = ObstacleTier::AvoidAllOtherResources;
  std::vector<GridPos> cells;  // path including src and dst
};

// Shortest path src -> dst under the least permissive feasible tier,
// rendered as strafe moves (orientation is never changed). Empty plan if
// src == dst; nullopt if unreachable under every tier.
std::optional<MovePlan> compile_move_to(const PlannerView& view, GridPos src,
                                        Orientation orientation, GridPos dst);

// Path length of the cheapest route under an explicit obstacle set, or
// nullopt. Used by compile_move_to internally.
std::optional<std::vector<GridPos>> shortest_path(
    const PlannerView& view, GridPos src, GridPos dst,
    const std::set<GridPos>& extra_obstacles);

// FireBeam if `opponent` is straight ahead within beam_length with no wall
// in between, a turn toward it if it is in beam range on another axis,
// otherwise nullopt (caller repositions or scans).
std::optional<AtomicAction> aim_or_fire(const PlannerView& view, GridPos pos,
                                        Orientation orientation,
                                        GridPos opponent, int beam_length);

// Path to a walkable cell adjacent to `target`, then turns to face it,
// then the interaction action. nullopt if no adjacent cell is reachable.
std::optional<MovePlan> compile_interact(const PlannerView& view, GridPos src,
                                         Orientation orientation,
                                         GridPos target);

// The turns needed to face `target` from `pos` (adjacent cells only).
std::vector<AtomicAction> turns_to_face(GridPos pos, Orientation orientation,
                                        GridPos target);

// The strafe action moving one cell in direction d without turning.
AtomicAction strafe_toward(Orientation orientation, GridPos d);

}  // namespace hm
