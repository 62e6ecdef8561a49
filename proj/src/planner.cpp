#include "hm/planner.hpp"

#include <algorithm>
#include <queue>

namespace hm {

namespace {

const std::array<GridPos, 4> kDirs = {GridPos{0, -1}, GridPos{1, 0},
                                      GridPos{0, 1}, GridPos{-1, 0}};

}  // namespace

AtomicAction strafe_toward(Orientation orientation, GridPos d) {
  GridPos f = forward_delta(orientation);
  if (d == f) return AtomicAction::StepForward;
  if (d == GridPos{-f.x, -f.y}) return AtomicAction::StepBackward;
  GridPos r = forward_delta(turn_right(orientation));
  if (d == r) return AtomicAction::StepRight;
  return AtomicAction::StepLeft;
}

std::vector<AtomicAction> turns_to_face(GridPos pos, Orientation orientation,
                                        GridPos target) {
  GridPos d{target.x - pos.x, target.y - pos.y};
  std::vector<AtomicAction> out;
  Orientation o = orientation;
  for (int i = 0; i < 4; ++i) {
    if (forward_delta(o) == d) {
      if (out.size() == 3) return {AtomicAction::TurnLeft};
      return out;
    }
    o = turn_right(o);
    out.push_back(AtomicAction::TurnRight);
  }
  // Not adjacent; fall back to no turns.
  return {};
}

std::optional<std::vector<GridPos>> shortest_path(
    const PlannerView& view, GridPos src, GridPos dst,
    const std::set<GridPos>& extra_obstacles) {
  if (!view.in_bounds(src) || !view.in_bounds(dst)) return std::nullopt;
  if (view.walls.count(dst) || extra_obstacles.count(dst)) return std::nullopt;
  if (src == dst) return std::vector<GridPos>{src};

  // A* over cells; Manhattan heuristic; deterministic tie-breaking via
  // (f, g, pos) ordering.
  struct Node {
    int f;
    int g;
    GridPos pos;
    bool operator>(const Node& o) const {
      if (f != o.f) return f > o.f;
      if (g != o.g) return g > o.g;
      return pos > o.pos;
    }
  };
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> open;
  std::map<GridPos, int> best_g;
  std::map<GridPos, GridPos> parent;
  open.push({manhattan(src, dst), 0, src});
  best_g[src] = 0;
  while (!open.empty()) {
    Node n = open.top();
    open.pop();
    if (n.g > best_g[n.pos]) continue;
    if (n.pos == dst) {
      std::vector<GridPos> path;
      GridPos cur = dst;
      while (!(cur == src)) {
        path.push_back(cur);
        cur = parent[cur];
      }
      path.push_back(src);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (GridPos d : kDirs) {
      GridPos next{n.pos.x + d.x, n.pos.y + d.y};
      if (!view.in_bounds(next) || view.walls.count(next)) continue;
      if (!(next == dst) && extra_obstacles.count(next)) continue;
      int g = n.g + 1;
      auto it = best_g.find(next);
      if (it != best_g.end() && it->second <= g) continue;
      best_g[next] = g;
      parent[next] = n.pos;
      open.push({g + manhattan(next, dst), g, next});
    }
  }
  return std::nullopt;
}

std::optional<MovePlan> compile_move_to(const PlannerView& view, GridPos src,
                                        Orientation orientation, GridPos dst) {
  if (src == dst) return MovePlan{{}, ObstacleTier::AvoidAllOtherResources, {src}};

  int target_kind = -1;
  if (auto it = view.resources.find(dst); it != view.resources.end()) {
    target_kind = it->second;
  }
  for (ObstacleTier tier :
       {ObstacleTier::AvoidAllOtherResources,
        ObstacleTier::AllowSameKindAsTarget, ObstacleTier::AllowAny}) {
    std::set<GridPos> obstacles;
    for (const auto& [pos, kind] : view.resources) {
      if (pos == dst) continue;
      bool blocks = false;
      switch (tier) {
        case ObstacleTier::AvoidAllOtherResources: blocks = true; break;
        case ObstacleTier::AllowSameKindAsTarget:
          blocks = kind != target_kind;
          break;
        case ObstacleTier::AllowAny: blocks = false; break;
      }
      if (blocks) obstacles.insert(pos);
    }
    auto path = shortest_path(view, src, dst, obstacles);
    if (!path) continue;
    MovePlan plan;
    plan.tier = tier;
    plan.cells = *path;
    for (size_t i = 1; i < path->size(); ++i) {
      GridPos d{(*path)[i].x - (*path)[i - 1].x,
                (*path)[i].y - (*path)[i - 1].y};
      plan.actions.push_back(strafe_toward(orientation, d));
    }
    return plan;
  }
  return std::nullopt;
}

std::optional<AtomicAction> aim_or_fire(const PlannerView& view, GridPos pos,
                                        Orientation orientation,
                                        GridPos opponent, int beam_length) {
  GridPos d{opponent.x - pos.x, opponent.y - pos.y};
  if (d.x != 0 && d.y != 0) return std::nullopt;
  int dist = std::abs(d.x) + std::abs(d.y);
  if (dist == 0 || dist > beam_length) return std::nullopt;
  GridPos unit{d.x == 0 ? 0 : d.x / dist, d.y == 0 ? 0 : d.y / dist};
  // a wall between blocks the beam
  GridPos cell = pos;
  for (int k = 1; k < dist; ++k) {
    cell = {cell.x + unit.x, cell.y + unit.y};
    if (view.walls.count(cell)) return std::nullopt;
  }
  if (forward_delta(orientation) == unit) return AtomicAction::FireBeam;
  if (forward_delta(turn_right(orientation)) == unit) {
    return AtomicAction::TurnRight;
  }
  return AtomicAction::TurnLeft;
}

std::optional<MovePlan> compile_interact(const PlannerView& view, GridPos src,
                                         Orientation orientation,
                                         GridPos target) {
  // Already adjacent: face and interact.
  if (manhattan(src, target) == 1) {
    MovePlan plan;
    plan.cells = {src};
    plan.actions = turns_to_face(src, orientation, target);
    plan.actions.push_back(AtomicAction::FireBeam);
    return plan;
  }
  std::optional<MovePlan> best;
  for (GridPos d : kDirs) {
    GridPos adj{target.x + d.x, target.y + d.y};
    if (!view.in_bounds(adj) || view.walls.count(adj)) continue;
    auto plan = compile_move_to(view, src, orientation, adj);
    if (!plan) continue;
    if (!best || plan->actions.size() < best->actions.size()) best = plan;
  }
  if (!best) return std::nullopt;
  GridPos end = best->cells.back();
  auto turns = turns_to_face(end, orientation, target);
  best->actions.insert(best->actions.end(), turns.begin(), turns.end());
  best->actions.push_back(AtomicAction::FireBeam);
  return best;
}

}  // namespace hm
