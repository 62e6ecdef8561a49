#pragma once

#include <string>
#include <vector>

#include "hm/core.hpp"

namespace hm {

// Text map format: a "hmmap v1 <substrate>" header line followed by one
// row per line, one character per cell. Legend:
//   '#' wall        '.' floor       '0'..'7' spawn points
//   'y' yellow/rock 'p' purple/paper 'b' blue/scissors   (RWS)
//   'g' green/cooperate  'r' red/defect                  (PD)
//   'T' tomato dispenser 'X' dish dispenser 'D' delivery
//   'P' pot 'C' counter                                  (cooking)
class GridMap {
 public:
  static GridMap parse(const std::string& text);
  static GridMap load_file(const std::string& path);

  int width() const { return width_; }
  int height() const { return height_; }
  const std::string& substrate() const { return substrate_; }

  bool in_bounds(GridPos p) const {
    return p.x >= 0 && p.x < width_ && p.y >= 0 && p.y < height_;
  }
  char at(GridPos p) const { return rows_[p.y][p.x]; }

  // Anything an agent cannot stand on.
  bool blocks_movement(GridPos p) const {
    if (!in_bounds(p)) return true;
    char c = at(p);
    return c == '#' || c == 'T' || c == 'X' || c == 'D' || c == 'P' ||
           c == 'C';
  }

  const std::vector<GridPos>& spawns() const { return spawns_; }
  std::vector<GridPos> cells_of(char legend) const;

 private:
  int width_ = 0;
  int height_ = 0;
  std::string substrate_;
  std::vector<std::string> rows_;
  std::vector<GridPos> spawns_;
};

}  // namespace hm
