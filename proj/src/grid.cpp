#include "hm/grid.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hm {

GridMap GridMap::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw ContractViolation("empty map file");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream header(line);
  std::string magic, version, substrate;
  header >> magic >> version >> substrate;
  if (magic != "hmmap" || version != "v1" || substrate.empty()) {
    throw ContractViolation("bad map header: expected 'hmmap v1 <substrate>'");
  }
  GridMap m;
  m.substrate_ = substrate;
  std::vector<std::pair<int, GridPos>> spawn_list;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    m.rows_.push_back(line);
  }
  if (m.rows_.empty()) throw ContractViolation("map has no rows");
  m.height_ = static_cast<int>(m.rows_.size());
  m.width_ = static_cast<int>(m.rows_[0].size());
  for (int y = 0; y < m.height_; ++y) {
    if (static_cast<int>(m.rows_[y].size()) != m.width_) {
      throw ContractViolation("ragged map row " + std::to_string(y));
    }
    for (int x = 0; x < m.width_; ++x) {
      char c = m.rows_[y][x];
      if (c >= '0' && c <= '7') {
        spawn_list.emplace_back(c - '0', GridPos{x, y});
        m.rows_[y][x] = '.';
      }
    }
  }
  std::sort(spawn_list.begin(), spawn_list.end());
  for (auto& [idx, pos] : spawn_list) m.spawns_.push_back(pos);
  return m;
}

GridMap GridMap::load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ContractViolation("cannot open map file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse(buf.str());
}

std::vector<GridPos> GridMap::cells_of(char legend) const {
  std::vector<GridPos> out;
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) {
      if (rows_[y][x] == legend) out.push_back({x, y});
    }
  }
  return out;
}

}  // namespace hm
