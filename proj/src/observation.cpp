#include "hm/observation.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace hm {

bool in_window(GridPos self, Orientation o, GridPos cell, int fwd, int back,
               int side) {
  GridPos d{cell.x - self.x, cell.y - self.y};
  GridPos f = forward_delta(o);
  // right-hand lateral axis
  GridPos r = forward_delta(turn_right(o));
  int fc = d.x * f.x + d.y * f.y;
  int lc = d.x * r.x + d.y * r.y;
  return fc >= -back && fc <= fwd && lc >= -side && lc <= side;
}

namespace {

std::string coord_list(const std::vector<GridPos>& cells) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ", ";
    os << '(' << cells[i].x << ", " << cells[i].y << ')';
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string serialize_observation(const StructuredObservation& obs) {
  std::ostringstream os;
  os << "Player Position: {'player_" << obs.self << '-'
     << orientation_letter(obs.orientation) << "': [(" << obs.pos.x << ", "
     << obs.pos.y << ")]}";
  for (const auto& [label, cells] : obs.entities) {
    os << ", Observable " << label << " Locations: " << coord_list(cells);
  }
  return os.str();
}

std::string serialize_observation_full(const StructuredObservation& obs) {
  std::ostringstream os;
  os << serialize_observation(obs);
  if (!obs.inventory.counts.empty()) {
    os << ", Inventory: [";
    for (size_t i = 0; i < obs.inventory.counts.size(); ++i) {
      if (i) os << ", ";
      os << obs.inventory.counts[i];
    }
    os << ']';
  }
  if (!obs.held.empty()) os << ", Held: '" << obs.held << '\'';
  os << ", Step: " << obs.step;
  return os.str();
}

namespace {

std::optional<std::vector<GridPos>> parse_coord_list(const std::string& text,
                                                     size_t& pos) {
  std::vector<GridPos> out;
  size_t open = text.find('[', pos);
  if (open == std::string::npos) return std::nullopt;
  size_t close = text.find(']', open);
  if (close == std::string::npos) return std::nullopt;
  size_t i = open + 1;
  while (true) {
    size_t paren = text.find('(', i);
    if (paren == std::string::npos || paren > close) break;
    int x = 0, y = 0;
    if (std::sscanf(text.c_str() + paren, "(%d, %d)", &x, &y) != 2) {
      return std::nullopt;
    }
    out.push_back({x, y});
    i = text.find(')', paren);
    if (i == std::string::npos) return std::nullopt;
  }
  pos = close + 1;
  return out;
}

}  // namespace

std::optional<StructuredObservation> parse_observation(const std::string& text) {
  StructuredObservation obs;
  int self = 0, x = 0, y = 0;
  char orient = 0;
  size_t head = text.find("Player Position: {'player_");
  if (head == std::string::npos) return std::nullopt;
  if (std::sscanf(text.c_str() + head,
                  "Player Position: {'player_%d-%c': [(%d, %d)]}", &self,
                  &orient, &x, &y) != 4) {
    return std::nullopt;
  }
  obs.self = self;
  obs.pos = {x, y};
  switch (orient) {
    case 'N': obs.orientation = Orientation::North; break;
    case 'E': obs.orientation = Orientation::East; break;
    case 'S': obs.orientation = Orientation::South; break;
    case 'W': obs.orientation = Orientation::West; break;
    default: return std::nullopt;
  }
  size_t pos = head;
  while (true) {
    size_t mark = text.find("Observable ", pos);
    if (mark == std::string::npos) break;
    size_t loc = text.find(" Locations:", mark);
    if (loc == std::string::npos) return std::nullopt;
    std::string label = text.substr(mark + 11, loc - mark - 11);
    size_t cursor = loc;
    auto cells = parse_coord_list(text, cursor);
    if (!cells) return std::nullopt;
    obs.entities.emplace_back(label, std::move(*cells));
    pos = cursor;
  }
  size_t inv = text.find(", Inventory: [", pos);
  if (inv != std::string::npos) {
    size_t close = text.find(']', inv);
    std::istringstream nums(text.substr(inv + 14, close - inv - 14));
    std::string tok;
    while (std::getline(nums, tok, ',')) {
      obs.inventory.counts.push_back(std::stoi(tok));
    }
  }
  size_t held = text.find(", Held: '", pos);
  if (held != std::string::npos) {
    size_t start = held + 9;
    size_t end = text.find('\'', start);
    if (end == std::string::npos) return std::nullopt;
    obs.held = text.substr(start, end - start);
  }
  size_t step = text.find(", Step: ", pos);
  if (step != std::string::npos) {
    obs.step = std::atoi(text.c_str() + step + 8);
  }
  return obs;
}

}  // namespace hm
