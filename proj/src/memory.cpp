#include "hm/memory.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hm/payoff.hpp"

namespace hm {

namespace {

std::string snake_case(const std::string& label) {
  std::string out;
  for (char c : label) {
    if (c == ' ') {
      out.push_back('_');
    } else {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

}  // namespace

void EntityMemory::update(const StructuredObservation& obs) {
  for (const auto& [label, cells] : obs.entities) {
    auto* existing = const_cast<std::vector<Entry>*>(find(label));
    if (!existing) {
      kinds_.emplace_back(label, std::vector<Entry>{});
      existing = &kinds_.back().second;
    }
    // Drop remembered entries whose cell is in view but no longer listed.
    std::erase_if(*existing, [&](const Entry& e) {
      if (!in_window(obs.pos, obs.orientation, e.pos, fwd_, back_, side_)) {
        return false;
      }
      return std::find(cells.begin(), cells.end(), e.pos) == cells.end();
    });
    for (GridPos cell : cells) {
      auto it = std::find_if(existing->begin(), existing->end(),
                             [&](const Entry& e) { return e.pos == cell; });
      if (it != existing->end()) {
        it->last_seen = obs.step;
      } else {
        existing->push_back(Entry{cell, obs.step});
      }
    }
    std::sort(existing->begin(), existing->end(),
              [](const Entry& a, const Entry& b) { return a.pos < b.pos; });
  }
}

const std::vector<EntityMemory::Entry>* EntityMemory::find(
    const std::string& label) const {
  for (const auto& [k, v] : kinds_) {
    if (k == label) return &v;
  }
  return nullptr;
}

std::string EntityMemory::render(GridPos from) const {
  std::ostringstream os;
  bool first_kind = true;
  for (const auto& [label, entries] : kinds_) {
    if (label == "Wall") continue;  // walls never move; noise in prompts
    if (!first_kind) os << ", ";
    first_kind = false;
    os << '\'' << snake_case(label) << "': [";
    for (size_t i = 0; i < entries.size(); ++i) {
      if (i) os << ", ";
      const Entry& e = entries[i];
      os << "((" << e.pos.x << ", " << e.pos.y << "), 'Step: " << e.last_seen
         << "', 'Distance: " << manhattan(from, e.pos) << "')";
    }
    os << ']';
  }
  return os.str();
}

std::string render_interaction_history(
    const std::vector<InteractionRecord>& history, int kinds) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < history.size(); ++i) {
    if (i) os << ", ";
    const InteractionRecord& r = history[i];
    os << "{'round': " << (i + 1) << ", 'step': " << r.step << ", ";
    os << "'your_inventory': {";
    for (int k = 0; k < kinds; ++k) {
      if (k) os << ", ";
      if (kinds == 3) {
        os << '\'' << rws_kind_name(k) << '/' << rws_color_name(k) << "': ";
      } else {
        os << '\'' << pd_kind_name(k) << '\'' << ": ";
      }
      os << r.own_inventory.counts[k];
    }
    os << "}, 'rewards': " << r.reward;
    if (r.own_feature >= 0) {
      os << ", 'my_play': '"
         << (kinds == 3 ? rws_kind_name(r.own_feature)
                        : pd_kind_name(r.own_feature))
         << '\'';
    }
    if (r.opponent_feature >= 0) {
      os << ", 'opponent_play': '"
         << (kinds == 3 ? rws_kind_name(r.opponent_feature)
                        : pd_kind_name(r.opponent_feature))
         << '\'';
    }
    os << '}';
  }
  os << ']';
  return os.str();
}

}  // namespace hm
