#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hm/observation.hpp"

namespace hm {

// Where-was-what memory: per entity kind, coordinates with the step they
// were last seen. Entries are dropped when the window shows their cell
// without the entity; otherwise they persist (possibly stale).
class EntityMemory {
 public:
  EntityMemory(int window_forward, int window_back, int window_side)
      : fwd_(window_forward), back_(window_back), side_(window_side) {}

  void update(const StructuredObservation& obs);

  struct Entry {
    GridPos pos;
    int last_seen = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  const std::vector<Entry>* find(const std::string& label) const;
  const std::vector<std::pair<std::string, std::vector<Entry>>>& kinds() const {
    return kinds_;
  }

  // Paper-style listing with Manhattan distance from `from`:
  // 'yellow_box': [((13, 3), 'Step: 1087', 'Distance: 2'), ...]
  std::string render(GridPos from) const;

 private:
  int fwd_, back_, side_;
  std::vector<std::pair<std::string, std::vector<Entry>>> kinds_;
};

// One duel's worth of ToM-relevant data.
struct InteractionRecord {
  int step = 0;
  PlayerId opponent = -1;
  Inventory own_inventory;
  double reward = 0.0;
  std::optional<Inventory> estimated_opponent_inventory;  // ToM step 1
  int own_feature = -1;       // argmax kind I played
  int opponent_feature = -1;  // argmax kind they (estimated) played
};

std::string render_interaction_history(
    const std::vector<InteractionRecord>& history, int kinds);

}  // namespace hm
