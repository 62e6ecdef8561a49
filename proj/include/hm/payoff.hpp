#pragma once

#include <array>
#include <string>
#include <vector>

#include "hm/core.hpp"

namespace hm {

// Resource counts per kind, the matrix-game strategy commitment.
struct Inventory {
  std::vector<int> counts;

  int total() const {
    int t = 0;
    for (int c : counts) t += c;
    return t;
  }
  // Index of the most-held kind, lowest index on ties.
  int argmax() const {
    int best = 0;
    for (size_t i = 1; i < counts.size(); ++i) {
      if (counts[i] > counts[best]) best = static_cast<int>(i);
    }
    return best;
  }
  static Inventory ones(int kinds) { return Inventory{std::vector<int>(kinds, 1)}; }
  friend bool operator==(const Inventory&, const Inventory&) = default;
};

struct PayoffMatrix {
  // How the column player's reward relates to the row computation.
  enum class ColumnRule { NegateRow, TransposeMatrix };

  std::vector<std::vector<double>> entries;  // A_row, K x K
  ColumnRule column_rule = ColumnRule::NegateRow;

  int kinds() const { return static_cast<int>(entries.size()); }

  static PayoffMatrix rws();  // [[0,-10,10],[10,0,-10],[-10,10,0]], zero-sum
  static PayoffMatrix pd();   // [[3,0],[5,1]], column payoff transposed
};

struct InteractionReward {
  double row = 0.0;
  double col = 0.0;
};

// r_row = v_row^T A_row v_col with v the L1-normalized inventory.
InteractionReward resolve_interaction(const Inventory& inv_row,
                                      const Inventory& inv_col,
                                      const PayoffMatrix& payoff);

// RWS resource-kind indices and names.
inline constexpr int kRock = 0;     // yellow
inline constexpr int kPaper = 1;    // purple
inline constexpr int kScissors = 2; // blue
inline constexpr int kCooperate = 0;  // green
inline constexpr int kDefect = 1;     // red

// The kind that beats `kind` in the rock-paper-scissors cycle.
int rws_counter(int kind);

const char* rws_kind_name(int kind);      // "rock" / "paper" / "scissors"
const char* rws_color_name(int kind);     // "yellow" / "purple" / "blue"
const char* pd_kind_name(int kind);       // "cooperate" / "defect"

}  // namespace hm
