#include "hm/payoff.hpp"

namespace hm {

PayoffMatrix PayoffMatrix::rws() {
  PayoffMatrix m;
  m.entries = {{0, -10, 10}, {10, 0, -10}, {-10, 10, 0}};
  m.column_rule = ColumnRule::NegateRow;
  return m;
}

PayoffMatrix PayoffMatrix::pd() {
  PayoffMatrix m;
  m.entries = {{3, 0}, {5, 1}};
  m.column_rule = ColumnRule::TransposeMatrix;
  return m;
}

InteractionReward resolve_interaction(const Inventory& inv_row,
                                      const Inventory& inv_col,
                                      const PayoffMatrix& payoff) {
  const int k = payoff.kinds();
  if (static_cast<int>(inv_row.counts.size()) != k ||
      static_cast<int>(inv_col.counts.size()) != k) {
    throw ContractViolation("resolve_interaction: inventory arity mismatch");
  }
  const int tr = inv_row.total();
  const int tc = inv_col.total();
  if (tr <= 0 || tc <= 0) {
    throw ContractViolation("resolve_interaction: zero-total inventory");
  }
  std::vector<double> vr(k), vc(k);
  for (int i = 0; i < k; ++i) {
    vr[i] = static_cast<double>(inv_row.counts[i]) / tr;
    vc[i] = static_cast<double>(inv_col.counts[i]) / tc;
  }
  double r_row = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      r_row += vr[i] * payoff.entries[i][j] * vc[j];
    }
  }
  double r_col;
  if (payoff.column_rule == PayoffMatrix::ColumnRule::NegateRow) {
    r_col = -r_row;
  } else {
    r_col = 0.0;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        r_col += vc[i] * payoff.entries[i][j] * vr[j];
      }
    }
  }
  return {r_row, r_col};
}

int rws_counter(int kind) {
  switch (kind) {
    case kRock: return kPaper;
    case kPaper: return kScissors;
    case kScissors: return kRock;
  }
  throw ContractViolation("rws_counter: bad kind");
}

const char* rws_kind_name(int kind) {
  switch (kind) {
    case kRock: return "rock";
    case kPaper: return "paper";
    case kScissors: return "scissors";
  }
  return "?";
}

const char* rws_color_name(int kind) {
  switch (kind) {
    case kRock: return "yellow";
    case kPaper: return "purple";
    case kScissors: return "blue";
  }
  return "?";
}

const char* pd_kind_name(int kind) {
  return kind == kCooperate ? "cooperate" : "defect";
}

}  // namespace hm
