#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hm/core.hpp"
#include "hm/literal.hpp"

namespace hm {

// One action-function invocation from a reasoner action plan.
struct SubgoalCall {
  enum class Kind { MoveTo, FireAt, Interact, Wait };
  Kind kind;
  GridPos src{};     // MoveTo only
  GridPos target{};
  friend bool operator==(const SubgoalCall&, const SubgoalCall&) = default;
};

std::string to_string(const SubgoalCall& call);

struct PlanParseError {
  std::string message;
};

struct PlanParseResult {
  std::vector<SubgoalCall> plan;
  std::optional<PlanParseError> error;
  bool ok() const { return !error.has_value(); }
};

// Parse one call string, e.g. "move_to((11, 7), (9, 5))" or
// "interact((5, 1))".
PlanParseResult parse_call(std::string_view text);

// v must be a map with an 'action_plan' list of call strings.
PlanParseResult parse_action_plan(const LiteralValue& v);

// Convenience: extract_block + parse_literal + parse_action_plan.
PlanParseResult parse_action_plan_text(std::string_view response);

}  // namespace hm
