#include "hm/plan.hpp"

#include <cctype>
#include <sstream>

namespace hm {

namespace {

const char* kind_name(SubgoalCall::Kind k) {
  switch (k) {
    case SubgoalCall::Kind::MoveTo: return "move_to";
    case SubgoalCall::Kind::FireAt: return "fire_at";
    case SubgoalCall::Kind::Interact: return "interact";
    case SubgoalCall::Kind::Wait: return "wait";
  }
  return "?";
}

PlanParseResult fail(std::string msg) {
  return PlanParseResult{{}, PlanParseError{std::move(msg)}};
}

std::optional<GridPos> as_coord(const LiteralValue& v) {
  if (!v.is(LiteralValue::Kind::Tuple) || v.items().size() != 2) {
    return std::nullopt;
  }
  const auto& items = v.items();
  if (!items[0].is(LiteralValue::Kind::Int) ||
      !items[1].is(LiteralValue::Kind::Int)) {
    return std::nullopt;
  }
  return GridPos{static_cast<int>(items[0].as_int()),
                 static_cast<int>(items[1].as_int())};
}

}  // namespace

std::string to_string(const SubgoalCall& call) {
  std::ostringstream os;
  os << kind_name(call.kind) << '(';
  if (call.kind == SubgoalCall::Kind::MoveTo) {
    os << '(' << call.src.x << ", " << call.src.y << "), ";
  }
  os << '(' << call.target.x << ", " << call.target.y << "))";
  return os.str();
}

PlanParseResult parse_call(std::string_view text) {
  size_t i = 0;
  while (i < text.size() &&
         std::isspace(static_cast<unsigned char>(text[i]))) {
    ++i;
  }
  size_t name_start = i;
  while (i < text.size() &&
         (std::isalnum(static_cast<unsigned char>(text[i])) ||
          text[i] == '_')) {
    ++i;
  }
  std::string name(text.substr(name_start, i - name_start));
  size_t open = text.find('(', i);
  size_t close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos ||
      close <= open) {
    return fail("malformed call '" + std::string(text) + "'");
  }
  // Arguments form a tuple of coordinate tuples.
  std::string inner(text.substr(open + 1, close - open - 1));
  while (!inner.empty() &&
         (std::isspace(static_cast<unsigned char>(inner.back())) ||
          inner.back() == ',')) {
    inner.pop_back();
  }
  std::string args = "(" + inner + ",)";
  auto parsed = parse_literal(args);
  if (!parsed.ok()) {
    return fail("bad arguments in '" + std::string(text) +
                "': " + parsed.error->message);
  }
  std::vector<GridPos> coords;
  for (const auto& item : parsed.value->items()) {
    auto c = as_coord(item);
    if (!c) {
      return fail("argument of '" + name +
                  "' is not an integer coordinate pair in '" +
                  std::string(text) + "'");
    }
    coords.push_back(*c);
  }

  SubgoalCall call{};
  if (name == "move_to") {
    if (coords.size() != 2) {
      return fail("move_to takes 2 coordinates, got " +
                  std::to_string(coords.size()) + " in '" +
                  std::string(text) + "'");
    }
    call.kind = SubgoalCall::Kind::MoveTo;
    call.src = coords[0];
    call.target = coords[1];
  } else if (name == "fire_at" || name == "interact" || name == "wait") {
    if (coords.size() != 1) {
      return fail(name + " takes 1 coordinate, got " +
                  std::to_string(coords.size()) + " in '" +
                  std::string(text) + "'");
    }
    call.kind = name == "fire_at"  ? SubgoalCall::Kind::FireAt
                : name == "interact" ? SubgoalCall::Kind::Interact
                                     : SubgoalCall::Kind::Wait;
    call.target = coords[0];
  } else {
    return fail("unknown function '" + name + "'");
  }
  PlanParseResult out;
  out.plan.push_back(call);
  return out;
}

PlanParseResult parse_action_plan(const LiteralValue& v) {
  if (!v.is(LiteralValue::Kind::Map)) {
    return fail("expected a map with key 'action_plan'");
  }
  const LiteralValue* plan = v.find("action_plan");
  if (!plan) return fail("missing key 'action_plan'");
  if (!plan->is(LiteralValue::Kind::List)) {
    return fail("'action_plan' must be a list");
  }
  PlanParseResult out;
  for (const auto& item : plan->items()) {
    if (!item.is(LiteralValue::Kind::String)) {
      return fail("'action_plan' elements must be strings");
    }
    auto one = parse_call(item.as_string());
    if (!one.ok()) return one;
    out.plan.push_back(one.plan.front());
  }
  return out;
}

PlanParseResult parse_action_plan_text(std::string_view response) {
  std::string block = extract_block(response);
  auto lit = parse_literal(block);
  if (!lit.ok()) {
    return fail(lit.error->to_string());
  }
  return parse_action_plan(*lit.value);
}

}  // namespace hm
