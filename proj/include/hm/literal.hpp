#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hm {

// Python-style literal values as they appear in reasoner responses:
// ints, reals, booleans, quoted strings, tuples, lists, and string-keyed
// dicts. Parsing never evaluates anything.
class LiteralValue;
using LiteralList = std::vector<LiteralValue>;
using LiteralMap = std::vector<std::pair<std::string, LiteralValue>>;

class LiteralValue {
 public:
  enum class Kind { Int, Real, Bool, String, Tuple, List, Map };

  LiteralValue() : data_(int64_t{0}) {}
  explicit LiteralValue(int64_t v) : data_(v) {}
  explicit LiteralValue(double v) : data_(v) {}
  explicit LiteralValue(bool v) : data_(v) {}
  explicit LiteralValue(std::string v) : data_(std::move(v)) {}

  static LiteralValue tuple(LiteralList items);
  static LiteralValue list(LiteralList items);
  static LiteralValue map(LiteralMap entries);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  int64_t as_int() const;
  double as_real() const;       // accepts Int too
  bool as_bool() const;
  const std::string& as_string() const;
  const LiteralList& items() const;   // Tuple or List
  const LiteralMap& entries() const;  // Map

  const LiteralValue* find(std::string_view key) const;  // Map lookup, null if absent

  bool operator==(const LiteralValue& other) const;

 private:
  struct Seq {
    bool is_tuple;
    LiteralList items;
    bool operator==(const Seq&) const = default;
  };
  struct Dict {
    LiteralMap entries;
    bool operator==(const Dict&) const = default;
  };
  std::variant<int64_t, double, bool, std::string, Seq, Dict> data_;
};

struct ParseError {
  std::string message;
  int line = 0;
  int column = 0;
  std::string to_string() const;
};

struct ParseResult {
  std::optional<LiteralValue> value;
  std::optional<ParseError> error;
  bool ok() const { return value.has_value(); }
};

// Parse a single literal expression. Whitespace-insensitive; accepts
// single- or double-quoted strings and trailing commas.
ParseResult parse_literal(std::string_view text);

// Canonical single-quoted rendering; parse_literal(pretty_print(v)) == v.
std::string pretty_print(const LiteralValue& v);

// Content of the first fenced code block if any, else the first balanced
// {...} region, else the input unchanged.
std::string extract_block(std::string_view text);

}  // namespace hm
