#include "hm/literal.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace hm {

LiteralValue LiteralValue::tuple(LiteralList items) {
  LiteralValue v;
  v.data_ = Seq{true, std::move(items)};
  return v;
}

LiteralValue LiteralValue::list(LiteralList items) {
  LiteralValue v;
  v.data_ = Seq{false, std::move(items)};
  return v;
}

LiteralValue LiteralValue::map(LiteralMap entries) {
  LiteralValue v;
  v.data_ = Dict{std::move(entries)};
  return v;
}

LiteralValue::Kind LiteralValue::kind() const {
  switch (data_.index()) {
    case 0: return Kind::Int;
    case 1: return Kind::Real;
    case 2: return Kind::Bool;
    case 3: return Kind::String;
    case 4: return std::get<Seq>(data_).is_tuple ? Kind::Tuple : Kind::List;
    default: return Kind::Map;
  }
}

int64_t LiteralValue::as_int() const { return std::get<int64_t>(data_); }

double LiteralValue::as_real() const {
  if (data_.index() == 0) return static_cast<double>(std::get<int64_t>(data_));
  return std::get<double>(data_);
}

bool LiteralValue::as_bool() const { return std::get<bool>(data_); }

const std::string& LiteralValue::as_string() const {
  return std::get<std::string>(data_);
}

const LiteralList& LiteralValue::items() const {
  return std::get<Seq>(data_).items;
}

const LiteralMap& LiteralValue::entries() const {
  return std::get<Dict>(data_).entries;
}

const LiteralValue* LiteralValue::find(std::string_view key) const {
  for (const auto& [k, v] : entries()) {
    if (k == key) return &v;
  }
  return nullptr;
}

bool LiteralValue::operator==(const LiteralValue& other) const {
  return data_ == other.data_;
}

std::string ParseError::to_string() const {
  std::ostringstream os;
  os << "parse error at line " << line << ", column " << column << ": "
     << message;
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParseResult run() {
    skip_ws();
    auto v = value();
    if (!v) return fail_result();
    skip_ws();
    if (pos_ != text_.size()) {
      set_error("trailing content after literal");
      return fail_result();
    }
    return ParseResult{std::move(v), std::nullopt};
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  std::optional<ParseError> error_;

  ParseResult fail_result() { return ParseResult{std::nullopt, error_}; }

  void set_error(std::string msg) {
    if (error_) return;  // keep the first error
    int line = 1, col = 1;
    for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    error_ = ParseError{std::move(msg), line, col};
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void advance() { ++pos_; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool consume(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  bool match_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) return false;
    size_t after = pos_ + w.size();
    if (after < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[after])) ||
         text_[after] == '_')) {
      return false;
    }
    pos_ = after;
    return true;
  }

  std::optional<LiteralValue> value() {
    skip_ws();
    char c = peek();
    if (c == '\'' || c == '"') return string_value();
    if (c == '{') return map_value();
    if (c == '[') return seq_value(']', false);
    if (c == '(') return seq_value(')', true);
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c)))
      return number_value();
    if (match_word("True") || match_word("true")) return LiteralValue(true);
    if (match_word("False") || match_word("false")) return LiteralValue(false);
    set_error("expected a literal value");
    return std::nullopt;
  }

  std::optional<LiteralValue> string_value() {
    char quote = peek();
    advance();
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != quote) {
      char c = text_[pos_];
      if (c == '\\' && pos_ + 1 < text_.size()) {
        advance();
        char esc = text_[pos_];
        switch (esc) {
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          default: out.push_back(esc); break;
        }
      } else {
        out.push_back(c);
      }
      advance();
    }
    if (pos_ >= text_.size()) {
      set_error("unterminated string");
      return std::nullopt;
    }
    advance();  // closing quote
    return LiteralValue(std::move(out));
  }

  std::optional<LiteralValue> number_value() {
    size_t start = pos_;
    if (peek() == '-' || peek() == '+') advance();
    bool has_digits = false;
    bool is_real = false;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        has_digits = true;
        advance();
      } else if (c == '.' || c == 'e' || c == 'E') {
        is_real = true;
        advance();
        if ((c == 'e' || c == 'E') && (peek() == '-' || peek() == '+')) advance();
      } else {
        break;
      }
    }
    if (!has_digits) {
      set_error("malformed number");
      return std::nullopt;
    }
    std::string_view tok = text_.substr(start, pos_ - start);
    if (is_real) {
      double d = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), d);
      if (ec != std::errc{} || p != tok.data() + tok.size()) {
        pos_ = start;
        set_error("malformed number");
        return std::nullopt;
      }
      return LiteralValue(d);
    }
    int64_t i = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), i);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
      pos_ = start;
      set_error("malformed integer");
      return std::nullopt;
    }
    return LiteralValue(i);
  }

  std::optional<LiteralValue> seq_value(char close, bool is_tuple) {
    advance();  // opening bracket
    LiteralList items;
    skip_ws();
    while (!consume(close)) {
      if (pos_ >= text_.size()) {
        set_error(std::string("unterminated sequence, expected '") + close +
                  "'");
        return std::nullopt;
      }
      auto v = value();
      if (!v) return std::nullopt;
      items.push_back(std::move(*v));
      skip_ws();
      if (consume(',')) {
        skip_ws();
      } else if (peek() != close) {
        set_error(std::string("expected ',' or '") + close + "'");
        return std::nullopt;
      }
    }
    return is_tuple ? LiteralValue::tuple(std::move(items))
                    : LiteralValue::list(std::move(items));
  }

  std::optional<LiteralValue> map_value() {
    advance();  // '{'
    LiteralMap entries;
    skip_ws();
    while (!consume('}')) {
      if (pos_ >= text_.size()) {
        set_error("unterminated map, expected '}'");
        return std::nullopt;
      }
      skip_ws();
      if (peek() != '\'' && peek() != '"') {
        set_error("map keys must be strings");
        return std::nullopt;
      }
      auto key = string_value();
      if (!key) return std::nullopt;
      const std::string& k = key->as_string();
      for (const auto& [existing, _] : entries) {
        if (existing == k) {
          set_error("duplicate map key '" + k + "'");
          return std::nullopt;
        }
      }
      skip_ws();
      if (!consume(':')) {
        set_error("expected ':' after map key");
        return std::nullopt;
      }
      auto v = value();
      if (!v) return std::nullopt;
      entries.emplace_back(k, std::move(*v));
      skip_ws();
      if (consume(',')) {
        skip_ws();
      } else if (peek() != '}') {
        set_error("expected ',' or '}'");
        return std::nullopt;
      }
    }
    return LiteralValue::map(std::move(entries));
  }
};

void print_value(const LiteralValue& v, std::ostream& os) {
  switch (v.kind()) {
    case LiteralValue::Kind::Int:
      os << v.as_int();
      break;
    case LiteralValue::Kind::Real: {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << v.as_real();
      std::string s = tmp.str();
      if (s.find('.') == std::string::npos &&
          s.find('e') == std::string::npos &&
          s.find("inf") == std::string::npos &&
          s.find("nan") == std::string::npos) {
        s += ".0";
      }
      os << s;
      break;
    }
    case LiteralValue::Kind::Bool:
      os << (v.as_bool() ? "True" : "False");
      break;
    case LiteralValue::Kind::String: {
      os << '\'';
      for (char c : v.as_string()) {
        if (c == '\'' || c == '\\') os << '\\';
        os << c;
      }
      os << '\'';
      break;
    }
    case LiteralValue::Kind::Tuple:
    case LiteralValue::Kind::List: {
      bool is_tuple = v.kind() == LiteralValue::Kind::Tuple;
      os << (is_tuple ? '(' : '[');
      bool first = true;
      for (const auto& item : v.items()) {
        if (!first) os << ", ";
        first = false;
        print_value(item, os);
      }
      if (is_tuple && v.items().size() == 1) os << ',';
      os << (is_tuple ? ')' : ']');
      break;
    }
    case LiteralValue::Kind::Map: {
      os << '{';
      bool first = true;
      for (const auto& [k, val] : v.entries()) {
        if (!first) os << ", ";
        first = false;
        print_value(LiteralValue(k), os);
        os << ": ";
        print_value(val, os);
      }
      os << '}';
      break;
    }
  }
}

}  // namespace

ParseResult parse_literal(std::string_view text) {
  return Parser(text).run();
}

std::string pretty_print(const LiteralValue& v) {
  std::ostringstream os;
  print_value(v, os);
  return os.str();
}

std::string extract_block(std::string_view text) {
  size_t fence = text.find("```");
  if (fence != std::string_view::npos) {
    size_t body = fence + 3;
    // skip an optional language tag up to end of line
    size_t eol = text.find('\n', body);
    if (eol != std::string_view::npos) {
      std::string_view tag = text.substr(body, eol - body);
      bool tag_like = true;
      for (char c : tag) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != ' ' &&
            c != '\r') {
          tag_like = false;
          break;
        }
      }
      if (tag_like) body = eol + 1;
    }
    size_t close = text.find("```", body);
    if (close != std::string_view::npos) {
      return std::string(text.substr(body, close - body));
    }
    return std::string(text.substr(body));
  }
  size_t open = text.find('{');
  if (open != std::string_view::npos) {
    int depth = 0;
    for (size_t i = open; i < text.size(); ++i) {
      if (text[i] == '{') ++depth;
      if (text[i] == '}') {
        --depth;
        if (depth == 0) return std::string(text.substr(open, i - open + 1));
      }
    }
  }
  return std::string(text);
}

}  // namespace hm
