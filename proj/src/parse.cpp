#include "nevgcd/parse.hpp"

#include <cctype>

namespace nevgcd {

namespace {

constexpr std::size_t kMaxVars = 10;

struct MultiTraits {
  using Value = MultiPoly;
  static Value constant(const Rational& c) { return MultiPoly::constant(kMaxVars, c); }
  static bool is_variable_start(std::string_view rest) { return rest.size() >= 2 && rest[0] == 'x' && std::isdigit(static_cast<unsigned char>(rest[1])); }
  static Value variable(std::string_view rest, std::size_t& consumed) {
    consumed = 2;
    return MultiPoly::variable(kMaxVars, static_cast<std::size_t>(rest[1] - '0'));
  }
  static Value divide(const Value& a, const Value& b) {
    if (!b.is_constant() || b.is_zero()) throw ParseError("polynomial expressions may only divide by a nonzero constant");
    return (1 / b.constant_term()) * a;
  }
  static Value power(const Value& a, long e) {
    if (e < 0) throw ParseError("negative exponent in a polynomial expression");
    return a.pow(static_cast<unsigned>(e));
  }
};

struct RationalTraits {
  using Value = RationalFunction;
  static Value constant(const Rational& c) { return RationalFunction::constant(c); }
  static bool is_variable_start(std::string_view rest) {
    return !rest.empty() && rest[0] == 'z' && (rest.size() == 1 || !std::isalnum(static_cast<unsigned char>(rest[1])));
  }
  static Value variable(std::string_view, std::size_t& consumed) {
    consumed = 1;
    return RationalFunction::variable();
  }
  static Value divide(const Value& a, const Value& b) {
    if (b.is_zero()) throw ParseError("division by zero");
    return a / b;
  }
  static Value power(const Value& a, long e) {
    if (e < 0 && a.is_zero()) throw ParseError("negative power of zero");
    return a.pow(e);
  }
};

template <typename Traits>
class Parser {
 public:
  using Value = typename Traits::Value;

  explicit Parser(std::string_view text) : text_(text) {}

  Value parse() {
    Value v = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expression() {
    Value v = term();
    while (true) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    while (true) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        v = Traits::divide(v, unary());
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (!accept('^')) return base;
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected an integer exponent");
    if (digits.size() > 6) fail("exponent too large");
    const long e = std::stol(digits);
    return Traits::power(base, negative ? -e : e);
  }

  std::string read_digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Value atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Value v = expression();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return Traits::constant(Rational(Integer(read_digits(), 10)));
    }
    const std::string_view rest = text_.substr(pos_);
    if (Traits::is_variable_start(rest)) {
      std::size_t consumed = 0;
      Value v = Traits::variable(rest, consumed);
      pos_ += consumed;
      return v;
    }
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_multipoly(std::string_view text, std::size_t min_vars) {
  const MultiPoly wide = Parser<MultiTraits>(text).parse();
  std::size_t used = 0;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (wide.involves(v)) used = v + 1;
  }
  return wide.with_nvars(std::max(used, min_vars));
}

RationalFunction parse_rational_function(std::string_view text) { return Parser<RationalTraits>(text).parse(); }

UniPoly parse_unipoly(std::string_view text) {
  const RationalFunction f = parse_rational_function(text);
  if (!f.is_polynomial()) throw ParseError("'" + std::string(text) + "' is not a polynomial");
  return f.den().leading_coefficient() == 1 ? f.num() : (1 / f.den().leading_coefficient()) * f.num();
}

}  // namespace nevgcd
