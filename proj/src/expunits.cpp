#include "nevgcd/expunits.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "nevgcd/parse.hpp"

namespace nevgcd {

namespace {

const Integer kMaxRadicand("1000000000000");

// Splits D = s^2 * r with r squarefree.
std::pair<Integer, Integer> square_split(Integer D) {
  if (D > kMaxRadicand) throw std::invalid_argument("radicand too large");
  Integer s = 1;
  for (Integer p = 2; p * p <= D; ++p) {
    const Integer p2 = p * p;
    while (D % p2 == 0) {
      D /= p2;
      s *= p;
    }
  }
  return {s, D};
}

Integer shared_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.is_rational()) return y.D();
  if (y.is_rational() || x.D() == y.D()) return x.D();
  throw std::domain_error("elements of different quadratic fields: sqrt" + to_string(x.D()) + " and sqrt" +
                          to_string(y.D()));
}

class QuadParser {
 public:
  explicit QuadParser(std::string_view text) : text_(text) {}

  QuadExt run() {
    skip();
    if (pos_ == text_.size()) fail("empty quadratic literal");
    QuadExt out = signed_term();
    while (true) {
      skip();
      if (pos_ == text_.size()) return out;
      const char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected + or -");
      ++pos_;
      const QuadExt t = term();
      out = op == '+' ? out + t : out - t;
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QuadExt signed_term() {
    skip();
    if (accept('-')) return -term();
    accept('+');
    return term();
  }

  QuadExt term() {
    skip();
    if (text_.substr(pos_).starts_with("sqrt")) return radical();
    const Rational r = rational();
    if (accept('*')) {
      skip();
      if (!text_.substr(pos_).starts_with("sqrt")) fail("expected sqrt");
      return QuadExt(r) * radical();
    }
    return QuadExt(r);
  }

  QuadExt radical() {
    pos_ += 4;
    const bool paren = accept('(');
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected radicand");
    const Integer D(std::string(text_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected )");
    if (D == 0) return QuadExt(Rational(0));
    return QuadExt(Rational(0), Rational(1), D);
  }

  Rational rational() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (den == pos_) fail("expected denominator");
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadExt::QuadExt(const Rational& a) : a_(a), b_(0) { a_.canonicalize(); }

QuadExt::QuadExt(const Rational& a, const Rational& b, const Integer& D) : a_(a), b_(b) {
  if (D <= 0) throw std::invalid_argument("radicand must be positive");
  a_.canonicalize();
  b_.canonicalize();
  auto [s, r] = square_split(D);
  b_ *= s;
  if (r == 1) {
    a_ += b_;
    b_ = 0;
  }
  D_ = sgn(b_) == 0 ? Integer(1) : r;
}

QuadExt QuadExt::parse(std::string_view text) { return QuadParser(text).run(); }

int QuadExt::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: the larger of a^2 and b^2 D wins; they never tie for squarefree D > 1
  return a_ * a_ > b_ * b_ * D_ ? sa : sb;
}

QuadExt QuadExt::conjugate() const { return QuadExt(a_, -b_, D_); }

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  const Rational norm = a_ * a_ - b_ * b_ * D_;
  return QuadExt(a_ / norm, -b_ / norm, D_);
}

QuadExt QuadExt::pow(unsigned long k) const {
  QuadExt out(Rational(1));
  QuadExt base = *this;
  while (k > 0) {
    if (k & 1UL) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

std::string QuadExt::to_string() const {
  if (is_rational()) return nevgcd::to_string(a_);
  std::string out;
  if (sgn(a_) != 0) out = nevgcd::to_string(a_);
  const std::string root = "sqrt" + nevgcd::to_string(D_);
  if (b_ == 1) {
    out += (out.empty() ? "" : "+") + root;
  } else if (b_ == -1) {
    out += "-" + root;
  } else {
    if (sgn(b_) > 0 && !out.empty()) out += "+";
    out += nevgcd::to_string(b_) + "*" + root;
  }
  return out;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  const Integer D = shared_radicand(x, y);
  return QuadExt(x.a() + y.a(), x.b() + y.b(), D);
}

QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a(), -x.b(), x.D()); }

QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  const Integer D = shared_radicand(x, y);
  return QuadExt(x.a() * y.a() + x.b() * y.b() * D, x.a() * y.b() + x.b() * y.a(), D);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

bool operator<(const QuadExt& x, const QuadExt& y) { return (y - x).sign() > 0; }

QuadExt abs(const QuadExt& x) { return x.sign() < 0 ? -x : x; }

QuadExt max(const QuadExt& x, const QuadExt& y) { return x < y ? y : x; }

ExpUnit make_exp_unit(const QuadExt& coeff, const QuadExt& freq) {
  if (coeff.is_zero()) throw std::invalid_argument("exponential unit with zero coefficient");
  return ExpUnit{coeff, freq};
}

QuadExt exp_char_slope(const QuadExt& a) { return abs(a); }

QuadExt exp_ngcd_slope(const QuadExt& a, const QuadExt& b, long k) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("zero frequency");
  if (k < 1) throw std::invalid_argument("k must be positive");
  const QuadExt ratio = b / a;
  if (!ratio.is_rational()) return QuadExt();
  const Integer q = ratio.a().get_den();
  return QuadExt(Rational(k)) * abs(a) / QuadExt(Rational(q));
}

QuadExt exp_asym_ratio(const QuadExt& a, const QuadExt& b, long k) {
  const QuadExt slope = exp_ngcd_slope(a, b, k);
  return slope / (QuadExt(Rational(k)) * max(abs(a), abs(b)));
}

BorelPartition borel_partition(std::span<const ExpUnit> units, std::optional<long> power) {
  if (units.empty()) throw std::invalid_argument("borel_partition of an empty sum");
  if (power && *power < 1) throw std::invalid_argument("power must be positive");
  BorelPartition out;
  out.power = power;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (units[i].coeff.is_zero()) throw std::invalid_argument("exponential unit with zero coefficient");
    QuadExt freq = units[i].freq;
    QuadExt coeff = units[i].coeff;
    if (power) {
      freq = QuadExt(Rational(*power)) * freq;
      coeff = coeff.pow(static_cast<unsigned long>(*power));
    }
    auto it = std::find_if(out.classes.begin(), out.classes.end(), [&](const BorelClass& c) { return c.freq == freq; });
    if (it == out.classes.end()) {
      out.classes.push_back(BorelClass{freq, {i}, coeff, false});
    } else {
      it->members.push_back(i);
      it->coeff_sum = it->coeff_sum + coeff;
    }
  }
  out.sum_vanishes = true;
  for (BorelClass& c : out.classes) {
    c.vanishes = c.coeff_sum.is_zero();
    out.sum_vanishes = out.sum_vanishes && c.vanishes;
  }
  return out;
}

}  // namespace nevgcd
