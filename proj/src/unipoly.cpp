#include "nevgcd/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nevgcd {

namespace {

constexpr long kModularGcdDegree = 64;
constexpr std::size_t kIntegerMultiplySize = 24;

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

void UniPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::variable() { return UniPoly(std::vector<Rational>{0, 1}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::from_integer(const zpoly::ZPoly& p, const Integer& denominator) {
  std::vector<Rational> coeffs(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    coeffs[i] = Rational(p[i], denominator);
    coeffs[i].canonicalize();
  }
  return UniPoly(std::move(coeffs));
}

const Rational& UniPoly::leading_coefficient() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

zpoly::ZPoly UniPoly::primitive_integer(Rational* scale) const {
  if (coeffs_.empty()) {
    if (scale != nullptr) *scale = 0;
    return {};
  }
  Integer den = 1;
  for (const Rational& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  zpoly::ZPoly p(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Integer t;
    mpz_divexact(t.get_mpz_t(), den.get_mpz_t(), coeffs_[i].get_den_mpz_t());
    p[i] = t * coeffs_[i].get_num();
  }
  Integer g = zpoly::content(p);
  if (sgn(p.back()) < 0) g = -g;
  for (Integer& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  if (scale != nullptr) {
    *scale = Rational(g, den);
    scale->canonicalize();
  }
  return p;
}

UniPoly UniPoly::monic() const {
  if (coeffs_.empty()) return *this;
  UniPoly out = *this;
  const Rational inv = 1 / coeffs_.back();
  for (Rational& c : out.coeffs_) c *= inv;
  return out;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(d));
}

Rational UniPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::pow(unsigned long exponent) const {
  UniPoly result = constant(1);
  UniPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1UL;
    if (exponent != 0) base = base * base;
  }
  return result;
}

std::string UniPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& other) {
  *this = *this * other;
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rational& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
UniPoly operator-(const UniPoly& a) { return Rational(-1) * a; }

UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  if (std::min(ac.size(), bc.size()) >= kIntegerMultiplySize) {
    Rational sa, sb;
    const zpoly::ZPoly pa = a.primitive_integer(&sa);
    const zpoly::ZPoly pb = b.primitive_integer(&sb);
    UniPoly out = UniPoly::from_integer(zpoly::multiply(pa, pb));
    out *= sa * sb;
    return out;
  }
  std::vector<Rational> out(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (sgn(ac[i]) == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  }
  return UniPoly(std::move(out));
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t nb = bc.size();
  std::vector<Rational> quot(rem.size() - nb + 1, 0);
  const Rational inv = 1 / bc.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational t = rem[k + nb - 1] * inv;
    if (sgn(t) == 0) continue;
    quot[k] = t;
    for (std::size_t j = 0; j < nb; ++j) rem[k + j] -= t * bc[j];
  }
  rem.resize(nb - 1);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  Rational sa, sb;
  const zpoly::ZPoly pa = a.primitive_integer(&sa);
  const zpoly::ZPoly pb = b.primitive_integer(&sb);
  // pb is primitive, so by Gauss's lemma a rational quotient is already integral.
  auto q = zpoly::divide_exact(pa, pb);
  if (!q) throw std::domain_error("polynomial does not divide exactly");
  UniPoly out = UniPoly::from_integer(*q);
  out *= sa / sb;
  return out;
}

bool divides(const UniPoly& d, const UniPoly& a) {
  if (d.is_zero()) return a.is_zero();
  if (a.is_zero()) return true;
  return zpoly::divide_exact(a.primitive_integer(), d.primitive_integer()).has_value();
}

UniPoly uni_gcd_prs(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  return UniPoly::from_integer(zpoly::gcd_prs(p.primitive_integer(), q.primitive_integer())).monic();
}

UniPoly uni_gcd_modular(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  return UniPoly::from_integer(zpoly::gcd_modular(p.primitive_integer(), q.primitive_integer())).monic();
}

UniPoly uni_gcd(const UniPoly& p, const UniPoly& q) {
  if (std::max(p.degree(), q.degree()) >= kModularGcdDegree && !p.is_zero() && !q.is_zero()) {
    return uni_gcd_modular(p, q);
  }
  return uni_gcd_prs(p, q);
}

UniPoly uni_lcm(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  return (exact_quotient(p, uni_gcd(p, q)) * q).monic();
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) return false;
  if (p.is_constant()) return true;
  return uni_gcd(p, p.derivative()).is_constant();
}

std::strong_ordering canonical_compare(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  for (std::size_t k = ac.size(); k-- > 0;) {
    const int c = cmp(ac[k], bc[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace nevgcd
