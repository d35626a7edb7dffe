#pragma once

#include <compare>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "nevgcd/numeric.hpp"
#include "nevgcd/zpoly.hpp"

namespace nevgcd {

/// Dense univariate polynomial over Q in the variable z. The leading
/// coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  /// Degree reported for the zero polynomial; behaves like -infinity in comparisons.
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  explicit UniPoly(const Rational& c) : UniPoly(std::vector<Rational>{c}) {}

  static UniPoly constant(const Rational& c);
  static UniPoly variable();
  static UniPoly monomial(const Rational& c, std::size_t degree);
  /// Integer polynomial scaled by 1 / denominator.
  static UniPoly from_integer(const zpoly::ZPoly& p, const Integer& denominator = 1);

  long degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading_coefficient() const;

  /// Primitive integer polynomial p with *this = scale * p (scale > 0 unless zero).
  zpoly::ZPoly primitive_integer(Rational* scale = nullptr) const;

  UniPoly monic() const;
  UniPoly derivative() const;
  Rational evaluate(const Rational& at) const;
  UniPoly pow(unsigned long exponent) const;
  std::string to_string(std::string_view var = "z") const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  UniPoly& operator*=(const Rational& c);

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

UniPoly operator+(UniPoly a, const UniPoly& b);
UniPoly operator-(UniPoly a, const UniPoly& b);
UniPoly operator-(const UniPoly& a);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Rational& c, UniPoly a);

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& d, const UniPoly& a);
/// a / b, throwing std::domain_error when b does not divide a.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);
inline bool is_zero(const UniPoly& p) { return p.is_zero(); }

/// Monic gcd. Inputs of degree >= 64 go through the modular route, smaller
/// ones through the primitive PRS; both are exact.
UniPoly uni_gcd(const UniPoly& p, const UniPoly& q);
UniPoly uni_gcd_prs(const UniPoly& p, const UniPoly& q);
UniPoly uni_gcd_modular(const UniPoly& p, const UniPoly& q);
UniPoly uni_lcm(const UniPoly& p, const UniPoly& q);

bool is_squarefree(const UniPoly& p);

/// Total order used for deterministic output: degree first, then
/// coefficients from the leading one down.
std::strong_ordering canonical_compare(const UniPoly& a, const UniPoly& b);
inline bool canonical_less(const UniPoly& a, const UniPoly& b) { return canonical_compare(a, b) < 0; }

}  // namespace nevgcd
