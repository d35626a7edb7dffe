#pragma once

#include <string>

#include "nevgcd/unipoly.hpp"

namespace nevgcd {

/// Reduced quotient num/den of polynomials in z: gcd(num, den) = 1, den monic,
/// zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(UniPoly::constant(1)) {}
  explicit RationalFunction(UniPoly num);
  RationalFunction(UniPoly num, UniPoly den);

  static RationalFunction constant(const Rational& c) { return RationalFunction(UniPoly::constant(c)); }
  static RationalFunction variable() { return RationalFunction(UniPoly::variable()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction derivative() const;
  /// Integer power; negative exponents invert (nonzero functions only).
  RationalFunction pow(long exponent) const;
  RationalFunction inverse() const;
  std::string to_string() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  UniPoly num_;
  UniPoly den_;
};

RationalFunction rf_reduce(const UniPoly& num, const UniPoly& den);

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

}  // namespace nevgcd
