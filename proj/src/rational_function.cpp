#include "nevgcd/rational_function.hpp"

#include <stdexcept>

namespace nevgcd {

RationalFunction::RationalFunction(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(1)) {}

RationalFunction::RationalFunction(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UniPoly::constant(1);
    return;
  }
  const UniPoly g = uni_gcd(num, den);
  if (!g.is_constant()) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  const Rational lead = den.leading_coefficient();
  num_ = (1 / lead) * std::move(num);
  den_ = (1 / lead) * std::move(den);
}

RationalFunction rf_reduce(const UniPoly& num, const UniPoly& den) { return RationalFunction(num, den); }

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  RationalFunction out;
  // num/den reduced implies num^k/den^k reduced.
  out.num_ = num_.pow(static_cast<unsigned long>(exponent));
  out.den_ = den_.pow(static_cast<unsigned long>(exponent));
  return out;
}

std::string RationalFunction::to_string() const {
  if (den_ == UniPoly::constant(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den() == b.den()) return RationalFunction(a.num() + b.num(), a.den());
  return RationalFunction(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num(), a.den()); }

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num() * b.num(), a.den() * b.den());
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero function");
  return RationalFunction(a.num() * b.den(), a.den() * b.num());
}

}  // namespace nevgcd
