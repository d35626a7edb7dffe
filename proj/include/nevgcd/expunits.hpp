#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nevgcd/numeric.hpp"

namespace nevgcd {

/// a + b sqrt(D) with D a positive squarefree integer. Rationals carry b = 0
/// and D = 1, so equal values compare equal field by field.
class QuadExt {
 public:
  QuadExt() : QuadExt(Rational(0)) {}
  QuadExt(const Rational& a);  // NOLINT(google-explicit-constructor)
  QuadExt(const Rational& a, const Rational& b, const Integer& D);

  /// `3/2`, `sqrt2`, `-sqrt2`, `1+2*sqrt5`, `1/2-3/4*sqrt12` (reduced to D squarefree).
  static QuadExt parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& D() const { return D_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  int sign() const;
  QuadExt conjugate() const;
  QuadExt inverse() const;
  QuadExt pow(unsigned long k) const;

  /// `p/q` or `p/q+r/s*sqrtD`; parse() reads it back.
  std::string to_string() const;

  friend bool operator==(const QuadExt&, const QuadExt&) = default;

 private:
  Rational a_;
  Rational b_;
  Integer D_{1};
};

QuadExt operator+(const QuadExt& x, const QuadExt& y);
QuadExt operator-(const QuadExt& x, const QuadExt& y);
QuadExt operator-(const QuadExt& x);
QuadExt operator*(const QuadExt& x, const QuadExt& y);
QuadExt operator/(const QuadExt& x, const QuadExt& y);
bool operator<(const QuadExt& x, const QuadExt& y);
inline bool operator<=(const QuadExt& x, const QuadExt& y) { return !(y < x); }
QuadExt abs(const QuadExt& x);
QuadExt max(const QuadExt& x, const QuadExt& y);

/// coeff * e^(freq z).
struct ExpUnit {
  QuadExt coeff;
  QuadExt freq;
};

ExpUnit make_exp_unit(const QuadExt& coeff, const QuadExt& freq);

// Slopes are coefficients of r / pi.

/// T of e^(az): |a|.
QuadExt exp_char_slope(const QuadExt& a);

/// Common zeros of e^(kaz) - 1 and e^(kbz) - 1: k|a|/q when b/a = p/q, 0 when b/a is irrational.
QuadExt exp_ngcd_slope(const QuadExt& a, const QuadExt& b, long k);

/// exp_ngcd_slope / (k max(|a|, |b|)).
QuadExt exp_asym_ratio(const QuadExt& a, const QuadExt& b, long k);

struct BorelClass {
  QuadExt freq;
  std::vector<std::size_t> members;  // 0-based input positions
  QuadExt coeff_sum;
  bool vanishes = false;
};

struct BorelPartition {
  std::vector<BorelClass> classes;  // by first occurrence
  bool sum_vanishes = false;
  std::optional<long> power;        // set for the k-th power variant
};

/// Groups units by frequency. With a power k the units are replaced by their
/// k-th powers first (frequency k freq, coefficient coeff^k).
BorelPartition borel_partition(std::span<const ExpUnit> units, std::optional<long> power = std::nullopt);

}  // namespace nevgcd
