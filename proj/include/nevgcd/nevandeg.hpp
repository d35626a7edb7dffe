#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nevgcd/errors.hpp"
#include "nevgcd/linalg.hpp"
#include "nevgcd/multipoly.hpp"
#include "nevgcd/places.hpp"

namespace nevgcd {

// Every quantity here is a slope: the coefficient of log r in the
// corresponding Nevanlinna function of a rational argument.

/// T_f: max(deg num, deg den); 0 for the zero function.
long char_slope(const RationalFunction& f);

/// T of the map [1 : g1 : ... : gn] from its reduced representation.
long map_char_slope(std::span<const RationalFunction> gs);

/// N_gcd(f, g): deg gcd(num f, num g).
long ngcd_slope(const RationalFunction& f, const RationalFunction& g);

/// m_gcd(f, g): max(0, min(v_inf f, v_inf g)).
long mgcd_slope(const RationalFunction& f, const RationalFunction& g);

/// T_gcd(f, g) = T[1 : f : g] - T[f : g].
long tgcd_slope(const RationalFunction& f, const RationalFunction& g);

struct FmtDecomposition {
  long N_slope = 0;  // a-points with multiplicity
  long m_slope = 0;  // proximity to a, all of it at infinity
};

/// N_f(a) + m_f(a) = T_f for nonconstant f.
FmtDecomposition fmt_decomposition(const RationalFunction& f, const Rational& a);

struct SlopeReport {
  long T_f = 0;
  long T_g = 0;
  long N_gcd = 0;
  long m_gcd = 0;
  long T_gcd = 0;
};

SlopeReport slope_report(const RationalFunction& f, const RationalFunction& g);

/// Divisor of f over a shared gcd-free basis; the last entry is the place at infinity.
struct DivisorVector {
  std::vector<UniPoly> basis;
  std::vector<long> exponents;

  long degree() const;  // sum of exponent * place degree, 0 for any nonzero f
};

DivisorVector divisor_vector(const RationalFunction& f, std::span<const UniPoly> basis);

struct IndependenceCertificate {
  bool independent = false;
  std::vector<UniPoly> basis;                 // finite places; infinity is the last column
  std::vector<std::vector<long>> exponents;   // one row per g_i
  long rank = 0;
  std::vector<long> pivot_columns;            // echelon profile of the exponent matrix
  std::vector<Integer> witness;               // primitive kernel vector when dependent
  bool witness_verified = false;              // prod g_i^{w_i} reduced to a constant
};

/// Multiplicative independence of g1..gn via the rank of the divisor exponent matrix.
IndependenceCertificate mult_independent(std::span<const RationalFunction> gs);

/// prod g_i^{w_i} in reduced form.
RationalFunction power_product(std::span<const RationalFunction> gs, std::span<const Integer> w);

class DependentArgumentsError : public HypothesisError {
 public:
  explicit DependentArgumentsError(IndependenceCertificate certificate);
  const IndependenceCertificate& certificate() const { return certificate_; }

 private:
  IndependenceCertificate certificate_;
};

struct SweepConfig {
  MultiPoly F;
  MultiPoly G;
  std::vector<RationalFunction> gs;
  long k_min = 1;
  long k_max = 60;
  long k_step = 1;
  Rational epsilon{1, 10};
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepRow {
  long k = 0;
  long gcd_degree = 0;
  long scale = 0;  // k * max_i char_slope(g_i)
  Rational ratio;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  IndependenceCertificate certificate;
  std::optional<long> first_below;  // least sampled k with ratio < epsilon
  std::optional<long> threshold_k;  // least sampled k from which every sampled ratio < epsilon
};

/// Rows of deg gcd(F(g^k), G(g^k)) against k * max T(g_i), in increasing k.
/// Throws HypothesisError if F, G are not coprime, DependentArgumentsError if
/// the g_i are multiplicatively dependent.
SweepReport gcd_sweep(const SweepConfig& cfg);

/// Same with the T_gcd slope; needs polynomial g_i and F, G not both vanishing at the origin.
SweepReport tgcd_sweep(const SweepConfig& cfg);

}  // namespace nevgcd
