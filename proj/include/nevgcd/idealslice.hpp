#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nevgcd/eigen_support.hpp"
#include "nevgcd/multipoly.hpp"
#include "nevgcd/ordering.hpp"

namespace nevgcd {

/// Number of monomials of degree delta in n + 1 variables; 0 for delta < 0.
Integer monomial_count(long delta, long n);

/// All monomials of the given degree in nvars variables, in descending lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, long degree);

struct SliceConstants {
  Integer c;       // 2 C(m+n-d, n+1) - C(m+n-2d, n+1)
  Integer M;       // 2 C(m+n-d, n) - C(m+n-2d, n)
  Integer Mprime;  // C(m+n, n) - M
  std::optional<Integer> L;  // ceil(M(M-1) / (2c)); empty when c = 0 (m = d)
};

SliceConstants slice_constants(long m, long n, long d);

/// generator * x^multiplier.
struct SliceElement {
  MultiPoly poly;
  int generator = 1;  // 1 for F1, 2 for F2
  Monomial multiplier;
};

/// Basis of the degree-m part of the ideal (F1, F2): B = (B1 \ B1') u B2 with
/// B1 = F1 x^i, B2 = F2 x^i (|i| = m - d), B1' = F1 TM(F2) x^i (|i| = m - 2d).
struct BasisSlice {
  long m = 0;
  long n = 0;
  long d = 0;
  MonomialOrder order = MonomialOrder::lex();
  MultiPoly F1;
  MultiPoly F2;
  bool swapped = false;  // the caller's pair was exchanged so that TM(F2) <= TM(F1)
  bool tm_tie = false;   // TM(F1) == TM(F2); F2 kept as the caller's second input
  Monomial tm_F2;
  std::vector<SliceElement> B1;
  std::vector<SliceElement> B2;
  std::vector<SliceElement> B1prime;
  std::vector<SliceElement> B;
};

/// F1, F2 homogeneous, coprime, of equal degree d >= 1 in n + 1 variables, m >= d.
/// Throws HypothesisError when they are not.
BasisSlice build_basis_slice(const MultiPoly& F1, const MultiPoly& F2, long m, const MonomialOrder& order);

struct BasisVerification {
  long basis_size = 0;
  long rank = 0;          // exact rank of the coefficient matrix of B
  long span_dim = 0;      // exact rank over all of B1 u B2
  Integer expected_M;
  Integer quotient_dim;   // C(m+n, n) - span_dim, to compare against M'
  bool pass = false;
};

/// Rows are polynomials, columns the degree-m monomials; ranks by fraction-free elimination.
RationalMatrix coefficient_matrix(const std::vector<SliceElement>& elements, long m);
BasisVerification verify_basis(const BasisSlice& s);

struct SumFormulaCheck {
  std::string set;  // "B1", "B2" or "B1prime"
  std::size_t variable = 0;
  Integer observed;
  Integer expected;
  bool pass = false;
};

struct SumFormulaReport {
  std::vector<SumFormulaCheck> checks;
  bool pass = true;
};

/// Sums of ord_{x_i}(s / F_j) over each set, with s / F_j computed by exact division.
SumFormulaReport verify_sum_formulas(const BasisSlice& s);

struct AsymptoticRow {
  long m = 0;
  Integer c, M, Mprime;
  Rational c_residual;     // |c - m^(n+1)/(n+1)! - m^n/(2(n-1)!)| / m^(n-1)
  Rational M_residual;     // |M - m^n/n!| / m^(n-1)
  Rational Mprime_scaled;  // M' / m^(n-2)  (M' itself for n = 1)
};

struct ResidualSummary {
  Rational max;
  long argmax = 0;
  long reference_m = 0;
  Rational at_reference;
  bool bounded_by_reference = false;  // every value with m >= reference_m is <= at_reference
  bool nonincreasing_after_max = false;
  bool monotone_after_reference = false;  // monotone (either direction) for m >= reference_m
};

struct AsymptoticReport {
  long n = 0;
  long d = 0;
  long m_max = 0;
  std::vector<AsymptoticRow> rows;
  ResidualSummary c;
  ResidualSummary M;
  ResidualSummary Mprime;
  bool pass = false;
};

/// Scaled residual sequences for m = 2d..m_max; the bound reference point is
/// m = 10 (clamped into the range). pass iff all three are bounded by their
/// reference value from there on.
AsymptoticReport asymptotic_check(long n, long d, long m_max);

}  // namespace nevgcd
