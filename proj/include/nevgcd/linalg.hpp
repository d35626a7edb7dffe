#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "nevgcd/eigen_support.hpp"

namespace nevgcd {

inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Exact division; the caller guarantees `den` divides `num`.
inline Integer exact_quotient(const Integer& num, const Integer& den) {
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

struct EchelonProfile {
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivot_columns;
};

/// Fraction-free (Bareiss) row echelon form, in place, over any integral
/// domain providing `is_zero` and `exact_quotient`. Pivots are taken as the
/// first nonzero row in each column, scanning columns left to right. Every
/// entry stays in the ring: the division by the previous pivot is exact.
template <typename Scalar>
EchelonProfile fraction_free_echelon(DenseMatrix<Scalar>& a, int* swap_parity = nullptr) {
  using Eigen::Index;
  EchelonProfile profile;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Scalar previous(1);
  int parity = 1;
  Index r = 0;
  for (Index col = 0; col < cols && r < rows; ++col) {
    Index pivot = r;
    while (pivot < rows && is_zero(a(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (Index j = 0; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
      parity = -parity;
    }
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = col + 1; j < cols; ++j) {
        Scalar t = a(r, col) * a(i, j) - a(i, col) * a(r, j);
        a(i, j) = exact_quotient(t, previous);
      }
      a(i, col) = Scalar(0);
    }
    previous = a(r, col);
    profile.pivot_columns.push_back(col);
    ++r;
  }
  profile.rank = r;
  if (swap_parity != nullptr) *swap_parity = parity;
  return profile;
}

/// Bareiss determinant of a square matrix over an integral domain.
template <typename Scalar>
Scalar bareiss_determinant(DenseMatrix<Scalar> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (a.rows() == 0) return Scalar(1);
  int parity = 1;
  const EchelonProfile profile = fraction_free_echelon(a, &parity);
  if (profile.rank < a.rows()) return Scalar(0);
  Scalar det = a(a.rows() - 1, a.cols() - 1);
  if (parity < 0) det = -det;
  return det;
}

/// Scales each row by the lcm of its denominators; rank and row space are unchanged.
IntegerMatrix clear_row_denominators(const RationalMatrix& a);

EchelonProfile echelon_profile(const IntegerMatrix& a);
EchelonProfile echelon_profile(const RationalMatrix& a);

inline Eigen::Index exact_rank(const IntegerMatrix& a) { return echelon_profile(a).rank; }
inline Eigen::Index exact_rank(const RationalMatrix& a) { return echelon_profile(a).rank; }

/// Reduced row echelon form over the rationals.
RationalMatrix reduced_row_echelon(RationalMatrix a, std::vector<Eigen::Index>* pivots = nullptr);

/// Right kernel basis, one column per free variable (free variable set to 1).
RationalMatrix nullspace(const RationalMatrix& a);

/// Scales a rational vector to a primitive integer vector whose first nonzero entry is positive.
std::vector<Integer> primitive_integer_vector(const RationalVector& v);

}  // namespace nevgcd
