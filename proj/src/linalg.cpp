#include "nevgcd/linalg.hpp"

namespace nevgcd {

IntegerMatrix clear_row_denominators(const RationalMatrix& a) {
  IntegerMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Integer scale = 1;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(i, j).get_den_mpz_t());
    }
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out(i, j) = exact_quotient(scale, a(i, j).get_den()) * a(i, j).get_num();
    }
  }
  return out;
}

EchelonProfile echelon_profile(const IntegerMatrix& a) {
  IntegerMatrix work = a;
  return fraction_free_echelon(work);
}

EchelonProfile echelon_profile(const RationalMatrix& a) {
  IntegerMatrix work = clear_row_denominators(a);
  return fraction_free_echelon(work);
}

RationalMatrix reduced_row_echelon(RationalMatrix a, std::vector<Eigen::Index>* pivots) {
  using Eigen::Index;
  std::vector<Index> pivot_columns;
  Index r = 0;
  for (Index col = 0; col < a.cols() && r < a.rows(); ++col) {
    Index pivot = r;
    while (pivot < a.rows() && is_zero(a(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    for (Index j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
    const Rational inv = 1 / a(r, col);
    for (Index j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, col))) continue;
      const Rational factor = a(i, col);
      for (Index j = 0; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
    }
    pivot_columns.push_back(col);
    ++r;
  }
  if (pivots != nullptr) *pivots = std::move(pivot_columns);
  return a;
}

RationalMatrix nullspace(const RationalMatrix& a) {
  using Eigen::Index;
  std::vector<Index> pivots;
  const RationalMatrix rref = reduced_row_echelon(a, &pivots);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Index> free_columns;
  for (Index j = 0; j < a.cols(); ++j) {
    if (!is_pivot[static_cast<std::size_t>(j)]) free_columns.push_back(j);
  }
  RationalMatrix basis(a.cols(), static_cast<Index>(free_columns.size()));
  for (Index c = 0; c < basis.cols(); ++c) {
    for (Index i = 0; i < basis.rows(); ++i) basis(i, c) = 0;
    const Index f = free_columns[static_cast<std::size_t>(c)];
    basis(f, c) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis(pivots[r], c) = -rref(static_cast<Index>(r), f);
    }
  }
  return basis;
}

std::vector<Integer> primitive_integer_vector(const RationalVector& v) {
  Integer scale = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v(i).get_den_mpz_t());
  }
  std::vector<Integer> out(static_cast<std::size_t>(v.size()));
  Integer content = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out[static_cast<std::size_t>(i)] = exact_quotient(scale, v(i).get_den()) * v(i).get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[static_cast<std::size_t>(i)].get_mpz_t());
  }
  if (content == 0) return out;
  int lead_sign = 0;
  for (const Integer& x : out) {
    if (sgn(x) != 0) {
      lead_sign = sgn(x);
      break;
    }
  }
  if (lead_sign < 0) content = -content;
  for (Integer& x : out) x = exact_quotient(x, content);
  return out;
}

}  // namespace nevgcd
