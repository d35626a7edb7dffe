#include "nevgcd/idealslice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "nevgcd/errors.hpp"
#include "nevgcd/linalg.hpp"

namespace nevgcd {

namespace {

void fill_monomials(std::vector<unsigned>& current, std::size_t index, long remaining, std::vector<Monomial>& out) {
  if (index + 1 == current.size()) {
    current[index] = static_cast<unsigned>(remaining);
    out.emplace_back(current);
    return;
  }
  for (long e = remaining; e >= 0; --e) {
    current[index] = static_cast<unsigned>(e);
    fill_monomials(current, index + 1, remaining - e, out);
  }
}

long order_in(const MultiPoly& p, std::size_t var) {
  long lowest = -1;
  for (const auto& [m, c] : p.terms()) {
    const long e = m[var];
    if (lowest < 0 || e < lowest) lowest = e;
  }
  return lowest;
}

Rational to_rational(long x) { return Rational(x); }

Rational power_of(long base, long exponent) { return power(to_rational(base), exponent); }

ResidualSummary summarize(const std::vector<AsymptoticRow>& rows, Rational AsymptoticRow::*field, long reference_m) {
  ResidualSummary s;
  s.reference_m = reference_m;
  std::size_t argmax = 0;
  std::size_t ref_index = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].*field > rows[argmax].*field) argmax = i;
    if (rows[i].m == reference_m) ref_index = i;
  }
  s.max = rows[argmax].*field;
  s.argmax = rows[argmax].m;
  s.at_reference = rows[ref_index].*field;

  s.bounded_by_reference = true;
  for (std::size_t i = ref_index; i < rows.size(); ++i) {
    if (rows[i].*field > s.at_reference) s.bounded_by_reference = false;
  }
  s.nonincreasing_after_max = true;
  for (std::size_t i = argmax + 1; i < rows.size(); ++i) {
    if (rows[i].*field > rows[i - 1].*field) s.nonincreasing_after_max = false;
  }
  bool up = true;
  bool down = true;
  for (std::size_t i = ref_index + 1; i < rows.size(); ++i) {
    if (rows[i].*field < rows[i - 1].*field) up = false;
    if (rows[i].*field > rows[i - 1].*field) down = false;
  }
  s.monotone_after_reference = up || down;
  return s;
}

}  // namespace

Integer monomial_count(long delta, long n) {
  if (n < 0) throw std::invalid_argument("monomial_count: n must be nonnegative");
  if (delta < 0) return 0;
  return binomial(n + delta, n);
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, long degree) {
  std::vector<Monomial> out;
  if (degree < 0 || nvars == 0) {
    if (nvars == 0 && degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<unsigned> current(nvars, 0);
  fill_monomials(current, 0, degree, out);
  return out;
}

SliceConstants slice_constants(long m, long n, long d) {
  if (d < 1 || n < 1) throw std::invalid_argument("slice_constants needs d >= 1 and n >= 1");
  if (m < d) throw std::invalid_argument("slice_constants needs m >= d");
  SliceConstants k;
  k.c = 2 * binomial(m + n - d, n + 1) - binomial(m + n - 2 * d, n + 1);
  k.M = 2 * binomial(m + n - d, n) - binomial(m + n - 2 * d, n);
  k.Mprime = binomial(m + n, n) - k.M;
  if (sgn(k.c) > 0) {
    Integer num = k.M * (k.M - 1);
    Integer den = 2 * k.c;
    Integer L;
    mpz_cdiv_q(L.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    k.L = L;
  }
  return k;
}

BasisSlice build_basis_slice(const MultiPoly& F1, const MultiPoly& F2, long m, const MonomialOrder& order) {
  if (F1.nvars() != F2.nvars()) throw std::invalid_argument("F1 and F2 live in different rings");
  if (F1.is_zero() || F2.is_zero()) throw HypothesisError("F1 and F2 must be nonzero");
  if (!F1.is_homogeneous() || !F2.is_homogeneous()) throw HypothesisError("F1 and F2 must be homogeneous");
  const long d = F1.total_degree();
  if (F2.total_degree() != d) throw HypothesisError("F1 and F2 must have the same degree");
  if (d < 1) throw HypothesisError("F1 and F2 must have positive degree");
  if (m < d) throw std::invalid_argument("slice degree m must be at least deg F = " + std::to_string(d));
  if (!order.is_lex() && order.weights().size() != F1.nvars()) {
    throw std::invalid_argument("weight vector length does not match the number of variables");
  }
  if (!coprime_multivariate(F1, F2)) throw HypothesisError("F1 and F2 must be coprime");

  BasisSlice s;
  s.m = m;
  s.n = static_cast<long>(F1.nvars()) - 1;
  s.d = d;
  s.order = order;
  s.F1 = F1;
  s.F2 = F2;
  const Monomial t1 = trailing_monomial(F1, order);
  const Monomial t2 = trailing_monomial(F2, order);
  if (order.less(t1, t2)) {
    std::swap(s.F1, s.F2);
    s.swapped = true;
  }
  s.tm_tie = t1 == t2;
  s.tm_F2 = trailing_monomial(s.F2, order);

  const std::size_t nvars = F1.nvars();
  for (const Monomial& x : monomials_of_degree(nvars, m - d)) {
    s.B1.push_back({s.F1 * x, 1, x});
    s.B2.push_back({s.F2 * x, 2, x});
  }
  std::set<Monomial> removed;
  for (const Monomial& x : monomials_of_degree(nvars, m - 2 * d)) {
    const Monomial mult = s.tm_F2 + x;
    s.B1prime.push_back({s.F1 * mult, 1, mult});
    removed.insert(mult);
  }
  for (const SliceElement& e : s.B1) {
    if (removed.count(e.multiplier) == 0) s.B.push_back(e);
  }
  s.B.insert(s.B.end(), s.B2.begin(), s.B2.end());
  return s;
}

RationalMatrix coefficient_matrix(const std::vector<SliceElement>& elements, long m) {
  const std::size_t nvars = elements.empty() ? 0 : elements.front().poly.nvars();
  const std::vector<Monomial> columns = monomials_of_degree(nvars, m);
  std::map<Monomial, Eigen::Index> column_of;
  for (std::size_t j = 0; j < columns.size(); ++j) column_of.emplace(columns[j], static_cast<Eigen::Index>(j));

  RationalMatrix a(static_cast<Eigen::Index>(elements.size()), static_cast<Eigen::Index>(columns.size()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = 0;
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& [mono, c] : elements[i].poly.terms()) {
      const auto it = column_of.find(mono);
      if (it == column_of.end()) throw std::invalid_argument("slice element is not homogeneous of degree m");
      a(static_cast<Eigen::Index>(i), it->second) = c;
    }
  }
  return a;
}

BasisVerification verify_basis(const BasisSlice& s) {
  BasisVerification v;
  v.basis_size = static_cast<long>(s.B.size());
  v.rank = static_cast<long>(exact_rank(coefficient_matrix(s.B, s.m)));
  std::vector<SliceElement> all = s.B1;
  all.insert(all.end(), s.B2.begin(), s.B2.end());
  v.span_dim = static_cast<long>(exact_rank(coefficient_matrix(all, s.m)));
  v.expected_M = slice_constants(s.m, s.n, s.d).M;
  v.quotient_dim = binomial(s.m + s.n, s.n) - v.span_dim;
  v.pass = v.rank == v.basis_size && v.span_dim == v.basis_size;
  return v;
}

SumFormulaReport verify_sum_formulas(const BasisSlice& s) {
  SumFormulaReport report;
  const long m = s.m;
  const long n = s.n;
  const long d = s.d;
  struct Side {
    const char* name;
    const std::vector<SliceElement>* elements;
    const MultiPoly* generator;
  };
  const Side sides[] = {{"B1", &s.B1, &s.F1}, {"B2", &s.B2, &s.F2}, {"B1prime", &s.B1prime, &s.F1}};
  for (const Side& side : sides) {
    std::vector<MultiPoly> quotients;
    quotients.reserve(side.elements->size());
    for (const SliceElement& e : *side.elements) quotients.push_back(exact_quotient(e.poly, *side.generator));
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
      SumFormulaCheck check;
      check.set = side.name;
      check.variable = i;
      check.observed = 0;
      for (const MultiPoly& q : quotients) check.observed += order_in(q, i);
      if (side.elements == &s.B1prime) {
        check.expected = binomial(m + n - 2 * d, n + 1) + binomial(m + n - 2 * d, n) * s.tm_F2[i];
      } else {
        check.expected = binomial(m + n - d, n + 1);
      }
      check.pass = check.observed == check.expected;
      report.pass = report.pass && check.pass;
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

AsymptoticReport asymptotic_check(long n, long d, long m_max) {
  if (n < 1 || d < 1) throw std::invalid_argument("asymptotic_check needs n >= 1 and d >= 1");
  if (m_max < 4 * d) throw std::invalid_argument("asymptotic_check needs m_max >= 4d");
  AsymptoticReport r;
  r.n = n;
  r.d = d;
  r.m_max = m_max;
  const Rational fact_n1(factorial(static_cast<unsigned long>(n + 1)));
  const Rational fact_n(factorial(static_cast<unsigned long>(n)));
  const Rational fact_nm1(factorial(static_cast<unsigned long>(n - 1)));
  for (long m = 2 * d; m <= m_max; ++m) {
    const SliceConstants k = slice_constants(m, n, d);
    AsymptoticRow row;
    row.m = m;
    row.c = k.c;
    row.M = k.M;
    row.Mprime = k.Mprime;
    const Rational scale = power_of(m, n - 1);
    row.c_residual = abs(Rational(k.c) - power_of(m, n + 1) / fact_n1 - power_of(m, n) / (2 * fact_nm1)) / scale;
    row.M_residual = abs(Rational(k.M) - power_of(m, n) / fact_n) / scale;
    row.Mprime_scaled = n >= 2 ? Rational(k.Mprime) / power_of(m, n - 2) : Rational(k.Mprime);
    r.rows.push_back(std::move(row));
  }
  const long reference = std::clamp(10L, 2 * d, m_max);
  r.c = summarize(r.rows, &AsymptoticRow::c_residual, reference);
  r.M = summarize(r.rows, &AsymptoticRow::M_residual, reference);
  r.Mprime = summarize(r.rows, &AsymptoticRow::Mprime_scaled, reference);
  r.pass = r.c.bounded_by_reference && r.M.bounded_by_reference && r.Mprime.bounded_by_reference;
  return r;
}

}  // namespace nevgcd
