#pragma once

// Shared generators and independent oracles for the test binaries. The
// oracles deliberately avoid the library's algorithms: plain Euclid over Q,
// textbook Gaussian elimination, Leibniz expansion, repeated division.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nevgcd/expunits.hpp"
#include "nevgcd/multipoly.hpp"
#include "nevgcd/ordering.hpp"
#include "nevgcd/rational_function.hpp"

namespace testsupport {

using nevgcd::Integer;
using nevgcd::Monomial;
using nevgcd::MonomialOrder;
using nevgcd::MultiPoly;
using nevgcd::Rational;
using nevgcd::RationalFunction;
using nevgcd::UniPoly;

using Rng = std::mt19937_64;
using Coeffs = std::vector<Rational>;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational rat(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// ---- naive dense polynomials over Q ----

inline void trim(Coeffs& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline Coeffs coeffs_of(const UniPoly& p) { return p.coefficients(); }

inline Coeffs naive_mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// Long division; returns {quotient, remainder}.
inline std::pair<Coeffs, Coeffs> naive_divmod(Coeffs a, const Coeffs& b) {
  trim(a);
  Coeffs q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline Coeffs naive_gcd(Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = naive_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const Rational lead = a.back();
  for (Rational& c : a) c /= lead;
  return a;
}

inline long naive_degree(const Coeffs& p) { return static_cast<long>(p.size()) - 1; }

// Largest e with p^e | a, by repeated division.
inline long naive_multiplicity(Coeffs a, const Coeffs& p) {
  long e = 0;
  while (true) {
    auto [q, r] = naive_divmod(a, p);
    if (!r.empty()) return e;
    a = std::move(q);
    ++e;
  }
}

// ---- rank by textbook elimination over Q ----

inline long naive_rank(std::vector<std::vector<Rational>> rows) {
  long rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

// ---- Leibniz determinant over Q(z) ----

inline RationalFunction leibniz_det(const std::vector<std::vector<RationalFunction>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  RationalFunction total;
  do {
    int parity = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) parity = -parity;
    RationalFunction term = RationalFunction::constant(parity);
    for (std::size_t i = 0; i < n; ++i) term = term * a[i][perm[i]];
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// ---- Borel oracle: sort by frequency, sum coefficients ----

inline bool borel_oracle_vanishes(std::vector<nevgcd::ExpUnit> units) {
  auto key = [](const nevgcd::QuadExt& q) { return std::make_tuple(q.D(), q.a(), q.b()); };
  std::sort(units.begin(), units.end(),
            [&](const nevgcd::ExpUnit& x, const nevgcd::ExpUnit& y) { return key(x.freq) < key(y.freq); });
  for (std::size_t i = 0; i < units.size();) {
    std::size_t j = i;
    nevgcd::QuadExt sum;
    while (j < units.size() && units[j].freq == units[i].freq) sum = sum + units[j++].coeff;
    if (!sum.is_zero()) return false;
    i = j;
  }
  return true;
}

// ---- generators ----

inline UniPoly random_unipoly(Rng& rng, long max_degree, long bound = 4) {
  const long deg = uniform(rng, 0, max_degree);
  Coeffs c(static_cast<std::size_t>(deg + 1));
  for (Rational& x : c) x = uniform(rng, -bound, bound);
  if (sgn(c.back()) == 0) c.back() = 1;
  return UniPoly(c);
}

inline RationalFunction random_rational_function(Rng& rng, long max_degree) {
  UniPoly num = random_unipoly(rng, max_degree);
  if (num.is_zero()) num = UniPoly::constant(1);
  UniPoly den = random_unipoly(rng, max_degree);
  if (den.is_zero()) den = UniPoly::constant(1);
  return RationalFunction(num, den);
}

inline RationalFunction random_nonconstant_rf(Rng& rng, long max_degree) {
  while (true) {
    RationalFunction f = random_rational_function(rng, max_degree);
    if (!f.is_constant()) return f;
  }
}

inline MultiPoly random_homogeneous(Rng& rng, std::size_t nvars, long degree, long bound = 3) {
  MultiPoly out(nvars);
  // enumerate exponents of the given degree
  std::vector<unsigned> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i + 1 == nvars) {
      e[i] = static_cast<unsigned>(left);
      const long c = uniform(rng, -bound, bound);
      if (c != 0) out.add_term(Monomial(e), Rational(c));
      return;
    }
    for (long k = 0; k <= left; ++k) {
      e[i] = static_cast<unsigned>(k);
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

inline MultiPoly random_sparse(Rng& rng, std::size_t nvars, long max_degree, int terms, long bound = 5) {
  MultiPoly out(nvars);
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> e(nvars);
    for (unsigned& x : e) x = static_cast<unsigned>(uniform(rng, 0, max_degree));
    const long c = uniform(rng, -bound, bound);
    if (c != 0) out.add_term(Monomial(e), Rational(c));
  }
  if (out.is_zero()) out.add_term(Monomial(std::vector<unsigned>(nvars, 0)), Rational(1));
  return out;
}

inline std::pair<MultiPoly, MultiPoly> random_coprime_pair(Rng& rng, std::size_t nvars, long degree) {
  while (true) {
    MultiPoly f = random_homogeneous(rng, nvars, degree);
    MultiPoly g = random_homogeneous(rng, nvars, degree);
    if (f.is_zero() || g.is_zero()) continue;
    if (nevgcd::coprime_multivariate(f, g)) return {f, g};
  }
}

inline MonomialOrder random_weight_order(Rng& rng, std::size_t nvars, long max_weight = 5) {
  std::vector<Integer> w(nvars);
  for (Integer& x : w) x = uniform(rng, 0, max_weight);
  return MonomialOrder::weight(w);
}

inline MonomialOrder random_order(Rng& rng, std::size_t nvars) {
  if (uniform(rng, 0, 3) == 0) return MonomialOrder::lex();
  return random_weight_order(rng, nvars);
}

}  // namespace testsupport
