// Multivariate gcd over Q: recursive content / primitive-part reduction on the
// highest variable present, with a primitive pseudo-remainder sequence in that
// variable whose coefficients live in the ring of the remaining variables.

#include <stdexcept>

#include "nevgcd/multipoly.hpp"

namespace nevgcd {

namespace {

using Coeffs = std::vector<MultiPoly>;

long highest_variable(const MultiPoly& f) {
  for (std::size_t v = f.nvars(); v-- > 0;) {
    if (f.involves(v)) return static_cast<long>(v);
  }
  return -1;
}

Coeffs split_by(const MultiPoly& f, std::size_t v) {
  Coeffs out(static_cast<std::size_t>(f.degree_in(v)) + 1, MultiPoly(f.nvars()));
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    rest[v] = 0;
    out[m[v]].add_term(rest, c);
  }
  return out;
}

MultiPoly join(const Coeffs& cs, std::size_t v, std::size_t nvars) {
  MultiPoly out(nvars);
  for (std::size_t e = 0; e < cs.size(); ++e) {
    for (const auto& [m, c] : cs[e].terms()) {
      Monomial full = m;
      full[v] = static_cast<unsigned>(e);
      out.add_term(full, c);
    }
  }
  return out;
}

void trim(Coeffs& cs) {
  while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
}

MultiPoly normalized(MultiPoly g) {
  if (g.is_zero()) return g;
  const Rational lead = g.lex_leading_term().second;
  g *= 1 / lead;
  return g;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_of(const Coeffs& cs) {
  MultiPoly g(cs.front().nvars());
  for (const MultiPoly& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalized(c) : gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Coeffs primitive_of(Coeffs cs) {
  trim(cs);
  if (cs.empty()) return cs;
  const MultiPoly c = content_of(cs);
  if (!c.is_constant()) {
    for (MultiPoly& x : cs) x = exact_quotient(x, c);
  } else {
    for (MultiPoly& x : cs) x *= 1 / c.constant_term();
  }
  return cs;
}

// lc(b)-scaled remainder of a by b in the main variable.
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
  const std::size_t nb = b.size();
  while (a.size() >= nb) {
    const MultiPoly la = a.back();
    const std::size_t shift = a.size() - nb;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = b.back() * a[i];
    for (std::size_t j = 0; j < nb; ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  return a;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  const std::size_t nvars = a.nvars();
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(nvars, 1);

  const long hv = std::max(highest_variable(a), highest_variable(b));
  const auto v = static_cast<std::size_t>(hv);
  if (!a.involves(v)) return gcd_rec(a, content_of(split_by(b, v)));
  if (!b.involves(v)) return gcd_rec(content_of(split_by(a, v)), b);

  Coeffs ca = split_by(a, v);
  Coeffs cb = split_by(b, v);
  const MultiPoly c = gcd_rec(content_of(ca), content_of(cb));
  Coeffs pa = primitive_of(std::move(ca));
  Coeffs pb = primitive_of(std::move(cb));
  if (pa.size() < pb.size()) std::swap(pa, pb);

  Coeffs result;
  while (true) {
    Coeffs r = pseudo_remainder(std::move(pa), pb);
    if (r.empty()) {
      result = std::move(pb);
      break;
    }
    if (r.size() == 1) {
      result = Coeffs{MultiPoly::constant(nvars, 1)};
      break;
    }
    pa = std::move(pb);
    pb = primitive_of(std::move(r));
  }
  return normalized(c * join(primitive_of(std::move(result)), v, nvars));
}

}  // namespace

MultiPoly mp_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("gcd of polynomials in different rings");
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  return gcd_rec(a, b);
}

bool coprime_multivariate(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("coprimality test on a zero polynomial");
  return mp_gcd(f, g).is_constant();
}

}  // namespace nevgcd
