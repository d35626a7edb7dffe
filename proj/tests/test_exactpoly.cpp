#include <doctest.h>

#include <stdexcept>

#include "nevgcd/parse.hpp"
#include "nevgcd/places.hpp"
#include "nevgcd/zpoly.hpp"
#include "support.hpp"

using namespace nevgcd;
using namespace testsupport;

namespace {

UniPoly up(const char* s) { return parse_unipoly(s); }
RationalFunction rf(const char* s) { return parse_rational_function(s); }
MultiPoly mp(const char* s, std::size_t nvars = 0) { return parse_multipoly(s, nvars); }

zpoly::ZPoly random_zpoly(Rng& rng, long len, int bits) {
  zpoly::ZPoly p(static_cast<std::size_t>(len));
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(static_cast<unsigned long>(rng()));
  for (Integer& c : p) {
    c = gr.get_z_bits(static_cast<unsigned long>(bits));
    if (rng() & 1U) c = -c;
  }
  return p;
}

}  // namespace

TEST_CASE("multipoly addition and multiplication") {
  CHECK((mp("x1") + mp("-x1")).is_zero());
  CHECK(mp("x0^2+x1") + mp("x1") == mp("x0^2+2*x1"));
  CHECK(mp("3/2*x0*x1") + mp("1/2*x0*x1") == mp("2*x0*x1"));
  CHECK(mp("x0", 2) * mp("x1") == mp("x0*x1"));
  CHECK(mp("(x0+x1)^2") == mp("x0^2+2*x0*x1+x1^2"));
  CHECK((mp("0", 3) * mp("x0+x2")).is_zero());
}

TEST_CASE("ring laws on random triples") {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const MultiPoly a = random_sparse(rng, 3, 3, 4);
    const MultiPoly b = random_sparse(rng, 3, 3, 4);
    const MultiPoly c = random_sparse(rng, 3, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("homogenize and degree equalization") {
  CHECK(homogenize(mp("x1-1"), 1) == mp("x1-x0"));
  CHECK(homogenize(mp("x1*x2+x1+1"), 2) == mp("x1*x2+x0*x1+x0^2"));
  CHECK(homogenize(mp("1", 1), 3) == mp("x0^3"));
  CHECK_THROWS_AS(homogenize(mp("x1^2"), 1), std::invalid_argument);

  auto [f, g] = equalize_degrees(mp("x1-1", 3), mp("x2^2-2", 3));
  CHECK(f == mp("(x1-1)^2", 3));
  CHECK(g == mp("x2^2-2", 3));
  auto [p, q] = equalize_degrees(mp("x1"), mp("x1"));
  CHECK(p == mp("x1"));
  CHECK(q == mp("x1"));

  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    MultiPoly a = random_sparse(rng, 4, 3, 5);
    // affine: drop x0
    MultiPoly affine(4);
    for (const auto& [m, c] : a.terms()) {
      std::vector<unsigned> e = m.exponents();
      e[0] = 0;
      affine.add_term(Monomial(e), c);
    }
    if (affine.is_zero()) continue;
    const long d = affine.total_degree() + uniform(rng, 0, 2);
    const MultiPoly h = homogenize(affine, d);
    CHECK(h.is_homogeneous());
    CHECK(dehomogenize(h) == affine);
  }
}

TEST_CASE("univariate gcd examples") {
  CHECK(uni_gcd(up("z^2-1"), up("z-1")) == up("z-1"));
  CHECK(uni_gcd(up("z^6-1"), up("(z+1)^6-1")) == up("z^2+z+1"));
  CHECK(uni_gcd(up("2*z+4"), UniPoly()) == up("z+2"));
}

TEST_CASE("univariate gcd agrees with Euclid over Q") {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const UniPoly w = random_unipoly(rng, 3);
    const UniPoly p = random_unipoly(rng, 5) * w;
    const UniPoly q = random_unipoly(rng, 5) * w;
    if (p.is_zero() && q.is_zero()) continue;
    const UniPoly g = uni_gcd(p, q);
    CHECK(coeffs_of(g) == naive_gcd(coeffs_of(p), coeffs_of(q)));
    CHECK(uni_gcd_prs(p, q) == g);
    if (!p.is_zero() && !q.is_zero()) CHECK(uni_gcd_modular(p, q) == g);
    if (!w.is_zero() && !g.is_zero()) CHECK(divides(w, g));
  }
}

TEST_CASE("gcd of scaled inputs scales by the common factor") {
  Rng rng(14);
  for (int t = 0; t < 50; ++t) {
    const UniPoly p = random_unipoly(rng, 6);
    const UniPoly q = random_unipoly(rng, 6);
    const UniPoly w = random_unipoly(rng, 4);
    if (p.is_zero() || q.is_zero() || w.is_zero()) continue;
    CHECK(uni_gcd(p * w, q * w) == (uni_gcd(p, q) * w).monic());
  }
}

TEST_CASE("modular gcd on large inputs") {
  for (long k : {66L, 120L, 300L}) {
    const UniPoly a = up("z").pow(static_cast<unsigned long>(k)) - UniPoly::constant(1);
    const UniPoly b = up("z+1").pow(static_cast<unsigned long>(k)) - UniPoly::constant(1);
    const UniPoly g = uni_gcd(a, b);
    CHECK(g == uni_gcd_prs(a, b));
    CHECK(g.degree() == (k % 6 == 0 ? 2 : 0));
  }
}

TEST_CASE("Kronecker multiplication matches schoolbook") {
  Rng rng(15);
  for (int t = 0; t < 40; ++t) {
    const zpoly::ZPoly a = random_zpoly(rng, uniform(rng, 1, 90), static_cast<int>(uniform(rng, 1, 200)));
    const zpoly::ZPoly b = random_zpoly(rng, uniform(rng, 1, 90), static_cast<int>(uniform(rng, 1, 200)));
    CHECK(zpoly::multiply_kronecker(a, b) == zpoly::multiply_schoolbook(a, b));
  }
}

TEST_CASE("rational function reduction") {
  CHECK(rf_reduce(up("z^2-1"), up("z-1")) == RationalFunction(up("z+1")));
  const RationalFunction r = rf_reduce(up("2*z"), up("2"));
  CHECK(r.num() == up("z"));
  CHECK(r.den() == up("1"));
  CHECK(rf_reduce(up("z"), up("z")) == RationalFunction::constant(1));
  CHECK_THROWS(rf_reduce(up("z"), UniPoly()));

  Rng rng(16);
  for (int t = 0; t < 60; ++t) {
    const RationalFunction f = random_rational_function(rng, 3);
    const RationalFunction g = random_rational_function(rng, 3);
    CHECK((f * g) / g == f);
    CHECK((f + g) - g == f);
    CHECK(uni_gcd(f.num(), f.den()).is_constant());
    CHECK(f.den().leading_coefficient() == 1);
  }
}

TEST_CASE("substitution") {
  const RationalFunction z = RationalFunction::variable();
  const std::vector<RationalFunction> one{z};
  CHECK(substitute(mp("x1-1"), one, 3) == rf("z^3-1"));
  const std::vector<RationalFunction> inv{z, rf("1/z")};
  CHECK(substitute(mp("x1*x2"), inv, 2) == RationalFunction::constant(1));
  const std::vector<RationalFunction> shift{z, rf("z+1")};
  CHECK(substitute(mp("x1+x2"), shift, 1) == rf("2*z+1"));

  Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    MultiPoly f(3);
    const MultiPoly raw = random_sparse(rng, 3, 3, 5);
    for (const auto& [m, c] : raw.terms()) {
      std::vector<unsigned> e = m.exponents();
      e[0] = 0;
      f.add_term(Monomial(e), c);
    }
    const std::vector<RationalFunction> gs{random_rational_function(rng, 2), random_rational_function(rng, 2)};
    const unsigned k = static_cast<unsigned>(uniform(rng, 1, 4));
    CHECK(substitute(f, gs, k) == substitute(power_variables(f, k), gs, 1));
  }
}

TEST_CASE("multivariate coprimality") {
  CHECK(coprime_multivariate(mp("x1-1", 3), mp("x2-1", 3)));
  CHECK_FALSE(coprime_multivariate(mp("x1*x2-x1"), mp("x2-1")));
  CHECK(coprime_multivariate(mp("x1^2+x2^2"), mp("x1^2-x2^2")));

  Rng rng(18);
  for (int t = 0; t < 40; ++t) {
    const MultiPoly h = random_sparse(rng, 3, 2, 3);
    const MultiPoly a = random_sparse(rng, 3, 2, 3);
    const MultiPoly b = random_sparse(rng, 3, 2, 3);
    const MultiPoly g = mp_gcd(a * h, b * h);
    CHECK(divides(h, g));
    CHECK(divides(g, a * h));
    CHECK(divides(g, b * h));
    CHECK(exact_quotient(a * h, h) == a);
  }
}

TEST_CASE("coprime basis") {
  const std::vector<UniPoly> sq{up("z^2"), up("z^3")};
  CHECK(coprime_basis(sq) == std::vector<UniPoly>{up("z")});
  const std::vector<UniPoly> split{up("z^2-1"), up("z-1")};
  CHECK(coprime_basis(split) == std::vector<UniPoly>{up("z-1"), up("z+1")});
  const std::vector<UniPoly> already{up("z"), up("z+1")};
  CHECK(coprime_basis(already) == already);

  Rng rng(19);
  for (int t = 0; t < 40; ++t) {
    std::vector<UniPoly> ps;
    const UniPoly shared = random_unipoly(rng, 2);
    for (int i = 0; i < 4; ++i) {
      UniPoly p = random_unipoly(rng, 3) * (i % 2 == 0 ? shared : UniPoly::constant(1));
      if (!p.is_zero()) ps.push_back(p);
    }
    const std::vector<UniPoly> basis = coprime_basis(ps);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(is_squarefree(basis[i]));
      for (std::size_t j = i + 1; j < basis.size(); ++j) CHECK(uni_gcd(basis[i], basis[j]).is_constant());
    }
    for (const UniPoly& p : ps) {
      const std::vector<long> e = basis_exponents(p, basis);
      UniPoly rebuilt = UniPoly::constant(p.leading_coefficient());
      for (std::size_t i = 0; i < basis.size(); ++i) rebuilt *= basis[i].pow(static_cast<unsigned long>(e[i]));
      CHECK(rebuilt == p);
    }
  }
}

TEST_CASE("valuations") {
  CHECK(valuation(rf("z^2/(z+1)"), Place::finite(up("z"))) == 2);
  CHECK(valuation(rf("z^2/(z+1)"), Place::infinity()) == -1);
  CHECK(valuation(rf("(z-1)/(z+1)"), Place::finite(up("z"))) == 0);
  CHECK(valuation(rf("(z^2+z+1)^2"), Place::finite(up("z^2+z+1"))) == 2);
  CHECK_THROWS_AS(valuation(rf("z^2*(z-1)"), Place::finite(up("z^2-z"))), std::domain_error);
  CHECK_THROWS(Place::finite(up("z^2")));
  CHECK_THROWS(Place::finite(up("3")));

  Rng rng(20);
  for (int t = 0; t < 60; ++t) {
    const RationalFunction f = random_rational_function(rng, 4) * rf("z^2").pow(uniform(rng, -2, 2));
    if (f.is_zero()) continue;
    const std::vector<UniPoly> parts{f.num(), f.den()};
    const std::vector<UniPoly> basis = coprime_basis(parts);
    long total = valuation(f, Place::infinity());
    for (const UniPoly& b : basis) {
      const long v = valuation(f, Place::finite(b));
      total += v * b.degree();
      const long oracle = naive_multiplicity(coeffs_of(f.num()), coeffs_of(b)) -
                          naive_multiplicity(coeffs_of(f.den()), coeffs_of(b));
      CHECK(v == oracle);
    }
    CHECK(total == 0);
  }
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_multipoly("x1+"), ParseError);
  CHECK_THROWS_AS(parse_multipoly("x1/x2"), ParseError);
  CHECK_THROWS_AS(parse_unipoly("1/z"), ParseError);
  CHECK_THROWS_AS(parse_rational_function("z/(z-z)"), std::exception);
  CHECK(parse_rational_function("(z^2-1)/(z-1)") == rf("z+1"));
  CHECK(parse_multipoly("3/2*x1", 3).nvars() == 3);
}
