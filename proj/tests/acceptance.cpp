// Acceptance suite: one PASS/FAIL line per criterion. `--only N` runs a
// single criterion, `--seed S` changes the base seed (recorded in the output).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "nevgcd/expunits.hpp"
#include "nevgcd/idealslice.hpp"
#include "nevgcd/nevandeg.hpp"
#include "nevgcd/parse.hpp"
#include "nevgcd/wronskian.hpp"
#include "support.hpp"

using namespace nevgcd;
using namespace testsupport;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Integer choose(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long span_oracle(const MultiPoly& f1, const MultiPoly& f2, long m) {
  const std::vector<Monomial> cols = monomials_of_degree(f1.nvars(), m);
  std::vector<std::vector<Rational>> rows;
  for (const MultiPoly* f : {&f1, &f2}) {
    for (const Monomial& x : monomials_of_degree(f1.nvars(), m - f->total_degree())) {
      const MultiPoly p = *f * x;
      std::vector<Rational> row;
      for (const Monomial& c : cols) row.push_back(p.coefficient(c));
      rows.push_back(std::move(row));
    }
  }
  return naive_rank(rows);
}

struct GridCase {
  long n, d, m;
  MultiPoly f, g;
};

std::vector<GridCase> basis_grid(std::uint64_t seed) {
  std::vector<GridCase> out;
  Rng rng(seed);
  for (long n = 1; n <= 3; ++n)
    for (long d = 1; d <= 2; ++d)
      for (long m = d; m <= 2 * d + 3; ++m)
        for (int t = 0; t < 10; ++t) {
          auto [f, g] = random_coprime_pair(rng, static_cast<std::size_t>(n + 1), d);
          out.push_back({n, d, m, f, g});
        }
  return out;
}

Outcome criterion_basis(std::uint64_t seed) {
  const auto t0 = Clock::now();
  Outcome o;
  long cases = 0;
  for (const GridCase& c : basis_grid(seed)) {
    const BasisSlice s = build_basis_slice(c.f, c.g, c.m, MonomialOrder::lex());
    const BasisVerification v = verify_basis(s);
    const Integer M = slice_constants(c.m, c.n, c.d).M;
    const bool ok = v.basis_size == M && v.rank == M && span_oracle(c.f, c.g, c.m) == M;
    if (!ok && o.pass) o.detail = "first failure at (n,d,m)=(" + std::to_string(c.n) + "," + std::to_string(c.d) + "," + std::to_string(c.m) + ") ";
    o.pass = o.pass && ok;
    ++cases;
  }
  const double secs = seconds_since(t0);
  o.pass = o.pass && secs < 120.0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%ld slices, %.2fs (limit 120s)", cases, secs);
  o.detail += buf;
  return o;
}

Outcome criterion_sums(std::uint64_t seed) {
  Outcome o;
  Rng rng(seed ^ 0x5151);
  long checks = 0;
  for (const GridCase& c : basis_grid(seed)) {
    std::vector<MonomialOrder> orders{MonomialOrder::lex()};
    for (int i = 0; i < 3; ++i) orders.push_back(random_weight_order(rng, c.f.nvars()));
    for (const MonomialOrder& ord : orders) {
      const BasisSlice s = build_basis_slice(c.f, c.g, c.m, ord);
      const SumFormulaReport r = verify_sum_formulas(s);
      o.pass = o.pass && r.pass;
      checks += static_cast<long>(r.checks.size());
      // closed forms recomputed here from the multipliers
      for (long i = 0; i <= c.n; ++i) {
        Integer b1 = 0, b2 = 0, b1p = 0;
        for (const SliceElement& e : s.B1) b1 += e.multiplier[static_cast<std::size_t>(i)];
        for (const SliceElement& e : s.B2) b2 += e.multiplier[static_cast<std::size_t>(i)];
        for (const SliceElement& e : s.B1prime) b1p += e.multiplier[static_cast<std::size_t>(i)];
        o.pass = o.pass && b1 == choose(c.m + c.n - c.d, c.n + 1) && b2 == choose(c.m + c.n - c.d, c.n + 1) &&
                 b1p == choose(c.m + c.n - 2 * c.d, c.n + 1) +
                            choose(c.m + c.n - 2 * c.d, c.n) * s.tm_F2[static_cast<std::size_t>(i)];
      }
    }
  }
  o.detail = std::to_string(checks) + " identity checks, lex + 3 weight orders per slice";
  return o;
}

Outcome criterion_tm(std::uint64_t seed) {
  Outcome o;
  Rng rng(seed ^ 0x7a7a);
  for (int t = 0; t < 1000; ++t) {
    const auto nvars = static_cast<std::size_t>(uniform(rng, 2, 4));
    const MonomialOrder ord = random_order(rng, nvars);
    const MultiPoly f = random_sparse(rng, nvars, 4, 5);
    const MultiPoly g = random_sparse(rng, nvars, 4, 5);
    o.pass = o.pass && trailing_monomial(f * g, ord) == trailing_monomial(f, ord) + trailing_monomial(g, ord);
  }
  o.detail = "1000 random pairs";
  return o;
}

Outcome criterion_asymptotic(std::uint64_t) {
  const auto t0 = Clock::now();
  Outcome o;
  std::ostringstream detail;
  for (long n = 2; n <= 3; ++n)
    for (long d = 1; d <= 2; ++d) {
      const AsymptoticReport r = asymptotic_check(n, d, 100);
      o.pass = o.pass && r.pass;
      detail << "(n=" << n << ",d=" << d << ") c:" << (r.c.bounded_by_reference ? "ok" : "exceeds")
             << " M:" << (r.M.bounded_by_reference ? "ok" : "exceeds")
             << " M':" << (r.Mprime.bounded_by_reference ? "ok" : "exceeds") << "; ";
    }
  const double secs = seconds_since(t0);
  o.pass = o.pass && secs < 10.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs (limit 10s)", secs);
  detail << buf;
  o.detail = detail.str();
  return o;
}

Outcome criterion_sweep(std::uint64_t) {
  const auto t0 = Clock::now();
  Outcome o;
  SweepConfig cfg;
  cfg.F = parse_multipoly("x1-1", 3);
  cfg.G = parse_multipoly("x2-1", 3);
  cfg.gs = {parse_rational_function("z"), parse_rational_function("z+1")};
  const SweepReport r = gcd_sweep(cfg);
  for (const SweepRow& row : r.rows) {
    Coeffs a(static_cast<std::size_t>(row.k + 1), 0), b;
    a[0] = -1;
    a.back() = 1;
    for (long i = 0; i <= row.k; ++i) b.push_back(Rational(nevgcd::binomial(row.k, i)));
    b[0] -= 1;
    const long oracle = naive_degree(naive_gcd(a, b));
    o.pass = o.pass && row.gcd_degree == oracle && row.gcd_degree == (row.k % 6 == 0 ? 2 : 0);
    if (row.k >= 20) o.pass = o.pass && row.ratio < Rational(1, 10);
  }

  SweepConfig second;
  second.F = parse_multipoly("x1*x2-1", 4);
  second.G = parse_multipoly("x3-1", 4);
  second.gs = {parse_rational_function("z"), parse_rational_function("z+1"), parse_rational_function("z+2")};
  const SweepReport s = gcd_sweep(second);
  const bool second_ok = s.threshold_k.has_value() && *s.threshold_k <= 60;
  o.pass = o.pass && second_ok;

  const double secs = seconds_since(t0);
  o.pass = o.pass && secs < 60.0;
  std::ostringstream detail;
  detail << "first instance threshold k=" << (r.threshold_k ? std::to_string(*r.threshold_k) : "none")
         << ", second instance k0=" << (s.threshold_k ? std::to_string(*s.threshold_k) : "none");
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.2fs (limit 60s)", secs);
  detail << buf;
  o.detail = detail.str();
  return o;
}

Outcome criterion_gates(std::uint64_t) {
  Outcome o;
  const std::vector<RationalFunction> dep{parse_rational_function("z^2"), parse_rational_function("z^3")};
  const IndependenceCertificate a = mult_independent(dep);
  const std::vector<RationalFunction> ind{parse_rational_function("z"), parse_rational_function("z+1")};
  const IndependenceCertificate b = mult_independent(ind);
  o.pass = !a.independent && a.witness == std::vector<Integer>{3, -2} && a.witness_verified &&
           power_product(dep, a.witness).is_constant() && b.independent && b.rank == 2;
  o.detail = "witness (" + to_string(a.witness.at(0)) + "," + to_string(a.witness.at(1)) + "), rank " +
             std::to_string(b.rank);
  return o;
}

Outcome criterion_slopes(std::uint64_t seed) {
  Outcome o;
  Rng rng(seed ^ 0x3c3c);
  for (int t = 0; t < 100; ++t) {
    const RationalFunction f = random_nonconstant_rf(rng, 5);
    const Rational a = rat(uniform(rng, -4, 4), uniform(rng, 1, 4));
    const FmtDecomposition d = fmt_decomposition(f, a);
    o.pass = o.pass && d.N_slope + d.m_slope == char_slope(f);
  }
  int pairs = 0;
  while (pairs < 100) {
    RationalFunction f = random_rational_function(rng, 4);
    RationalFunction g = random_rational_function(rng, 4);
    // share factors half of the time so the gcd slopes are not all zero
    if (uniform(rng, 0, 1) == 0) {
      const RationalFunction h = random_rational_function(rng, 2);
      f = f * h;
      g = g * h;
    }
    if (f.is_zero() || g.is_zero()) continue;
    ++pairs;
    o.pass = o.pass && tgcd_slope(f, g) == ngcd_slope(f, g) + mgcd_slope(f, g);
  }
  o.detail = "100 first-main-theorem instances, 100 gcd-characteristic instances";
  return o;
}

std::vector<Place> places_of(const std::vector<UniPoly>& parts) {
  std::vector<Place> places{Place::infinity()};
  for (const UniPoly& b : coprime_basis(parts)) places.push_back(Place::finite(b));
  return places;
}

Outcome criterion_wronskian(std::uint64_t seed) {
  Outcome o;
  Rng rng(seed ^ 0x9e9e);
  const RationalFunction z = RationalFunction::variable();
  int tuples = 0;
  long places = 0;
  const RationalFunction z1 = z - RationalFunction::constant(1);
  // entire (polynomial) tuples: the bound is a statement about holomorphic eta_j
  while (tuples < 200) {
    const long m = uniform(rng, 1, 5);
    std::vector<RationalFunction> etas;
    for (long i = 0; i < m; ++i) {
      etas.push_back(RationalFunction(random_unipoly(rng, 3)) * z.pow(uniform(rng, 0, 3)) * z1.pow(uniform(rng, 0, 2)));
    }
    const RationalFunction w = wronskian(etas);
    if (w.is_zero()) continue;
    ++tuples;
    std::vector<UniPoly> parts{w.num(), w.den()};
    for (const RationalFunction& e : etas) {
      parts.push_back(e.num());
      parts.push_back(e.den());
    }
    const std::vector<Place> pls = places_of(parts);
    for (const LocalCheckReport& r : ordw_check_all(etas, pls)) o.pass = o.pass && r.pass && !r.vacuous;
    places += static_cast<long>(pls.size());
  }
  const std::vector<RationalFunction> eq{z.pow(2), z.pow(3)};
  const LocalCheckReport r = ordw_check(eq, Place::finite(UniPoly::variable()));
  o.pass = o.pass && r.pass && r.lhs == r.rhs && r.lhs == 4;
  o.detail = "200 tuples over " + std::to_string(places) + " places; (z^2, z^3) at z: lhs=rhs=" + to_string(r.lhs);
  return o;
}

UniPoly random_split_poly(Rng& rng) {
  UniPoly p = UniPoly::constant(Rational(uniform(rng, 1, 3)));
  const long deg = uniform(rng, 0, 3);
  for (long i = 0; i < deg; ++i) p *= UniPoly(std::vector<Rational>{Rational(-uniform(rng, 0, 2)), Rational(1)});
  return p;
}

Outcome criterion_bs(std::uint64_t seed) {
  Outcome o;
  Rng rng(seed ^ 0xb5b5);
  int instances = 0;
  long places = 0;
  while (instances < 50) {
    const long n = uniform(rng, 1, 2);
    const long d = uniform(rng, 1, 2);
    const long m = uniform(rng, d, 2 * d + 2);
    auto [f, g] = random_coprime_pair(rng, static_cast<std::size_t>(n + 1), d);
    std::vector<UniPoly> gs;
    UniPoly common;
    for (long i = 0; i <= n; ++i) {
      gs.push_back(random_split_poly(rng));
      common = common.is_zero() ? gs.back() : uni_gcd(common, gs.back());
    }
    if (!common.is_constant()) continue;
    const UniPoly fg = evaluate(f, gs), gg = evaluate(g, gs);
    if (fg.is_zero() || gg.is_zero()) continue;
    ++instances;
    std::vector<UniPoly> parts = gs;
    parts.push_back(fg);
    parts.push_back(gg);
    for (const UniPoly& b : coprime_basis(parts)) {
      o.pass = o.pass && bs_check(f, g, m, gs, Place::finite(b)).check.pass;
      ++places;
    }
    o.pass = o.pass && bs_check(f, g, m, gs, Place::finite(UniPoly::variable() - UniPoly::constant(7))).check.pass;
    ++places;
  }
  o.detail = "50 instances over " + std::to_string(places) + " places";
  return o;
}

Outcome criterion_exp(std::uint64_t) {
  Outcome o;
  const QuadExt one = QuadExt::parse("1");
  for (long k = 1; k <= 20; ++k) o.pass = o.pass && exp_asym_ratio(one, QuadExt::parse("3/2"), k) == QuadExt::parse("1/3");
  for (long k = 1; k <= 1000; ++k) o.pass = o.pass && exp_asym_ratio(one, QuadExt::parse("sqrt2"), k).is_zero();
  o.detail = "(1,3/2): 1/3 for k<=20; (1,sqrt2): 0 for k<=1000";
  return o;
}

Outcome criterion_borel(std::uint64_t) {
  Outcome o;
  auto u = [](const char* c, const char* f) { return make_exp_unit(QuadExt::parse(c), QuadExt::parse(f)); };
  const std::vector<ExpUnit> paired{u("1", "1"), u("-1", "1"), u("1", "2"), u("-1", "2")};
  const std::vector<ExpUnit> mixed{u("1", "1"), u("1", "2"), u("-1", "1")};
  const std::vector<ExpUnit> green{u("1", "1"), u("-1", "1")};

  const BorelPartition a = borel_partition(paired);
  o.pass = o.pass && a.classes.size() == 2 && a.classes[0].vanishes && a.classes[1].vanishes && a.sum_vanishes &&
           a.sum_vanishes == borel_oracle_vanishes(paired);
  const BorelPartition b = borel_partition(mixed);
  o.pass = o.pass && b.classes.size() == 2 && b.classes[0].members == std::vector<std::size_t>{0, 2} &&
           b.classes[0].vanishes && !b.classes[1].vanishes && !b.sum_vanishes &&
           b.sum_vanishes == borel_oracle_vanishes(mixed);
  const BorelPartition c = borel_partition(green, 2);
  const std::vector<ExpUnit> squared{u("1", "2"), u("1", "2")};
  o.pass = o.pass && c.classes.size() == 1 && c.classes[0].coeff_sum == QuadExt::parse("2") && !c.sum_vanishes &&
           c.sum_vanishes == borel_oracle_vanishes(squared);
  o.detail = "3 examples, oracle agrees";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome(std::uint64_t)> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::stoull(argv[++i]);
    } else if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--seed S] [--only N]\n";
      return 3;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "ideal slice basis dimension", criterion_basis},
      {2, "slice summation identities", criterion_sums},
      {3, "trailing monomial multiplicativity", criterion_tm},
      {4, "binomial constant asymptotics", criterion_asymptotic},
      {5, "gcd sweep over shifted powers", criterion_sweep},
      {6, "independence gates", criterion_gates},
      {7, "slope first main theorem and gcd split", criterion_slopes},
      {8, "local Wronskian bound", criterion_wronskian},
      {9, "local ideal bound", criterion_bs},
      {10, "exponential unit dichotomy", criterion_exp},
      {11, "Borel partitions", criterion_borel},
  };

  std::cout << "acceptance seed=" << seed << "\n";
  bool all = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run(seed);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  [" << o.detail << "]\n";
  }
  return all ? 0 : 1;
}
