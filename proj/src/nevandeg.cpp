#include "nevgcd/nevandeg.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

namespace nevgcd {

namespace {

// Runs body(i) for i in [0, count) on a small pool; results are written by
// index so completion order never shows up in the output.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void check_sweep_inputs(const SweepConfig& cfg) {
  const std::size_t n = cfg.gs.size();
  if (n == 0) throw std::invalid_argument("sweep needs at least one g");
  for (const MultiPoly* p : {&cfg.F, &cfg.G}) {
    if (p->nvars() != n + 1 || p->involves(0)) {
      throw std::invalid_argument("F and G must be polynomials in x1..x" + std::to_string(n));
    }
  }
  if (cfg.k_min < 1 || cfg.k_step < 1 || cfg.k_max < cfg.k_min) throw std::invalid_argument("invalid k range");
  if (sgn(cfg.epsilon) <= 0) throw std::invalid_argument("epsilon must be positive");
  if (cfg.F.is_constant() || cfg.G.is_constant()) throw HypothesisError("F and G must be nonconstant");
  for (const RationalFunction& g : cfg.gs) {
    if (g.is_zero()) throw HypothesisError("the g_i must be nonzero");
  }
  if (!coprime_multivariate(cfg.F, cfg.G)) throw HypothesisError("F and G must be coprime");
}

template <typename RowSlope>
SweepReport run_sweep(const SweepConfig& cfg, IndependenceCertificate certificate, RowSlope slope) {
  long max_t = 0;
  for (const RationalFunction& g : cfg.gs) max_t = std::max(max_t, char_slope(g));

  SweepReport report;
  report.certificate = std::move(certificate);
  std::vector<long> ks;
  for (long k = cfg.k_min; k <= cfg.k_max; k += cfg.k_step) ks.push_back(k);
  report.rows.resize(ks.size());
  parallel_for(ks.size(), cfg.threads, [&](std::size_t i) {
    const long k = ks[i];
    const auto ku = static_cast<unsigned>(k);
    const RationalFunction fk = substitute(cfg.F, cfg.gs, ku);
    const RationalFunction gk = substitute(cfg.G, cfg.gs, ku);
    if (fk.is_zero() && gk.is_zero()) {
      throw std::domain_error("F(g^k) and G(g^k) both vanish identically at k = " + std::to_string(k));
    }
    SweepRow& row = report.rows[i];
    row.k = k;
    row.gcd_degree = slope(fk, gk);
    row.scale = k * max_t;
    row.ratio = Rational(row.gcd_degree, row.scale);
    row.ratio.canonicalize();
  });

  for (const SweepRow& row : report.rows) {
    if (row.ratio < cfg.epsilon) {
      report.first_below = row.k;
      break;
    }
  }
  for (auto it = report.rows.rbegin(); it != report.rows.rend() && it->ratio < cfg.epsilon; ++it) {
    report.threshold_k = it->k;
  }
  return report;
}

}  // namespace

long char_slope(const RationalFunction& f) {
  if (f.is_zero()) return 0;
  return std::max(f.num().degree(), f.den().degree());
}

long map_char_slope(std::span<const RationalFunction> gs) {
  UniPoly common = UniPoly::constant(1);
  for (const RationalFunction& g : gs) common = uni_lcm(common, g.den());
  std::vector<UniPoly> coords{common};
  for (const RationalFunction& g : gs) coords.push_back(g.num() * exact_quotient(common, g.den()));
  UniPoly g = coords.front();
  for (const UniPoly& c : coords) {
    if (!c.is_zero()) g = uni_gcd(g, c);
  }
  long slope = 0;
  for (const UniPoly& c : coords) {
    if (!c.is_zero()) slope = std::max(slope, exact_quotient(c, g).degree());
  }
  return slope;
}

long ngcd_slope(const RationalFunction& f, const RationalFunction& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("ngcd_slope of a zero function");
  return uni_gcd(f.num(), g.num()).degree();
}

long mgcd_slope(const RationalFunction& f, const RationalFunction& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("mgcd_slope of a zero function");
  return std::max(0L, std::min(valuation(f, Place::infinity()), valuation(g, Place::infinity())));
}

long tgcd_slope(const RationalFunction& f, const RationalFunction& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("tgcd_slope of two zero functions");
  const RationalFunction pair[] = {f, g};
  const long joint = map_char_slope(pair);
  // [f : g] is a constant point when either coordinate vanishes; otherwise it is [1 : g/f].
  const long projective = (f.is_zero() || g.is_zero()) ? 0 : char_slope(g / f);
  return joint - projective;
}

FmtDecomposition fmt_decomposition(const RationalFunction& f, const Rational& a) {
  if (f.is_constant()) throw std::invalid_argument("first main theorem needs a nonconstant function");
  const RationalFunction shifted = f - RationalFunction::constant(a);
  FmtDecomposition out;
  out.N_slope = std::max(0L, shifted.num().degree());
  out.m_slope = std::max(0L, valuation(shifted, Place::infinity()));
  return out;
}

SlopeReport slope_report(const RationalFunction& f, const RationalFunction& g) {
  SlopeReport r;
  r.T_f = char_slope(f);
  r.T_g = char_slope(g);
  r.N_gcd = ngcd_slope(f, g);
  r.m_gcd = mgcd_slope(f, g);
  r.T_gcd = tgcd_slope(f, g);
  return r;
}

long DivisorVector::degree() const {
  long total = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) total += exponents[i] * basis[i].degree();
  return total + exponents.back();
}

DivisorVector divisor_vector(const RationalFunction& f, std::span<const UniPoly> basis) {
  if (f.is_zero()) throw std::invalid_argument("divisor of the zero function");
  DivisorVector dv;
  dv.basis.assign(basis.begin(), basis.end());
  for (const UniPoly& b : basis) dv.exponents.push_back(valuation(f, Place::finite(b)));
  dv.exponents.push_back(valuation(f, Place::infinity()));
  return dv;
}

RationalFunction power_product(std::span<const RationalFunction> gs, std::span<const Integer> w) {
  if (gs.size() != w.size()) throw std::invalid_argument("power_product: length mismatch");
  RationalFunction out = RationalFunction::constant(1);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (!w[i].fits_slong_p()) throw std::overflow_error("exponent too large");
    if (sgn(w[i]) != 0) out = out * gs[i].pow(w[i].get_si());
  }
  return out;
}

IndependenceCertificate mult_independent(std::span<const RationalFunction> gs) {
  std::vector<UniPoly> parts;
  for (const RationalFunction& g : gs) {
    if (g.is_zero()) throw std::invalid_argument("multiplicative independence of a zero function");
    parts.push_back(g.num());
    parts.push_back(g.den());
  }
  IndependenceCertificate cert;
  cert.basis = coprime_basis(parts);
  const auto cols = static_cast<Eigen::Index>(cert.basis.size() + 1);
  IntegerMatrix e(static_cast<Eigen::Index>(gs.size()), cols);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const DivisorVector dv = divisor_vector(gs[i], cert.basis);
    cert.exponents.push_back(dv.exponents);
    for (Eigen::Index j = 0; j < cols; ++j) e(static_cast<Eigen::Index>(i), j) = dv.exponents[static_cast<std::size_t>(j)];
  }
  const EchelonProfile profile = echelon_profile(e);
  cert.rank = static_cast<long>(profile.rank);
  for (Eigen::Index p : profile.pivot_columns) cert.pivot_columns.push_back(static_cast<long>(p));
  cert.independent = cert.rank == static_cast<long>(gs.size());
  if (!cert.independent) {
    RationalMatrix et(cols, e.rows());
    for (Eigen::Index i = 0; i < e.rows(); ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) et(j, i) = Rational(e(i, j));
    }
    const RationalMatrix kernel = nullspace(et);
    cert.witness = primitive_integer_vector(kernel.col(0));
    cert.witness_verified = power_product(gs, cert.witness).is_constant();
  }
  return cert;
}

DependentArgumentsError::DependentArgumentsError(IndependenceCertificate certificate)
    : HypothesisError("the g_i are multiplicatively dependent"), certificate_(std::move(certificate)) {}

SweepReport gcd_sweep(const SweepConfig& cfg) {
  check_sweep_inputs(cfg);
  IndependenceCertificate cert = mult_independent(cfg.gs);
  if (!cert.independent) throw DependentArgumentsError(std::move(cert));
  return run_sweep(cfg, std::move(cert), [](const RationalFunction& fk, const RationalFunction& gk) {
    return uni_gcd(fk.num(), gk.num()).degree();
  });
}

SweepReport tgcd_sweep(const SweepConfig& cfg) {
  check_sweep_inputs(cfg);
  for (const RationalFunction& g : cfg.gs) {
    if (!g.is_polynomial()) throw HypothesisError("the T_gcd track needs polynomial g_i");
  }
  if (sgn(cfg.F.constant_term()) == 0 && sgn(cfg.G.constant_term()) == 0) {
    throw HypothesisError("F and G must not both vanish at the origin");
  }
  IndependenceCertificate cert = mult_independent(cfg.gs);
  if (!cert.independent) throw DependentArgumentsError(std::move(cert));
  return run_sweep(cfg, std::move(cert), [](const RationalFunction& fk, const RationalFunction& gk) {
    return tgcd_slope(fk, gk);
  });
}

}  // namespace nevgcd
