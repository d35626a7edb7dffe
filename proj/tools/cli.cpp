#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "nevgcd/errors.hpp"
#include "nevgcd/expunits.hpp"
#include "nevgcd/idealslice.hpp"
#include "nevgcd/nevandeg.hpp"
#include "nevgcd/parse.hpp"
#include "nevgcd/wronskian.hpp"

namespace nevgcd::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// A report that was produced together with its exit status. Hypothesis
// rejections still carry a report (the certificate), so they travel as values.
struct Result {
  int code = kSuccess;
  std::string body;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---- serialization ----

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return to_string(z);
}

json rational_json(const Rational& q) { return to_string(q); }

json monomial_json(const Monomial& m) {
  json out = json::array();
  for (unsigned e : m.exponents()) out.push_back(e);
  return out;
}

json element_json(const SliceElement& e) {
  return json{{"poly", e.poly.to_string()}, {"generator", e.generator}, {"multiplier", monomial_json(e.multiplier)}};
}

json elements_json(const std::vector<SliceElement>& es) {
  json out = json::array();
  for (const SliceElement& e : es) out.push_back(element_json(e));
  return out;
}

json constants_json(const SliceConstants& k) {
  json out{{"c", integer_json(k.c)}, {"M", integer_json(k.M)}, {"Mprime", integer_json(k.Mprime)}};
  out["L"] = k.L ? integer_json(*k.L) : json(nullptr);
  return out;
}

json certificate_json(const IndependenceCertificate& c) {
  json basis = json::array();
  for (const UniPoly& b : c.basis) basis.push_back(b.to_string());
  basis.push_back("inf");
  json out{{"independent", c.independent},
           {"basis", basis},
           {"exponents", c.exponents},
           {"rank", c.rank},
           {"pivot_columns", c.pivot_columns}};
  if (!c.independent) {
    json w = json::array();
    for (const Integer& x : c.witness) w.push_back(integer_json(x));
    out["witness"] = w;
    out["witness_verified"] = c.witness_verified;
  }
  return out;
}

json local_json(const LocalCheckReport& r) {
  return json{{"place", r.place.to_string()},    {"lhs", integer_json(r.lhs)}, {"rhs", integer_json(r.rhs)},
              {"pass", r.pass},                  {"vacuous", r.vacuous},       {"regular", r.regular}};
}

json header(const RunConfig& cfg) { return json{{"command", cfg.command}, {"seed", cfg.seed}}; }

std::string csv_header(const RunConfig& cfg, const std::string& extra = "") {
  std::string h = "# nevgcd " + cfg.command + " seed=" + std::to_string(cfg.seed);
  if (!extra.empty()) h += " " + extra;
  return h + "\n";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- argument helpers ----

std::vector<RationalFunction> parse_rfs(const std::vector<std::string>& xs) {
  std::vector<RationalFunction> out;
  for (const std::string& x : xs) out.push_back(parse_rational_function(x));
  return out;
}

std::vector<UniPoly> parse_polys(const std::vector<std::string>& xs) {
  std::vector<UniPoly> out;
  for (const std::string& x : xs) out.push_back(parse_unipoly(x));
  return out;
}

Place parse_place(const std::string& text) {
  if (text == "inf" || text == "infinity") return Place::infinity();
  return Place::finite(parse_unipoly(text));
}

// Parses expressions into a ring with exactly nvars variables.
MultiPoly parse_in_ring(const std::string& text, std::size_t nvars, const char* what) {
  MultiPoly p = parse_multipoly(text, nvars);
  if (p.nvars() != nvars) {
    throw UsageError(std::string(what) + " uses variables beyond x" + std::to_string(nvars - 1));
  }
  return p;
}

std::pair<MultiPoly, MultiPoly> parse_pair(const std::string& a, const std::string& b) {
  const MultiPoly pa = parse_multipoly(a);
  const MultiPoly pb = parse_multipoly(b);
  const std::size_t nvars = std::max(pa.nvars(), pb.nvars());
  return {pa.with_nvars(nvars), pb.with_nvars(nvars)};
}

std::vector<UniPoly> places_basis(std::vector<UniPoly> parts) {
  std::erase_if(parts, [](const UniPoly& p) { return p.is_zero(); });
  return coprime_basis(parts);
}

// ---- subcommands ----

struct BasisOptions {
  std::string F1, F2, order = "lex";
  long m = 0;
};

Result cmd_basis(const RunConfig& cfg, const BasisOptions& o) {
  auto [f1, f2] = parse_pair(o.F1, o.F2);
  const BasisSlice s = build_basis_slice(f1, f2, o.m, MonomialOrder::parse(o.order));
  const BasisVerification v = verify_basis(s);
  const SumFormulaReport sums = verify_sum_formulas(s);
  json j = header(cfg);
  j["m"] = s.m;
  j["n"] = s.n;
  j["d"] = s.d;
  j["order"] = s.order.to_string();
  j["F1"] = s.F1.to_string();
  j["F2"] = s.F2.to_string();
  j["swapped"] = s.swapped;
  j["tm_tie"] = s.tm_tie;
  j["tm_F2"] = monomial_json(s.tm_F2);
  j["constants"] = constants_json(slice_constants(s.m, s.n, s.d));
  j["B1"] = elements_json(s.B1);
  j["B2"] = elements_json(s.B2);
  j["B1prime"] = elements_json(s.B1prime);
  j["B"] = elements_json(s.B);
  j["verification"] = json{{"basis_size", v.basis_size},
                           {"rank", v.rank},
                           {"span_dim", v.span_dim},
                           {"expected_M", integer_json(v.expected_M)},
                           {"quotient_dim", integer_json(v.quotient_dim)},
                           {"pass", v.pass}};
  json checks = json::array();
  for (const SumFormulaCheck& c : sums.checks) {
    checks.push_back(json{{"set", c.set},
                          {"variable", c.variable},
                          {"observed", integer_json(c.observed)},
                          {"expected", integer_json(c.expected)},
                          {"pass", c.pass}});
  }
  j["sum_formulas"] = json{{"pass", sums.pass}, {"checks", checks}};
  const bool pass = v.pass && v.basis_size == v.expected_M && sums.pass;
  j["pass"] = pass;
  return {pass ? kSuccess : kVerificationFailed, dump(j)};
}

struct IdentitiesOptions {
  long n = 2, d = 1, mmax = 100;
};

json summary_json(const ResidualSummary& s) {
  return json{{"max", rational_json(s.max)},
              {"argmax", s.argmax},
              {"reference_m", s.reference_m},
              {"at_reference", rational_json(s.at_reference)},
              {"bounded_by_reference", s.bounded_by_reference},
              {"nonincreasing_after_max", s.nonincreasing_after_max},
              {"monotone_after_reference", s.monotone_after_reference}};
}

Result cmd_identities(const RunConfig& cfg, const IdentitiesOptions& o) {
  const AsymptoticReport r = asymptotic_check(o.n, o.d, o.mmax);
  const int code = r.pass ? kSuccess : kVerificationFailed;
  if (cfg.format == Format::Json) {
    json j = header(cfg);
    j["n"] = r.n;
    j["d"] = r.d;
    j["m_max"] = r.m_max;
    json rows = json::array();
    for (const AsymptoticRow& row : r.rows) {
      rows.push_back(json{{"m", row.m},
                          {"c", integer_json(row.c)},
                          {"M", integer_json(row.M)},
                          {"Mprime", integer_json(row.Mprime)},
                          {"c_residual", rational_json(row.c_residual)},
                          {"M_residual", rational_json(row.M_residual)},
                          {"Mprime_scaled", rational_json(row.Mprime_scaled)}});
    }
    j["rows"] = rows;
    j["c_residual"] = summary_json(r.c);
    j["M_residual"] = summary_json(r.M);
    j["Mprime_scaled"] = summary_json(r.Mprime);
    j["pass"] = r.pass;
    return {code, dump(j)};
  }
  std::ostringstream os;
  os << csv_header(cfg, "n=" + std::to_string(o.n) + " d=" + std::to_string(o.d) + " mmax=" + std::to_string(o.mmax));
  os << "m,c,M,Mprime,c_residual,M_residual,Mprime_scaled\n";
  for (const AsymptoticRow& row : r.rows) {
    os << row.m << ',' << row.c << ',' << row.M << ',' << row.Mprime << ',' << to_string(row.c_residual) << ','
       << to_string(row.M_residual) << ',' << to_string(row.Mprime_scaled) << '\n';
  }
  auto flag = [](bool b) { return b ? "true" : "false"; };
  os << "# c_residual bounded=" << flag(r.c.bounded_by_reference) << " M_residual bounded=" << flag(r.M.bounded_by_reference)
     << " Mprime_scaled bounded=" << flag(r.Mprime.bounded_by_reference) << " reference_m=" << r.c.reference_m << "\n";
  os << "# pass=" << flag(r.pass) << "\n";
  return {code, os.str()};
}

struct SweepOptions {
  std::string F, G, epsilon = "1/10", track = "n";
  std::vector<std::string> gs;
  long kmin = 1, kmax = 60, kstep = 1;
  unsigned threads = 0;
};

Result cmd_gcd_sweep(const RunConfig& cfg, const SweepOptions& o) {
  SweepConfig sc;
  sc.gs = parse_rfs(o.gs);
  const std::size_t nvars = sc.gs.size() + 1;
  sc.F = parse_in_ring(o.F, nvars, "F");
  sc.G = parse_in_ring(o.G, nvars, "G");
  sc.k_min = o.kmin;
  sc.k_max = o.kmax;
  sc.k_step = o.kstep;
  sc.epsilon = parse_rational(o.epsilon);
  sc.threads = o.threads;
  if (o.track != "n" && o.track != "t") throw UsageError("--track must be n or t");
  const SweepReport r = o.track == "n" ? gcd_sweep(sc) : tgcd_sweep(sc);
  const int code = r.threshold_k ? kSuccess : kVerificationFailed;
  auto opt = [](const std::optional<long>& v) { return v ? json(*v) : json(nullptr); };
  if (cfg.format == Format::Json) {
    json j = header(cfg);
    j["track"] = o.track;
    j["epsilon"] = rational_json(sc.epsilon);
    json rows = json::array();
    for (const SweepRow& row : r.rows) {
      rows.push_back(json{{"k", row.k}, {"gcd_degree", row.gcd_degree}, {"scale", row.scale}, {"ratio", rational_json(row.ratio)}});
    }
    j["rows"] = rows;
    j["certificate"] = certificate_json(r.certificate);
    j["first_below"] = opt(r.first_below);
    j["threshold_k"] = opt(r.threshold_k);
    j["pass"] = r.threshold_k.has_value();
    return {code, dump(j)};
  }
  std::ostringstream os;
  os << csv_header(cfg, "track=" + o.track + " epsilon=" + to_string(sc.epsilon));
  os << "k,gcd_degree,scale,ratio\n";
  for (const SweepRow& row : r.rows) os << row.k << ',' << row.gcd_degree << ',' << row.scale << ',' << to_string(row.ratio) << '\n';
  const json summary{{"first_below", opt(r.first_below)},
                     {"threshold_k", opt(r.threshold_k)},
                     {"independent", r.certificate.independent},
                     {"pass", r.threshold_k.has_value()}};
  os << "# summary " << summary.dump() << "\n";
  return {code, os.str()};
}

struct IndepOptions {
  std::vector<std::string> gs;
  bool gate = false;
};

Result cmd_indep(const RunConfig& cfg, const IndepOptions& o) {
  const std::vector<RationalFunction> gs = parse_rfs(o.gs);
  const IndependenceCertificate c = mult_independent(gs);
  json j = header(cfg);
  j["verdict"] = c.independent ? "independent" : "dependent";
  j["certificate"] = certificate_json(c);
  int code = kSuccess;
  if (!c.independent && o.gate) code = kHypothesisRejected;
  if (!c.independent && !c.witness_verified) code = kVerificationFailed;
  return {code, dump(j)};
}

struct WronskianOptions {
  std::vector<std::string> etas, places;
};

Result cmd_wronskian_check(const RunConfig& cfg, const WronskianOptions& o) {
  const std::vector<RationalFunction> etas = parse_rfs(o.etas);
  const RationalFunction w = wronskian(etas);
  std::vector<Place> places;
  if (o.places.empty()) {
    std::vector<UniPoly> parts{w.num(), w.den()};
    for (const RationalFunction& e : etas) {
      parts.push_back(e.num());
      parts.push_back(e.den());
    }
    for (const UniPoly& b : places_basis(parts)) places.push_back(Place::finite(b));
    places.push_back(Place::infinity());
  } else {
    for (const std::string& p : o.places) places.push_back(parse_place(p));
  }
  json j = header(cfg);
  j["wronskian"] = w.to_string();
  json reports = json::array();
  bool pass = true;
  for (const LocalCheckReport& r : ordw_check_all(etas, places)) {
    reports.push_back(local_json(r));
    if (r.regular) pass = pass && r.pass;
  }
  j["reports"] = reports;
  j["pass"] = pass;
  return {pass ? kSuccess : kVerificationFailed, dump(j)};
}

struct BsOptions {
  std::string F, G;
  long m = 0;
  std::vector<std::string> gs, places;
};

Result cmd_bs_check(const RunConfig& cfg, const BsOptions& o) {
  const std::vector<UniPoly> gs = parse_polys(o.gs);
  const MultiPoly F = parse_in_ring(o.F, gs.size(), "F");
  const MultiPoly G = parse_in_ring(o.G, gs.size(), "G");
  std::vector<Place> places;
  if (o.places.empty()) {
    std::vector<UniPoly> parts = gs;
    parts.push_back(evaluate(F, gs));
    parts.push_back(evaluate(G, gs));
    for (const UniPoly& b : places_basis(parts)) places.push_back(Place::finite(b));
  } else {
    for (const std::string& p : o.places) places.push_back(parse_place(p));
  }
  json j = header(cfg);
  json reports = json::array();
  bool pass = true;
  for (const Place& pl : places) {
    const BsCheckReport r = bs_check(F, G, o.m, gs, pl);
    json entry = local_json(r.check);
    json weights = json::array();
    for (const Integer& u : r.weights) weights.push_back(integer_json(u));
    entry["weights"] = weights;
    entry["swapped"] = r.swapped;
    entry["tm_tie"] = r.tm_tie;
    entry["constants"] = constants_json(r.constants);
    entry["basis_size"] = r.basis_size;
    entry["h"] = r.h.to_string();
    entry["min_support_weight"] = integer_json(r.min_support_weight);
    entry["eta_sum"] = integer_json(r.eta_sum);
    reports.push_back(entry);
    pass = pass && r.check.pass;
  }
  j["reports"] = reports;
  j["pass"] = pass;
  return {pass ? kSuccess : kVerificationFailed, dump(j)};
}

struct ExpOptions {
  std::string a, b;
  long kmax = 20;
};

Result cmd_exp_slopes(const RunConfig& cfg, const ExpOptions& o) {
  const QuadExt a = QuadExt::parse(o.a);
  const QuadExt b = QuadExt::parse(o.b);
  if (o.kmax < 1) throw UsageError("--kmax must be positive");
  if (cfg.format == Format::Json) {
    json j = header(cfg);
    j["a"] = a.to_string();
    j["b"] = b.to_string();
    json rows = json::array();
    for (long k = 1; k <= o.kmax; ++k) {
      const QuadExt maxT = QuadExt(Rational(k)) * max(exp_char_slope(a), exp_char_slope(b));
      rows.push_back(json{{"k", k},
                          {"ngcd_slope", exp_ngcd_slope(a, b, k).to_string()},
                          {"maxT_slope", maxT.to_string()},
                          {"ratio", exp_asym_ratio(a, b, k).to_string()}});
    }
    j["rows"] = rows;
    return {kSuccess, dump(j)};
  }
  std::ostringstream os;
  os << csv_header(cfg, "a=" + a.to_string() + " b=" + b.to_string());
  os << "k,ngcd_slope,maxT_slope,ratio\n";
  for (long k = 1; k <= o.kmax; ++k) {
    const QuadExt maxT = QuadExt(Rational(k)) * max(exp_char_slope(a), exp_char_slope(b));
    os << k << ',' << exp_ngcd_slope(a, b, k).to_string() << ',' << maxT.to_string() << ','
       << exp_asym_ratio(a, b, k).to_string() << '\n';
  }
  return {kSuccess, os.str()};
}

struct BorelOptions {
  std::vector<std::string> units;
  long power = 0;
};

Result cmd_borel(const RunConfig& cfg, const BorelOptions& o) {
  std::vector<ExpUnit> units;
  for (const std::string& u : o.units) {
    const auto colon = u.find(':');
    if (colon == std::string::npos) throw UsageError("unit '" + u + "' is not coeff:freq");
    units.push_back(make_exp_unit(QuadExt::parse(u.substr(0, colon)), QuadExt::parse(u.substr(colon + 1))));
  }
  const BorelPartition p = borel_partition(units, o.power > 0 ? std::optional<long>(o.power) : std::nullopt);
  json j = header(cfg);
  j["power"] = p.power ? json(*p.power) : json(nullptr);
  json classes = json::array();
  for (const BorelClass& c : p.classes) {
    classes.push_back(json{{"freq", c.freq.to_string()},
                           {"members", c.members},
                           {"coeff_sum", c.coeff_sum.to_string()},
                           {"vanishes", c.vanishes}});
  }
  j["classes"] = classes;
  j["sum_vanishes"] = p.sum_vanishes;
  return {kSuccess, dump(j)};
}

struct GridOptions {
  long n = 2, d = 1, mmax = -1, trials = 10, weights = 3;
};

MultiPoly random_form(std::mt19937_64& rng, std::size_t nvars, long d) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  MultiPoly out(nvars);
  for (const Monomial& m : monomials_of_degree(nvars, d)) out.add_term(m, Rational(coeff(rng)));
  return out;
}

Result cmd_basis_grid(const RunConfig& cfg, const GridOptions& o) {
  if (o.n < 1 || o.d < 1 || o.trials < 1 || o.weights < 0) throw UsageError("n, d and trials must be positive");
  const long mmax = o.mmax < 0 ? 2 * o.d + 3 : o.mmax;
  std::mt19937_64 rng(cfg.seed);
  const auto nvars = static_cast<std::size_t>(o.n + 1);
  struct Row {
    long m, trial;
    std::string order;
    Integer M;
    BasisVerification v;
    bool sums;
  };
  std::vector<Row> rows;
  bool pass = true;
  for (long m = o.d; m <= mmax; ++m) {
    for (long t = 0; t < o.trials; ++t) {
      MultiPoly f, g;
      do {
        f = random_form(rng, nvars, o.d);
        g = random_form(rng, nvars, o.d);
      } while (f.is_zero() || g.is_zero() || !coprime_multivariate(f, g));
      std::vector<MonomialOrder> orders{MonomialOrder::lex()};
      std::uniform_int_distribution<long> w(0, 5);
      for (long k = 0; k < o.weights; ++k) {
        std::vector<Integer> u(nvars);
        for (Integer& x : u) x = w(rng);
        orders.push_back(MonomialOrder::weight(u));
      }
      for (const MonomialOrder& ord : orders) {
        const BasisSlice s = build_basis_slice(f, g, m, ord);
        Row row{m, t, ord.to_string(), slice_constants(m, o.n, o.d).M, verify_basis(s), verify_sum_formulas(s).pass};
        pass = pass && row.v.pass && row.v.basis_size == row.M && row.sums;
        rows.push_back(std::move(row));
      }
    }
  }
  const int code = pass ? kSuccess : kVerificationFailed;
  if (cfg.format == Format::Json) {
    json j = header(cfg);
    json out = json::array();
    for (const Row& r : rows) {
      out.push_back(json{{"m", r.m},           {"trial", r.trial},       {"order", r.order},
                         {"M", integer_json(r.M)}, {"basis_size", r.v.basis_size}, {"rank", r.v.rank},
                         {"span_dim", r.v.span_dim}, {"sums_pass", r.sums}});
    }
    j["n"] = o.n;
    j["d"] = o.d;
    j["rows"] = out;
    j["pass"] = pass;
    return {code, dump(j)};
  }
  std::ostringstream os;
  os << csv_header(cfg, "n=" + std::to_string(o.n) + " d=" + std::to_string(o.d));
  os << "m,trial,order,M,basis_size,rank,span_dim,sums_pass\n";
  for (const Row& r : rows) {
    os << r.m << ',' << r.trial << ',' << r.order << ',' << r.M << ',' << r.v.basis_size << ',' << r.v.rank << ','
       << r.v.span_dim << ',' << (r.sums ? "true" : "false") << '\n';
  }
  os << "# pass=" << (pass ? "true" : "false") << "\n";
  return {code, os.str()};
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool nested);

Result cmd_corpus(const RunConfig& cfg, const std::string& dir, std::ostream& err) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw UsageError("cannot read corpus directory '" + dir + "'");
  std::vector<fs::path> files;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
    if (it->is_regular_file() && it->path().extension() == ".json") files.push_back(it->path());
  }
  if (ec) throw UsageError("cannot read corpus directory '" + dir + "': " + ec.message());
  std::sort(files.begin(), files.end());

  json j = header(cfg);
  j["directory"] = dir;
  json cases = json::array();
  json warnings = json::array();
  long passed = 0;
  if (files.empty()) {
    warnings.push_back("no cases found");
    err << "warning: corpus directory '" << dir << "' holds no cases\n";
  }
  for (const fs::path& file : files) {
    json entry{{"file", file.filename().string()}};
    json mismatches = json::array();
    bool ok = true;
    try {
      std::ifstream in(file);
      const json spec = json::parse(in);
      std::vector<std::string> argv = spec.at("argv").get<std::vector<std::string>>();
      const int expect_exit = spec.value("expect_exit", 0);
      std::ostringstream case_out, case_err;
      const int code = run_impl(argv, case_out, case_err, true);
      entry["argv"] = argv;
      entry["expect_exit"] = expect_exit;
      entry["exit"] = code;
      if (code != expect_exit) {
        ok = false;
        mismatches.push_back("exit " + std::to_string(code) + ", expected " + std::to_string(expect_exit));
      }
      if (spec.contains("expect_json")) {
        const json produced = json::parse(case_out.str());
        for (const auto& [pointer, expected] : spec.at("expect_json").items()) {
          const json::json_pointer ptr(pointer);
          if (!produced.contains(ptr) || produced.at(ptr) != expected) {
            ok = false;
            mismatches.push_back(pointer + ": got " + (produced.contains(ptr) ? produced.at(ptr).dump() : "nothing") +
                                 ", expected " + expected.dump());
          }
        }
      }
      if (!case_err.str().empty()) entry["stderr"] = case_err.str();
    } catch (const std::exception& e) {
      ok = false;
      mismatches.push_back(std::string("malformed case: ") + e.what());
    }
    entry["pass"] = ok;
    if (!ok) entry["mismatches"] = mismatches;
    passed += ok ? 1 : 0;
    cases.push_back(entry);
  }
  const long total = static_cast<long>(files.size());
  j["total"] = total;
  j["passed"] = passed;
  j["failed"] = total - passed;
  json failing = json::array();
  for (const json& c : cases) {
    if (!c.at("pass").get<bool>()) failing.push_back(c.at("file"));
  }
  j["failing"] = failing;
  j["warnings"] = warnings;
  j["cases"] = cases;
  j["pass"] = passed == total;
  return {passed == total ? kSuccess : kVerificationFailed, dump(j)};
}

std::string error_report(const RunConfig& cfg, const std::string& kind, const std::string& message) {
  json j = header(cfg);
  j["error"] = kind;
  j["message"] = message;
  return dump(j);
}

void emit(const RunConfig& cfg, const std::string& body, std::ostream& out, bool nested) {
  fs::path dest;
  const char* env = nested ? nullptr : std::getenv(kOutputDirEnv);
  if (!cfg.out_path.empty()) {
    dest = cfg.out_path;
    if (dest.is_relative() && env != nullptr && *env != '\0') dest = fs::path(env) / dest;
  } else if (env != nullptr && *env != '\0') {
    dest = fs::path(env) / (cfg.command + (cfg.format == Format::Csv ? ".csv" : ".json"));
  }
  if (dest.empty()) {
    out << body;
    return;
  }
  if (dest.has_parent_path()) fs::create_directories(dest.parent_path());
  std::ofstream file(dest, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + dest.string() + "'");
  file << body;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool nested) {
  CLI::App app{"Exact experiments on gcd counting, ideal slices and Wronskian bounds", "nevgcd"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format;
  app.add_option("--seed", cfg.seed, "Seed for randomized suites (recorded in every report)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out_path, std::string("Report path; relative paths resolve against $") + kOutputDirEnv);

  BasisOptions basis;
  auto* sub_basis = app.add_subcommand("basis", "Build and verify a basis of the degree-m slice of (F1, F2)");
  sub_basis->add_option("--F1", basis.F1)->required();
  sub_basis->add_option("--F2", basis.F2)->required();
  sub_basis->add_option("--m", basis.m)->required();
  sub_basis->add_option("--order", basis.order, "lex or weight:u0,u1,...");

  IdentitiesOptions ids;
  auto* sub_ids = app.add_subcommand("identities", "Table of slice constants and scaled residuals");
  sub_ids->add_option("--n", ids.n)->required();
  sub_ids->add_option("--d", ids.d)->required();
  sub_ids->add_option("--mmax", ids.mmax);

  SweepOptions sweep;
  auto* sub_sweep = app.add_subcommand("gcd-sweep", "deg gcd(F(g^k), G(g^k)) against k max deg g");
  sub_sweep->add_option("--F", sweep.F)->required();
  sub_sweep->add_option("--G", sweep.G)->required();
  sub_sweep->add_option("--g", sweep.gs, "Rational function in z, once per variable x1..xn")->required();
  sub_sweep->add_option("--kmin", sweep.kmin);
  sub_sweep->add_option("--kmax", sweep.kmax);
  sub_sweep->add_option("--kstep", sweep.kstep);
  sub_sweep->add_option("--epsilon", sweep.epsilon);
  sub_sweep->add_option("--track", sweep.track, "n: gcd counting slope, t: gcd characteristic slope");
  sub_sweep->add_option("--threads", sweep.threads);

  IndepOptions indep;
  auto* sub_indep = app.add_subcommand("indep", "Multiplicative independence certificate");
  sub_indep->add_option("--g", indep.gs)->required();
  sub_indep->add_flag("--gate", indep.gate, "Exit 2 when dependent");

  WronskianOptions wr;
  auto* sub_wr = app.add_subcommand("wronskian-check", "Local Wronskian vanishing bound");
  sub_wr->add_option("--eta", wr.etas)->required();
  sub_wr->add_option("--place", wr.places, "Squarefree polynomial in z or inf; default: every place of the joint basis");

  BsOptions bs;
  auto* sub_bs = app.add_subcommand("bs-check", "Local bound for the slice basis evaluated along g");
  sub_bs->add_option("--F", bs.F)->required();
  sub_bs->add_option("--G", bs.G)->required();
  sub_bs->add_option("--m", bs.m)->required();
  sub_bs->add_option("--g", bs.gs, "Polynomial in z, once per variable x0..xn")->required();
  sub_bs->add_option("--place", bs.places, "Squarefree polynomial in z; default: every place of the joint basis");

  ExpOptions ex;
  auto* sub_exp = app.add_subcommand("exp-slopes", "Slopes for e^(kaz) - 1 and e^(kbz) - 1");
  sub_exp->add_option("--a", ex.a)->required();
  sub_exp->add_option("--b", ex.b)->required();
  sub_exp->add_option("--kmax", ex.kmax);

  BorelOptions borel;
  auto* sub_borel = app.add_subcommand("borel", "Partition a sum of exponential units by frequency");
  sub_borel->add_option("--unit", borel.units, "coeff:freq, e.g. 1:1 or -1:sqrt2")->required();
  sub_borel->add_option("--power", borel.power, "Replace every unit by its k-th power first");

  GridOptions grid;
  auto* sub_grid = app.add_subcommand("basis-grid", "Randomized slice checks over coprime forms");
  sub_grid->add_option("--n", grid.n);
  sub_grid->add_option("--d", grid.d);
  sub_grid->add_option("--mmax", grid.mmax);
  sub_grid->add_option("--trials", grid.trials);
  sub_grid->add_option("--weights", grid.weights, "Random weight orders per pair, besides lex");

  std::string corpus_dir;
  auto* sub_corpus = app.add_subcommand("corpus", "Run every case file in a directory");
  sub_corpus->add_option("dir", corpus_dir)->required();

  std::vector<const char*> argv{"nevgcd"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kSuccess;
    }
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  const bool csv_default = cfg.command == "identities" || cfg.command == "gcd-sweep" || cfg.command == "exp-slopes" ||
                           cfg.command == "basis-grid";
  cfg.format = format.empty() ? (csv_default ? Format::Csv : Format::Json) : (format == "csv" ? Format::Csv : Format::Json);
  if (!csv_default && cfg.format == Format::Csv) {
    err << "error: " << cfg.command << " emits JSON only\n";
    return kUsageError;
  }

  Result result;
  try {
    if (chosen == sub_basis) result = cmd_basis(cfg, basis);
    else if (chosen == sub_ids) result = cmd_identities(cfg, ids);
    else if (chosen == sub_sweep) result = cmd_gcd_sweep(cfg, sweep);
    else if (chosen == sub_indep) result = cmd_indep(cfg, indep);
    else if (chosen == sub_wr) result = cmd_wronskian_check(cfg, wr);
    else if (chosen == sub_bs) result = cmd_bs_check(cfg, bs);
    else if (chosen == sub_exp) result = cmd_exp_slopes(cfg, ex);
    else if (chosen == sub_borel) result = cmd_borel(cfg, borel);
    else if (chosen == sub_grid) result = cmd_basis_grid(cfg, grid);
    else result = cmd_corpus(cfg, corpus_dir, err);
  } catch (const DependentArgumentsError& e) {
    json j = header(cfg);
    j["error"] = "hypothesis";
    j["message"] = e.what();
    j["certificate"] = certificate_json(e.certificate());
    result = {kHypothesisRejected, dump(j)};
  } catch (const HypothesisError& e) {
    result = {kHypothesisRejected, error_report(cfg, "hypothesis", e.what())};
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    emit(cfg, result.body, out, nested);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return result.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_impl(args, out, err, false);
}

}  // namespace nevgcd::cli
