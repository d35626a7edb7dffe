#include "nevgcd/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nevgcd {

namespace {

void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("polynomials live in rings with different variable counts (" +
                                std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + ")");
  }
}

// powers[e] = base^e for e = 0..max_exp.
std::vector<UniPoly> power_table(const UniPoly& base, long max_exp) {
  std::vector<UniPoly> out;
  out.reserve(static_cast<std::size_t>(max_exp + 1));
  out.push_back(UniPoly::constant(1));
  for (long e = 1; e <= max_exp; ++e) out.push_back(out.back() * base);
  return out;
}

}  // namespace

long Monomial::total_degree() const {
  long d = 0;
  for (unsigned e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "x" << i;
    if (exps_[i] > 1) os << "^" << exps_[i];
  }
  return first ? "1" : os.str();
}

Monomial operator+(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomials of different lengths");
  Monomial out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Monomial operator-(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw std::domain_error("monomial quotient is not a monomial");
  Monomial out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly out(nvars);
  out.add_term(Monomial(nvars), c);
  return out;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::invalid_argument("variable index out of range");
  Monomial m(nvars);
  m[index] = 1;
  return term(m, 1);
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly out(m.size());
  out.add_term(m, c);
  return out;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial(nvars_)); }

long MultiPoly::total_degree() const {
  if (terms_.empty()) return UniPoly::kZeroDegree;
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

long MultiPoly::degree_in(std::size_t var) const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[var]));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const long d = terms_.begin()->first.total_degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.total_degree() == d; });
}

bool MultiPoly::involves(std::size_t var) const { return var < nvars_ && degree_in(var) > 0; }

const std::pair<const Monomial, Rational>& MultiPoly::lex_leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return *terms_.rbegin();
}

MultiPoly MultiPoly::with_nvars(std::size_t nvars) const {
  if (nvars < nvars_) {
    for (std::size_t v = nvars; v < nvars_; ++v) {
      if (involves(v)) throw std::invalid_argument("cannot drop a variable the polynomial uses");
    }
  }
  MultiPoly out(nvars);
  for (const auto& [m, c] : terms_) {
    std::vector<unsigned> e = m.exponents();
    e.resize(nvars, 0);
    out.terms_.emplace(Monomial(std::move(e)), c);
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (m.total_degree() == 0) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << m.to_string();
    } else {
      os << mag.get_str() << "*" << m.to_string();
    }
  }
  return os.str();
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw std::invalid_argument("monomial length does not match the ring");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_ring(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_ring(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b);
  MultiPoly out(a.nvars());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma + mb, ca * cb);
  }
  return out;
}

MultiPoly operator*(const MultiPoly& a, const Monomial& m) {
  MultiPoly out(a.nvars());
  for (const auto& [ma, ca] : a.terms()) out.add_term(ma + m, ca);
  return out;
}

MultiPoly homogenize(const MultiPoly& f, long d) {
  if (f.nvars() == 0 || f.involves(0)) throw std::invalid_argument("homogenize expects a polynomial free of x0");
  if (!f.is_zero() && f.total_degree() > d) {
    throw std::invalid_argument("homogenization degree " + std::to_string(d) + " is below deg F = " +
                                std::to_string(f.total_degree()));
  }
  MultiPoly out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    Monomial h = m;
    h[0] = static_cast<unsigned>(d - m.total_degree());
    out.add_term(h, c);
  }
  return out;
}

MultiPoly dehomogenize(const MultiPoly& f) {
  MultiPoly out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    Monomial a = m;
    a[0] = 0;
    out.add_term(a, c);
  }
  return out;
}

std::pair<MultiPoly, MultiPoly> equalize_degrees(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_constant() || g.is_constant()) throw std::invalid_argument("equalize_degrees needs nonconstant inputs");
  const auto e = static_cast<unsigned>(g.total_degree());
  const auto h = static_cast<unsigned>(f.total_degree());
  return {f.pow(e), g.pow(h)};
}

MultiPoly power_variables(const MultiPoly& f, unsigned k) {
  MultiPoly out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    Monomial p = m;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] *= k;
    out.add_term(p, c);
  }
  return out;
}

RationalFunction substitute(const MultiPoly& f, std::span<const RationalFunction> gs, unsigned k) {
  if (f.nvars() != gs.size() + 1 || f.involves(0)) {
    throw std::invalid_argument("substitute: F must be a polynomial in x1..x" + std::to_string(gs.size()));
  }
  if (k == 0) throw std::invalid_argument("substitute: k must be positive");
  const std::size_t n = gs.size();
  std::vector<long> max_deg(n);
  std::vector<std::vector<UniPoly>> num_pow(n), den_pow(n);
  UniPoly common_den = UniPoly::constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    max_deg[i] = f.degree_in(i + 1);
    num_pow[i] = power_table(gs[i].num().pow(k), max_deg[i]);
    if (!gs[i].is_polynomial()) {
      den_pow[i] = power_table(gs[i].den().pow(k), max_deg[i]);
      common_den *= den_pow[i].back();
    }
  }
  UniPoly num;
  for (const auto& [m, c] : f.terms()) {
    UniPoly t = UniPoly::constant(c);
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned e = m[i + 1];
      if (e != 0) t *= num_pow[i][e];
      if (!den_pow[i].empty() && static_cast<long>(e) != max_deg[i]) t *= den_pow[i][static_cast<std::size_t>(max_deg[i] - e)];
    }
    num += t;
  }
  return RationalFunction(std::move(num), std::move(common_den));
}

UniPoly evaluate(const MultiPoly& f, std::span<const UniPoly> gs) {
  if (gs.size() != f.nvars()) throw std::invalid_argument("evaluate: one argument per variable is required");
  std::vector<std::vector<UniPoly>> pows(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) pows[i] = power_table(gs[i], f.degree_in(i));
  UniPoly out;
  for (const auto& [m, c] : f.terms()) {
    UniPoly t = UniPoly::constant(c);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (m[i] != 0) t *= pows[i][m[i]];
    }
    out += t;
  }
  return out;
}

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& [lm, lc] = b.lex_leading_term();
  MultiPoly rem = a;
  MultiPoly quot(a.nvars());
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.lex_leading_term();
    if (!lm.divides(rm)) throw std::domain_error("multivariate division is not exact");
    const Monomial qm = rm - lm;
    const Rational qc = rc / lc;
    quot.add_term(qm, qc);
    rem -= qc * (b * qm);
  }
  return quot;
}

bool divides(const MultiPoly& b, const MultiPoly& a) {
  try {
    (void)exact_quotient(a, b);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

}  // namespace nevgcd
