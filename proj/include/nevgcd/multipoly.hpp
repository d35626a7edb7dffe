#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nevgcd/numeric.hpp"
#include "nevgcd/rational_function.hpp"

namespace nevgcd {

/// Exponent vector of a monomial x0^e0 ... x_{N-1}^e_{N-1}. The defaulted
/// ordering is lexicographic with x0 most significant, i.e. the lex monomial order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }
  long total_degree() const;
  bool divides(const Monomial& other) const;
  std::string to_string() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exps_;
};

Monomial operator+(const Monomial& a, const Monomial& b);
/// a - b, requires b | a.
Monomial operator-(const Monomial& a, const Monomial& b);

/// Sparse polynomial over Q in x0..x_{N-1}. No stored zero coefficients.
///
/// Affine polynomials in x1..xn (the arguments of substitute) use the same
/// type with N = n + 1 and no occurrence of x0.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly term(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  /// Total degree; UniPoly::kZeroDegree for the zero polynomial.
  long total_degree() const;
  long degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  bool involves(std::size_t var) const;
  /// Leading term under lex (the largest stored monomial).
  const std::pair<const Monomial, Rational>& lex_leading_term() const;

  /// Same polynomial viewed in a ring with more variables appended.
  MultiPoly with_nvars(std::size_t nvars) const;
  MultiPoly pow(unsigned exponent) const;
  std::string to_string() const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const Rational& c, MultiPoly a);
MultiPoly operator*(const MultiPoly& a, const Monomial& m);

inline MultiPoly mp_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
inline MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

/// x0^d F(x1/x0, ..., xn/x0) for F free of x0.
MultiPoly homogenize(const MultiPoly& f, long d);
/// Sets x0 = 1.
MultiPoly dehomogenize(const MultiPoly& f);
/// (F^deg G, G^deg F), both of total degree deg F * deg G.
std::pair<MultiPoly, MultiPoly> equalize_degrees(const MultiPoly& f, const MultiPoly& g);

/// Replaces every variable x_i by x_i^k.
MultiPoly power_variables(const MultiPoly& f, unsigned k);

/// F(g1^k, ..., gn^k) in reduced form, for F in x1..xn (nvars = gs.size() + 1, x0 absent).
RationalFunction substitute(const MultiPoly& f, std::span<const RationalFunction> gs, unsigned k = 1);

/// F(g0, ..., gN) for polynomial arguments, one per variable.
UniPoly evaluate(const MultiPoly& f, std::span<const UniPoly> gs);

/// Exact quotient a / b over Q; throws std::domain_error if b does not divide a.
MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b);
bool divides(const MultiPoly& b, const MultiPoly& a);

/// Multivariate gcd over Q, normalized so the lex leading coefficient is 1.
MultiPoly mp_gcd(const MultiPoly& a, const MultiPoly& b);
/// True iff gcd(F, G) is a constant.
bool coprime_multivariate(const MultiPoly& f, const MultiPoly& g);

}  // namespace nevgcd
