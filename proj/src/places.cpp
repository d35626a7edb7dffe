#include "nevgcd/places.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace nevgcd {

Place Place::finite(const UniPoly& p) {
  if (p.is_constant()) throw std::invalid_argument("a finite place needs a nonconstant polynomial");
  if (!is_squarefree(p)) throw std::domain_error("place polynomial " + p.to_string() + " is not squarefree");
  Place out;
  out.poly_ = p.monic();
  return out;
}

const UniPoly& Place::polynomial() const {
  if (!poly_) throw std::logic_error("the place at infinity has no polynomial");
  return *poly_;
}

std::string Place::to_string() const { return poly_ ? poly_->to_string() : "inf"; }

long multiplicity(const UniPoly& a, const UniPoly& p) {
  if (a.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
  zpoly::ZPoly rest = a.primitive_integer();
  const zpoly::ZPoly pz = p.primitive_integer();
  long e = 0;
  while (auto q = zpoly::divide_exact(rest, pz)) {
    rest = std::move(*q);
    ++e;
  }
  return e;
}

namespace {

// Multiplicity of p in a, requiring the same order at all roots of p.
long uniform_multiplicity(const UniPoly& a, const UniPoly& p) {
  zpoly::ZPoly rest = a.primitive_integer();
  const zpoly::ZPoly pz = p.primitive_integer();
  long e = 0;
  while (auto q = zpoly::divide_exact(rest, pz)) {
    rest = std::move(*q);
    ++e;
  }
  if (!uni_gcd(UniPoly::from_integer(rest), p).is_constant()) {
    throw std::domain_error("order of vanishing differs between roots of " + p.to_string() +
                            "; refine the place first");
  }
  return e;
}

}  // namespace

long valuation(const RationalFunction& f, const Place& pl) {
  if (f.is_zero()) throw std::domain_error("valuation of the zero function");
  if (pl.is_infinity()) return f.den().degree() - f.num().degree();
  const UniPoly& p = pl.polynomial();
  return uniform_multiplicity(f.num(), p) - uniform_multiplicity(f.den(), p);
}

long positive_order(const RationalFunction& f, const Place& pl) {
  if (f.is_zero()) throw std::domain_error("order of the zero function");
  if (pl.is_infinity()) return std::max(0L, f.den().degree() - f.num().degree());
  return multiplicity(f.num(), pl.polynomial());
}

std::vector<UniPoly> coprime_basis(std::span<const UniPoly> ps) {
  std::deque<UniPoly> queue;
  for (const UniPoly& p : ps) {
    if (p.is_zero()) throw std::invalid_argument("coprime_basis: zero input");
    if (!p.is_constant()) queue.push_back(p.monic());
  }
  std::vector<UniPoly> basis;
  auto push = [&queue](const UniPoly& p) {
    if (!p.is_constant()) queue.push_back(p.monic());
  };
  while (!queue.empty()) {
    UniPoly c = std::move(queue.front());
    queue.pop_front();
    const UniPoly repeated = uni_gcd(c, c.derivative());
    if (!repeated.is_constant()) {
      push(repeated);
      push(exact_quotient(c, repeated));
      continue;
    }
    bool split = false;
    for (auto it = basis.begin(); it != basis.end(); ++it) {
      const UniPoly h = uni_gcd(c, *it);
      if (h.is_constant()) continue;
      const UniPoly b = std::move(*it);
      basis.erase(it);
      push(h);
      push(exact_quotient(b, h));
      push(exact_quotient(c, h));
      split = true;
      break;
    }
    if (!split) basis.push_back(std::move(c));
  }
  std::sort(basis.begin(), basis.end(), canonical_less);
  return basis;
}

std::vector<long> basis_exponents(const UniPoly& a, std::span<const UniPoly> basis) {
  std::vector<long> out;
  out.reserve(basis.size());
  for (const UniPoly& b : basis) out.push_back(multiplicity(a, b));
  return out;
}

}  // namespace nevgcd
