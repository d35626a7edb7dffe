#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nevgcd/rational_function.hpp"

namespace nevgcd {

/// A finite place (monic, squarefree, nonconstant polynomial) or infinity.
class Place {
 public:
  static Place infinity() { return Place(); }
  /// Normalizes to monic; throws on constant or non-squarefree input.
  static Place finite(const UniPoly& p);

  bool is_infinity() const { return !poly_.has_value(); }
  const UniPoly& polynomial() const;
  long degree() const { return poly_ ? poly_->degree() : 1; }
  std::string to_string() const;

  friend bool operator==(const Place&, const Place&) = default;

 private:
  Place() = default;
  std::optional<UniPoly> poly_;
};

/// Multiplicity of p in f, i.e. the common order at every root of p. Throws
/// std::domain_error when f vanishes to different orders at different roots
/// of p (refine the place with coprime_basis first). At infinity: deg den - deg num.
long valuation(const RationalFunction& f, const Place& pl);

/// min over the roots of the place of max(0, ord): the largest e with p^e | num.
long positive_order(const RationalFunction& f, const Place& pl);

/// Largest e with p^e dividing a (a nonzero).
long multiplicity(const UniPoly& a, const UniPoly& p);

/// gcd-free basis: pairwise coprime, squarefree, monic, nonconstant
/// polynomials such that every input is a constant times a product of powers
/// of basis elements. Sorted by canonical_compare.
std::vector<UniPoly> coprime_basis(std::span<const UniPoly> ps);

/// Exponents of each basis element in a (a nonzero, a built from the basis).
std::vector<long> basis_exponents(const UniPoly& a, std::span<const UniPoly> basis);

}  // namespace nevgcd
