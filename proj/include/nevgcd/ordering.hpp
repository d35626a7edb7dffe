#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "nevgcd/multipoly.hpp"

namespace nevgcd {

/// Lex (x0 > x1 > ...) or a weight order: compare u.a against u.b, break ties by lex.
class MonomialOrder {
 public:
  static MonomialOrder lex() { return MonomialOrder(); }
  static MonomialOrder weight(std::vector<Integer> u);

  /// `lex` or `weight:3,2,1`.
  static MonomialOrder parse(std::string_view spec);

  bool is_lex() const { return !weighted_; }
  const std::vector<Integer>& weights() const { return weights_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  Integer weight_of(const Monomial& m) const;

  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder() = default;
  bool weighted_ = false;
  std::vector<Integer> weights_;
};

/// Smallest monomial of F with a nonzero coefficient.
Monomial trailing_monomial(const MultiPoly& f, const MonomialOrder& order);

}  // namespace nevgcd
