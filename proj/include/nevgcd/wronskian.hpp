#pragma once

#include <span>
#include <string>
#include <vector>

#include "nevgcd/idealslice.hpp"
#include "nevgcd/places.hpp"

namespace nevgcd {

/// det[f_i^(j)], rows j = 0..M-1, by fraction-free elimination over Q[z].
RationalFunction wronskian(std::span<const RationalFunction> fs);

/// Signed order of f at pl; callers take the positive part.
long vanish_order(const RationalFunction& f, const Place& pl);

struct LocalCheckReport {
  Place place = Place::infinity();
  Integer lhs;
  Integer rhs;
  bool pass = false;
  bool vacuous = false;  // W vanishes identically: the etas are linearly dependent
  bool regular = true;   // finite place where no eta_j has a pole; the bound is only claimed there
};

/// sum_j v+(eta_j) - M(M-1)/2 <= v+(W(eta)). Poles of the eta_j at pl, or pl at
/// infinity, clear `regular`: the inequality can fail there, e.g. (1/z, z^3) at z.
LocalCheckReport ordw_check(std::span<const RationalFunction> etas, const Place& pl);

/// One report per place, in the order given.
std::vector<LocalCheckReport> ordw_check_all(std::span<const RationalFunction> etas, std::span<const Place> places);

struct BsCheckReport {
  LocalCheckReport check;
  std::vector<Integer> weights;  // u_i = v_pl(g_i)
  bool swapped = false;
  bool tm_tie = false;
  SliceConstants constants;
  long basis_size = 0;
  UniPoly h;                     // gcd(F(g), G(g))
  Integer min_support_weight;    // min over exponents of F and G of u.i
  Integer eta_sum;               // sum_j v+(eta_j)
};

/// c sum_i v+(g_i) - C(m+n-2d, n) min_{i in I} v+(g^i) <= sum_j v+(eta_j), eta_j = beta_j(g) / h.
/// F, G homogeneous coprime of degree d in n + 1 variables, gs polynomials
/// without a common zero, m >= d, pl finite. Throws HypothesisError otherwise.
BsCheckReport bs_check(const MultiPoly& F, const MultiPoly& G, long m, std::span<const UniPoly> gs, const Place& pl);

}  // namespace nevgcd
