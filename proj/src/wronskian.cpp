#include "nevgcd/wronskian.hpp"

#include <algorithm>
#include <stdexcept>

#include "nevgcd/errors.hpp"
#include "nevgcd/linalg.hpp"

namespace Eigen {

template <>
struct NumTraits<nevgcd::UniPoly> : GenericNumTraits<nevgcd::UniPoly> {
  typedef nevgcd::UniPoly Real;
  typedef nevgcd::UniPoly NonInteger;
  typedef nevgcd::UniPoly Nested;
  typedef nevgcd::UniPoly Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 100,
    MulCost = 400
  };
};

}  // namespace Eigen

namespace nevgcd {

namespace {

Integer positive_part(long v) { return Integer(std::max(0L, v)); }

}  // namespace

RationalFunction wronskian(std::span<const RationalFunction> fs) {
  if (fs.empty()) throw std::invalid_argument("wronskian of an empty tuple");
  const auto size = static_cast<Eigen::Index>(fs.size());
  DenseMatrix<UniPoly> a(size, size);
  UniPoly scale = UniPoly::constant(1);
  std::vector<RationalFunction> row(fs.begin(), fs.end());
  for (Eigen::Index j = 0; j < size; ++j) {
    UniPoly common = UniPoly::constant(1);
    for (const RationalFunction& f : row) common = uni_lcm(common, f.den());
    for (Eigen::Index i = 0; i < size; ++i) {
      const RationalFunction& f = row[static_cast<std::size_t>(i)];
      a(j, i) = f.num() * exact_quotient(common, f.den());
    }
    scale *= common;
    for (RationalFunction& f : row) f = f.derivative();
  }
  return RationalFunction(bareiss_determinant(std::move(a)), scale);
}

long vanish_order(const RationalFunction& f, const Place& pl) {
  if (f.is_zero()) throw std::invalid_argument("order of the zero function");
  return valuation(f, pl);
}

LocalCheckReport ordw_check(std::span<const RationalFunction> etas, const Place& pl) {
  if (etas.empty()) throw std::invalid_argument("ordw_check needs at least one function");
  const Place places[] = {pl};
  return ordw_check_all(etas, places).front();
}

std::vector<LocalCheckReport> ordw_check_all(std::span<const RationalFunction> etas, std::span<const Place> places) {
  if (etas.empty()) throw std::invalid_argument("ordw_check needs at least one function");
  std::vector<LocalCheckReport> out;
  out.reserve(places.size());
  if (places.empty()) return out;
  const RationalFunction w = wronskian(etas);
  const long count = static_cast<long>(etas.size());
  for (const Place& pl : places) {
    LocalCheckReport r;
    r.place = pl;
    r.regular = !pl.is_infinity();
    if (w.is_zero()) {
      r.vacuous = true;
      r.pass = true;
    } else {
      for (const RationalFunction& eta : etas) {
        const long v = vanish_order(eta, pl);
        r.regular = r.regular && v >= 0;
        r.lhs += positive_part(v);
      }
      r.lhs -= count * (count - 1) / 2;
      r.rhs = positive_part(vanish_order(w, pl));
      r.pass = r.lhs <= r.rhs;
    }
    out.push_back(std::move(r));
  }
  return out;
}

BsCheckReport bs_check(const MultiPoly& F, const MultiPoly& G, long m, std::span<const UniPoly> gs, const Place& pl) {
  if (pl.is_infinity()) throw std::invalid_argument("bs_check needs a finite place");
  if (F.nvars() != gs.size() || G.nvars() != gs.size()) {
    throw std::invalid_argument("F and G must have one variable per g_i");
  }
  if (gs.size() < 2) throw std::invalid_argument("bs_check needs at least two g_i");
  UniPoly common;
  for (const UniPoly& g : gs) {
    if (g.is_zero()) throw HypothesisError("the g_i must be nonzero");
    common = common.is_zero() ? g : uni_gcd(common, g);
  }
  if (!common.is_constant()) throw HypothesisError("the g_i have a common zero");

  BsCheckReport out;
  out.check.place = pl;
  for (const UniPoly& g : gs) out.weights.emplace_back(vanish_order(RationalFunction(g), pl));

  const BasisSlice slice = build_basis_slice(F, G, m, MonomialOrder::weight(out.weights));
  out.swapped = slice.swapped;
  out.tm_tie = slice.tm_tie;
  out.constants = slice_constants(m, slice.n, slice.d);
  out.basis_size = static_cast<long>(slice.B.size());

  const UniPoly Fg = evaluate(F, gs);
  const UniPoly Gg = evaluate(G, gs);
  if (Fg.is_zero() || Gg.is_zero()) throw HypothesisError("F(g) or G(g) vanishes identically");
  out.h = uni_gcd(Fg, Gg);

  for (const SliceElement& beta : slice.B) {
    const UniPoly eta = exact_quotient(evaluate(beta.poly, gs), out.h);
    out.eta_sum += positive_part(vanish_order(RationalFunction(eta), pl));
  }

  const MonomialOrder order = MonomialOrder::weight(out.weights);
  bool first = true;
  for (const MultiPoly* p : {&F, &G}) {
    for (const auto& [mono, coeff] : p->terms()) {
      const Integer w = order.weight_of(mono);
      if (first || w < out.min_support_weight) out.min_support_weight = w;
      first = false;
    }
  }

  Integer total = 0;
  for (const Integer& u : out.weights) total += u;
  out.check.lhs = out.constants.c * total -
                  binomial(m + slice.n - 2 * slice.d, slice.n) * out.min_support_weight;
  out.check.rhs = out.eta_sum;
  out.check.pass = out.check.lhs <= out.check.rhs;
  return out;
}

}  // namespace nevgcd
