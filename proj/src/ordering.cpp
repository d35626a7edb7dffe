#include "nevgcd/ordering.hpp"

#include <stdexcept>

#include "nevgcd/parse.hpp"

namespace nevgcd {

MonomialOrder MonomialOrder::weight(std::vector<Integer> u) {
  for (const Integer& w : u) {
    if (sgn(w) < 0) throw std::invalid_argument("weight vectors must be nonnegative");
  }
  MonomialOrder out;
  out.weighted_ = true;
  out.weights_ = std::move(u);
  return out;
}

MonomialOrder MonomialOrder::parse(std::string_view spec) {
  if (spec == "lex") return lex();
  constexpr std::string_view prefix = "weight:";
  if (spec.substr(0, prefix.size()) != prefix) {
    throw ParseError("unknown monomial order '" + std::string(spec) + "' (expected lex or weight:u0,u1,...)");
  }
  std::vector<Integer> u;
  std::string_view rest = spec.substr(prefix.size());
  while (true) {
    const auto comma = rest.find(',');
    const std::string item(rest.substr(0, comma));
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("malformed weight entry '" + item + "' in '" + std::string(spec) + "'");
    }
    u.emplace_back(item, 10);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return weight(std::move(u));
}

Integer MonomialOrder::weight_of(const Monomial& m) const {
  if (m.size() != weights_.size()) throw std::invalid_argument("weight vector length does not match the monomial");
  Integer w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) w += weights_[i] * m[i];
  }
  return w;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("comparing exponent vectors of different lengths");
  if (weighted_) {
    const int c = cmp(weight_of(a), weight_of(b));
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a <=> b;
}

std::string MonomialOrder::to_string() const {
  if (!weighted_) return "lex";
  std::string out = "weight:";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i != 0) out += ",";
    out += weights_[i].get_str();
  }
  return out;
}

Monomial trailing_monomial(const MultiPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::domain_error("trailing monomial of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms()) {
    if (best == nullptr || order.less(m, *best)) best = &m;
  }
  return *best;
}

}  // namespace nevgcd
