#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "nevgcd/multipoly.hpp"
#include "nevgcd/rational_function.hpp"

namespace nevgcd {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polynomial in x0..x9 with integer literals and + - * ^ ( ); '/' only by
/// nonzero constants (so `3/2*x1` works). The ring has max(min_vars,
/// highest index used + 1) variables.
MultiPoly parse_multipoly(std::string_view text, std::size_t min_vars = 0);

/// Rational function in z; '/' is general division.
RationalFunction parse_rational_function(std::string_view text);

/// Polynomial in z; rejects a nontrivial denominator.
UniPoly parse_unipoly(std::string_view text);

}  // namespace nevgcd
