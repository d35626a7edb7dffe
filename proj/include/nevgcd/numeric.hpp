#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nevgcd {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses `3`, `-7`, `3/2`. The result is canonical (reduced, positive denominator).
Rational parse_rational(std::string_view text);

/// Lossless `p/q` rendering (integers print without a denominator).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Binomial coefficient with C(top, bottom) = 0 whenever top < 0, bottom < 0 or bottom > top.
Integer binomial(long top, long bottom);

Integer factorial(unsigned long n);

/// Integer power of a rational, negative exponents allowed for nonzero bases.
Rational power(const Rational& base, long exponent);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace nevgcd
