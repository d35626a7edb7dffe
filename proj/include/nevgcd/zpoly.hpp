#pragma once

// Dense univariate polynomials over the integers. This is the engine behind
// UniPoly multiplication, exact division and gcd; coefficient i belongs to z^i
// and the empty vector is the zero polynomial.

#include <cstdint>
#include <optional>
#include <vector>

#include "nevgcd/numeric.hpp"

namespace nevgcd::zpoly {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a);
inline long degree(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }

Integer content(const ZPoly& a);
/// Divides out the content and makes the leading coefficient positive.
ZPoly primitive_part(const ZPoly& a);

ZPoly multiply_schoolbook(const ZPoly& a, const ZPoly& b);
/// Kronecker substitution: pack into one big integer, multiply with GMP, unpack
/// with balanced digits.
ZPoly multiply_kronecker(const ZPoly& a, const ZPoly& b);
ZPoly multiply(const ZPoly& a, const ZPoly& b);

/// Remainder of lc(b)-scaled division of a by b; equal to prem(a, b) up to a
/// nonzero integer factor, which is all a gcd computation needs.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b);

/// Quotient a / b when it lies in Z[z], nullopt otherwise.
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);

/// gcd over Z[z] by the primitive pseudo-remainder sequence.
ZPoly gcd_prs(const ZPoly& a, const ZPoly& b);

/// gcd over Z[z] from images modulo 62-bit primes, combined by CRT and
/// certified by exact trial division.
ZPoly gcd_modular(const ZPoly& a, const ZPoly& b);

/// Degree of the monic gcd of a and b reduced modulo the prime p.
long gcd_degree_mod(const ZPoly& a, const ZPoly& b, std::uint64_t p);

}  // namespace nevgcd::zpoly
