#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace mukai {

/// Arbitrary-precision integer used for every lattice coordinate.
using Int = mpz_class;
/// Exact rational used for margins, bounds and cone coordinates.
using Rational = mpq_class;

struct GcdResult {
  Int gcd;
  Int x;
  Int y;
};

/// Solves a*x + b*y = gcd(a, b) with gcd >= 0.
GcdResult extended_gcd(const Int& a, const Int& b);

/// gcd of all entries (0 for an empty or all-zero span).
Int gcd_all(std::span<const Int> values);

/// Least non-negative residue of a modulo m (m > 0).
Int mod_floor(const Int& a, const Int& m);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

/// Inverse of a modulo m in [0, m); throws when gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

/// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

Rational make_rational(const Int& num, const Int& den = 1);
Int floor(const Rational& q);
Int ceil(const Rational& q);

std::string to_string(const Int& value);
std::string to_string(const Rational& value);

/// Parses a decimal integer string such as "-12"; throws on trailing garbage.
Int parse_int(const std::string& text);
/// Parses "p", "p/q" or "-p/q".
Rational parse_rational(const std::string& text);

/// Narrowing with a range check; throws InvalidArgument when it does not fit.
long to_long(const Int& value);

}  // namespace mukai
