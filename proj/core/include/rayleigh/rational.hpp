#pragma once

#include <gmpxx.h>

#include <string>

namespace rayleigh {

// All arithmetic in this library is exact. Rationals are GMP mpq values,
// kept canonical (reduced, positive denominator) at all times.
using Integer = mpz_class;
using Rational = mpq_class;

/// Builds the canonical rational num/den. Throws Error if den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Parses "p/q" or "p". Throws Error on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" rendering (denominator always present, e.g. "17/1").
std::string fraction_string(const Rational& value);

/// Decimal rendering rounded half away from zero to `digits` places.
std::string decimal_string(const Rational& value, int digits = 6);

/// Largest integer <= value.
Integer rational_floor(const Rational& value);

}  // namespace rayleigh
