#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tmoments {

// All labels and derived constants are exact rationals. GMP's mpq_class
// already keeps values canonical (lowest terms, positive denominator) as
// long as construction goes through the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p" and "p/q" with an arbitrary-precision integer p and a
// nonzero integer q. Surrounding whitespace is allowed, decimals are not:
// the library has no inexact mode, so "0.5" must be written "1/2".
Rational parse_rational(std::string_view text);

// Inverse of parse_rational: "p/q", or plain "p" for integers.
std::string to_string(const Rational& value);

// For display only; all decisions are made on exact values.
double approx(const Rational& value);

Integer pow_integer(const Integer& base, unsigned long exponent);

inline int sign(const Rational& value) { return sgn(value); }

} // namespace tmoments
