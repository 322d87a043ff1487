#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rct {

/// Exact rational scalar. GMP keeps the value canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p", "p/q" (decimal digits only). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

Rational pow(const Rational& base, unsigned exponent);

/// num/den in canonical form (mpq_class(num, den) alone is not reduced).
Rational fraction(long num, long den);

/// Exact conversion of a finite double (every finite double is a dyadic rational).
Rational from_double(double value);

inline double to_double(const Rational& value) { return value.get_d(); }

/// Binomial coefficient C(n, k) as an exact integer.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace rct
