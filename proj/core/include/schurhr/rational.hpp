#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace schurhr {

// Exact rational with arbitrary-precision numerator and denominator.
// Always kept in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed
// input or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "num/den" rendering; the denominator is omitted when it is 1.
std::string to_string(const Rational& q);

Integer binomial(long n, long k);
Integer factorial(long n);

inline int sign(const Rational& q) { return sgn(q); }

} // namespace schurhr
