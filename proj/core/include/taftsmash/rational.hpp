#pragma once

#include <gmpxx.h>

#include <string>

namespace taftsmash {

// Exact arbitrary-precision scalars. GMP keeps rationals in canonical form
// (gcd(|num|, den) = 1, den > 0) as long as construction goes through
// make_rational / the arithmetic operators.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Parses "p", "-p" or "p/q"; canonicalizes. Throws Error on malformed input.
Rational rational_from_string(const std::string& s);
std::string to_string(const Rational& r);

Rational pow(const Rational& base, long exp);

}  // namespace taftsmash
