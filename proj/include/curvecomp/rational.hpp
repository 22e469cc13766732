#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace curvecomp {

using Integer = mpz_class;
/// Exact rational in lowest terms with positive denominator (GMP keeps mpq_class canonical).
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws Error(ParseError) on malformed input or q = 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);

Integer abs(const Integer& n);
Rational abs(const Rational& q);

/// Lowest common multiple, gcd helpers on arbitrary precision integers.
Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

/// Floor of the square root; returns true in `exact` when n is a perfect square.
Integer isqrt(const Integer& n, bool* exact = nullptr);

}  // namespace curvecomp
