#pragma once

// Exact arithmetic vocabulary. Everything in the library is computed with
// arbitrary-precision integers and rationals; there is no floating point.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace fwps {

using Integer = mpz_class;
using Rational = mpq_class;

Integer gcd(const Integer& a, const Integer& b);
Integer gcd(std::span<const Integer> values);
Integer lcm(const Integer& a, const Integer& b);
Integer factorial(unsigned n);
Integer pow(const Integer& base, unsigned long exponent);

// Floor division with a positive divisor: the quotient q with
// 0 <= a - q*b < b.
Integer floor_div(const Integer& a, const Integer& b);

// Canonicalized rational a/b; b must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

// "p/q" with q >= 1, always including the denominator ("64/1").
std::string to_pair_string(const Rational& q);
// Inverse of to_pair_string; also accepts a bare integer. Throws
// Error(kParse) on malformed input.
Rational parse_rational(const std::string& text);

std::optional<std::int64_t> to_int64(const Integer& value);

}  // namespace fwps
