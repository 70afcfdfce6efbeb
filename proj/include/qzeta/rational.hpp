#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qzeta {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p/q", plain integers, and decimal literals ("0.25" -> 1/4).
// Result is canonical: denominator > 0, gcd(|num|, den) = 1.
Rational rational_from_string(std::string_view text);

// Canonical form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

bool is_integer(const Rational& r);

// Checked narrowing to long; throws Errc::config_invalid when out of range
// or non-integral.
long to_long(const Rational& r);

// r^k for any integer k; k < 0 requires r != 0.
Rational pow(const Rational& r, long k);

Integer binomial(unsigned long n, unsigned long k);

long lcm_long(long a, long b);

}  // namespace qzeta
