#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace pgnlab {

// Exact signed rational scalar. GMP keeps the canonical form (reduced,
// positive denominator) through all arithmetic; construction from raw
// numerator/denominator must go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(Integer numerator, Integer denominator);

// 2^exponent as an exact rational, denominator a power of two for
// negative exponents.
Rational pow2(long exponent);

// Accepts "p", "-p", "p/q" with optional sign on the numerator.
std::optional<Rational> parse_rational(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& value);

double rational_to_double(const Rational& value);

Integer floor_to_integer(const Rational& value);
Integer ceil_to_integer(const Rational& value);

// Largest k >= 0 with k*k <= value; value must be nonnegative.
Integer isqrt_floor(const Integer& value);

// Exact rational n-th root when one exists.
std::optional<Rational> exact_nth_root(const Rational& value, long n);

}  // namespace pgnlab
