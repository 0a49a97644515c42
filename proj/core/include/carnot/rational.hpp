#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace carnot {

/// Exact rational scalar used throughout the core. Arithmetic results are
/// always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Builds a canonical rational from integer numerator/denominator.
/// Throws std::invalid_argument if den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const mpz_class& num, const mpz_class& den);

/// Parses "n", "-n", or "n/d" (arbitrary precision). Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// base^exp for small non-negative exponents.
Rational rational_pow(const Rational& base, unsigned exp);

/// Canonical "n" or "n/d" form.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace carnot
