#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace homdil {

/// Exact rational scalar. gmpxx keeps results of arithmetic in lowest terms
/// with a positive denominator; values built from a numerator/denominator
/// pair must go through `make_rational`.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace homdil
