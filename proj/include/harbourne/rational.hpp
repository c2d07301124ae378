#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace harbourne {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q" (decimal, no whitespace). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Rounds to `digits` decimals, halves away from zero.
Rational round_decimals(const Rational& q, int digits);

/// Fixed-point rendering, e.g. to_decimal(-147/52, 3) == "-2.827".
std::string to_decimal(const Rational& q, int digits);

/// Parses a plain decimal literal such as "-2.827" exactly.
Rational parse_decimal(std::string_view text);

inline std::int64_t choose2(std::int64_t r) { return r * (r - 1) / 2; }

}  // namespace harbourne
