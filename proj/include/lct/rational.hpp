#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lct {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept canonical (lowest terms, positive denominator).
using Rat = mpq_class;

/// Parses `[+-]digits[/digits]`. Throws ParseError on malformed text or a zero denominator.
Rat parse_rat(std::string_view text);

/// Machine form: always "p/q", including integers ("1/1", "0/1").
std::string to_fraction_string(const Rat& q);

/// Display form: "p/q", or just "p" when the denominator is 1.
std::string to_display_string(const Rat& q);

/// Decimal rendering with `digits` fractional digits, rounded half away from zero.
/// Display only; never parsed back.
std::string to_decimal_string(const Rat& q, unsigned digits);

/// Smallest integer >= q.
BigInt ceil(const Rat& q);

/// Largest integer <= q.
BigInt floor(const Rat& q);

}  // namespace lct
