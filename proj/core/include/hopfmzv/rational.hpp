#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hopfmzv {

/// Arbitrary-precision rational, always canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Reduced "p/q" form with q ≥ 1, integers included ("3/1", "-1/2").
std::string to_fraction_string(const Rational& q);

/// Terse form for display: "3", "-1/2".
std::string to_display_string(const Rational& q);

/// Accepts "p", "p/q", with optional leading sign. Throws ParseError on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);

Integer binomial(unsigned n, unsigned k);

} // namespace hopfmzv
