#pragma once

// Exact rational scalars. Backed by GMP's mpq_class, which keeps every value
// in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jtwist
{

using Integer = mpz_class;
using Rational = mpq_class;

/// Renders as "num/den" (always with the slash, e.g. "3/1", "-1/2").
std::string to_fraction_string(const Rational &q);

/// Renders the short human form: "3", "-1/2".
std::string to_short_string(const Rational &q);

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Binomial coefficient of nonnegative integers; zero when k > n or k < 0.
Integer binomial(long n, long k);

Integer factorial(unsigned n);

} // namespace jtwist
