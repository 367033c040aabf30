#pragma once

// Exact scalars. Integer and Rational are GMP values; mpq_class keeps itself
// canonical (positive denominator, coprime parts) through every arithmetic
// operation, and make_rational canonicalizes explicit num/den pairs.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "reversive/errors.hpp"

namespace reversive {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Generalized binomial coefficient.
///
/// Returns 0 for k < 0. For k >= 0 and any integer r this is the falling
/// factorial r(r-1)...(r-k+1) / k!, which is always an integer. In particular
/// binomial(-1, k) = (-1)^k and binomial(r, k) = 0 for 0 <= r < k.
Integer binomial(const Integer& r, long k);
Integer binomial(long r, long k);

/// a / b, throwing DivisibilityViolation unless b divides a exactly.
Integer exact_div(const Integer& a, const Integer& b);

/// Converts a Rational to an Integer; throws NonIntegerCoefficient otherwise.
Integer to_integer(const Rational& q);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Parses a signed decimal integer; throws ParseError on anything else.
Integer parse_integer(const std::string& text);

}  // namespace reversive
