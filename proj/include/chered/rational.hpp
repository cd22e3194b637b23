#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>

namespace chered {

/// Exact rational scalar. mpq_class keeps values reduced with a positive
/// denominator as long as mutation goes through canonicalizing entry points,
/// which every helper here guarantees.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den as a canonical Rational. den must be nonzero.
Rational rational(long num, long den = 1);

/// Parses "p", "-p", or "p/q" with optional surrounding whitespace.
std::optional<Rational> parse_rational(const std::string& text);

/// Decimal-free display form, "p" or "p/q".
std::string to_string(const Rational& q);

std::size_t hash_value(const Rational& q);
std::size_t hash_combine(std::size_t seed, std::size_t v);

/// Exact binomial coefficient.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace chered
