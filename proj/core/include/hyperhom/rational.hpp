#pragma once

#include <gmpxx.h>

#include <string>

namespace hyperhom {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "7", "-3/4" or "0.25" into an exact rational.  Throws UserError on
// malformed input.  No exponents, no locale surprises.
Rat parse_exact_number(const std::string& text);

// "p/q" when q != 1, otherwise just "p".
std::string rat_to_string(const Rat& x);

// Decimal rendering with the given number of significant digits (round to
// nearest, deterministic); used for display next to the exact value.
std::string rat_to_decimal(const Rat& x, int significant_digits = 12);

// If x = r^2 for a rational r >= 0, stores r and returns true.
bool rational_sqrt_exact(const Rat& x, Rat& root);

// Deterministic dyadic approximation of sqrt(x) for x >= 0: returns r with
// r = floor(sqrt(x * 4^k)) / 2^k, so r <= sqrt(x) < r + 2^-k.
Rat rational_sqrt_floor(const Rat& x, unsigned k);

// Smallest dyadic r = m / 2^k with r^2 > x (m minimal for the given k).
Rat rational_sqrt_above(const Rat& x, unsigned k);

}  // namespace hyperhom
