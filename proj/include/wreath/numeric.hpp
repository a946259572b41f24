#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace wreath {

// All arithmetic in this library is exact: arbitrary-precision integers for
// counts, matrix entries and eigenvalues, rationals for nullspace bases and
// kernel coefficients. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(long n);

// Binomial with the convention C(x,y) = 0 whenever x < 0, y < 0 or y > x.
// The general-gcd coefficient sums hit arguments like dg-2g < 0, which this
// convention makes well-defined.
Int binomial(long n, long k);
Int binomial(const Int& n, long k);

Int pow_int(const Int& base, unsigned long e);

// a / b, throwing if b does not divide a. Used wherever a closed formula is
// integral by theorem; a remainder means the formula was transcribed wrong.
Int divexact(const Int& a, const Int& b);

// Rational -> integer, throwing unless the denominator is 1 after
// canonicalization.
Int rat_to_int(const Rat& q);

std::string int_str(const Int& v);
std::string rat_str(const Rat& q);
Rat rat_from_string(const std::string& s);

}  // namespace wreath
