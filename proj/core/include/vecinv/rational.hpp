#pragma once

#include <gmpxx.h>

#include <string>

namespace vecinv {

// Exact scalars. mpq_class keeps values canonicalized (lowest terms,
// positive denominator) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" with the sign carried by p; integers print as "p/1".
std::string to_fraction_string(const Rational& r);

Rational parse_rational(const std::string& text);

Integer binomial(long n, long k);

}  // namespace vecinv
