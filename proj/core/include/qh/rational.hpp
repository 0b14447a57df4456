#pragma once

#include <gmpxx.h>

#include <string>

namespace qh {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when the denominator is 1
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& s);

double to_double(const Rational& x);
Rational abs(const Rational& x);
Rational pow(const Rational& x, long e);  // e may be negative for x != 0
Integer binomial(long n, long k);
// p/q in canonical form; mpq_class(p, q) alone leaves the fraction unreduced
Rational frac(long p, long q);

}  // namespace qh
