#pragma once

#include <gmpxx.h>

#include <string>

namespace qmf {

// Exact rational scalar.  mpq_class maintains the invariants we need:
// always reduced, denominator > 0, canonical zero (0/1).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// std::min/max do not deduce through gmpxx expression templates.
inline Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Parses "p", "-p", or "p/q".  Throws std::invalid_argument on junk.
Rational rat_parse(const std::string& s);

std::string rat_str(const Rational& x);

bool rat_is_integer(const Rational& x);

// x must be integral and fit in a long.
long rat_long(const Rational& x);

mpz_class rat_floor(const Rational& x);
mpz_class rat_ceil(const Rational& x);

// True iff x has an exact n-th root in Q; the root is written to out.
// For even n the input must be nonnegative.
bool rat_exact_root(const Rational& x, unsigned long n, Rational& out);

// Generalized binomial coefficient binom(a, k) for rational a.
Rational rat_binomial(const Rational& a, unsigned long k);

// a^e for integer e (e < 0 requires a != 0).
Rational rat_pow(const Rational& a, long e);

}  // namespace qmf
