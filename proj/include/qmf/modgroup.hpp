#pragma once

#include "qmf/arith.hpp"
#include "qmf/rational.hpp"

#include <vector>

namespace qmf {

// Integer 2x2 matrix acting by fractional linear maps; det = 1 throughout.
struct Mat2 {
  long a, b, c, d;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  long det() const { return a * d - b * c; }
  bool in_gamma0(long N) const { return det() == 1 && c % N == 0; }
};

// Jacobi symbol (a/n) for odd n > 0 (fully multiplicative in both slots).
int jacobi_symbol(long a, long n);

// Exponent e mod 24 such that the Dedekind eta function transforms under g
// (with c > 0, or c = 0 and d = 1) as
//   eta(g tau) = zeta24^e * (c tau + d)^(1/2) * eta(tau),
// using the principal square root branch.
int eta_multiplier_exp24(const Mat2& g);

// Formal eta quotient prod_{delta | N} eta(delta tau)^{r_delta}.
struct EtaQuotient {
  long level = 1;
  std::vector<std::pair<long, int>> r;  // (delta, exponent), delta | level

  int weight2() const;  // 2k = sum of exponents

  // Order in q at the cusp class of denominator dden | level, as an exact
  // rational on the (1/24)-grid: sum r_delta * gcd(dden, delta)^2 / (24 delta).
  Rational order_at(long dden) const;
  // Order in the local uniformizer: width * order_at.
  Rational reg_order_at(long dden) const;
};

// Width of the cusp class with denominator dden | N.
long cusp_width(long N, long dden);

// Index of the level-N congruence subgroup {c = 0 mod N} in the full group.
long group_index(long N);

// Exponent mod 48 such that an eta quotient f of integral weight k satisfies
//   f(g tau) = zeta48^e * (c tau + d)^k * f(tau)
// for g with c = 0 mod level.  Multiplicative in g at the matrix level.
int quotient_multiplier_exp48(const EtaQuotient& eq, const Mat2& g);

// Generators of the level-N subgroup for N <= 4 (with -I they generate it).
std::vector<Mat2> gamma0_generators(long N);

// A multiplier system given by a real character chi(d) = chi_table[d mod N]:
// true iff f transforms with chi on every generator and -I acts by (-1)^k,
// and every cusp order is nonnegative.  For an eta quotient this certifies
// a holomorphic modular form of weight k = weight2/2 with character chi.
bool is_modular_form_with_character(const EtaQuotient& eq,
                                    const WeightVector& chi_table);

}  // namespace qmf
