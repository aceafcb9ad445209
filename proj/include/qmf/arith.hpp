#pragma once

#include "qmf/rational.hpp"

#include <vector>

namespace qmf {

// Residue-weighted divisor sums.  A weight vector w of size N weighs each
// divisor d by w[d mod N]; the conjugate version weighs by the codivisor.
using WeightVector = std::vector<Rational>;

Rational sigma_weighted(long n, long k, const WeightVector& w);
Rational sigma_weighted_conj(long n, long k, const WeightVector& w);

// Plain sigma_k(n).
Rational sigma_plain(long n, long k);

// Real character tables used throughout, as weight vectors.
WeightVector char_trivial();        // modulus 1
WeightVector char_principal(long N);
WeightVector char_m3();             // modulus 3, values 0, 1, -1
WeightVector char_m4();             // modulus 4, values 0, 1, 0, -1

// Value of a character table at an arbitrary integer (reduces mod N).
Rational char_at(const WeightVector& w, long n);

// Bernoulli numbers, B_1 = -1/2.
const Rational& bernoulli(unsigned long m);

// Generalized Bernoulli number attached to a real residue sequence phi of
// modulus N = phi.size():  B_{k,phi} = sum_j binom(k,j) B_j N^(j-1) S_{k-j}
// with the power sums S_m = sum_a phi[a] a^m.
Rational bernoulli_twisted(unsigned long k, const WeightVector& phi);

// L(1-k, phi) = -B_{k,phi}/k for k >= 1.
Rational l_value(unsigned long k, const WeightVector& phi);

}  // namespace qmf
