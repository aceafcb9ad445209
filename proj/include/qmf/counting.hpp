#pragma once

#include "qmf/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qmf {

// Brute-force representation counts.  Nothing here touches q-series or
// divisor sums; the counts come from convolving the one-variable counting
// sequence 2s times, so they can stand as an independent oracle for both.
//
//   squares    r_{2s}(n) = #{ (m_1..m_{2s}) in Z^{2s} : sum m_i^2 = n }
//   triangles  t_{2s}(n) = #{ (k_1..k_{2s}), k_i >= 0 : sum k_i(k_i+1)/2 = n }
enum class TupleKind { squares, triangles };

std::vector<mpz_class> lattice_counts(TupleKind kind, int s, long max_n);

// The same counts read off a theta power: coefficient of q^n in A2^s for
// squares, coefficient of q^{2n} in (q^{-1/2} C2)^s for triangles.  The
// triangle route is divided by 4^s: theta2(q) = 2 q^{1/4} psi(q^2) for
// psi = sum_{k>=0} q^{k(k+1)/2}, and k, -k-1 give the same triangle, so the
// theta power counts every tuple 2^{2s} times.
std::vector<Rational> theta_counts(TupleKind kind, int s, long max_n);

// One printed divisor-sum formula, normalized to the conventions above.
// Triangle variants carry the same 4^{-s} factor, folded into the label.
struct CountFormula {
  std::string label;                    // e.g. "4*sigma_0(n; 0,1,0,-1)"
  std::function<Rational(long)> value;  // exact value at n
};

const std::vector<CountFormula>& count_formulas(TupleKind kind, int s);

}  // namespace qmf
