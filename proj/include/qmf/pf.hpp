#pragma once

#include "qmf/puiseux.hpp"
#include "qmf/ratfun.hpp"

#include <string>
#include <vector>

namespace qmf {

// Second-order Fuchsian operator D_t^2 + P D_t + Q with singular points at
// t*, infinity, 0, exponent differences alpha, beta, gamma, and one zero
// exponent at each of t* and infinity:
//   P = (alpha+beta)/t + (1-alpha)/(t-t*)
//   Q = [gamma^2 - (1-alpha-beta)^2] t* / (4 t^2 (t-t*))
// The ratio of solutions inverts to a Hauptmodul, which is what ties the
// operator to a triangle group; here it is exact symbolic data.
struct PFOperator {
  Rational alpha, beta, gamma, tstar;
  RatFun P, Q;

  PFOperator(Rational a, Rational b, Rational g, Rational ts = Rational(-1));
};

// u_hat ladder: u_hat_4 = -Q, u_hat_{k+2} = (u_hat_k)_t + (k/2) P u_hat_k.
// Index i holds u_hat_{4+2i}; k_max must be even and >= 4.  The logarithmic
// derivative of the vanishing solution satisfies u_k = u_hat_k tdot^{k/2},
// which is why homogeneous polynomial identities can be read off the hats.
std::vector<RatFun> u_hat_ladder(const PFOperator& op, int k_max);

// Polynomials in u4, u6, u8 with the weight grading 4 e4 + 6 e6 + 8 e8.
struct UMono {
  Rational coeff;
  int e4 = 0, e6 = 0, e8 = 0;
};
using UPoly = std::vector<UMono>;

UPoly u_mono(Rational c, int e4, int e6, int e8);
UPoly u_add(const UPoly& a, const UPoly& b);
UPoly u_scale(const UPoly& a, const Rational& s);
UPoly u_mul(const UPoly& a, const UPoly& b);
bool u_equal(const UPoly& a, const UPoly& b);
bool u_is_zero(const UPoly& a);
// Common weight of all monomials; -1 when mixed (the zero polynomial
// reports weight 0).
long u_weight(const UPoly& a);
std::string u_str(const UPoly& a);

// Substitutes the hat ladder of op into a homogeneous polynomial; the
// common tdot^{w/2} factor drops out, so the result is the zero rational
// function exactly when the u_k of the group satisfy poly = 0.  Rejects
// non-homogeneous input.
RatFun chazy_residual(const PFOperator& op, const UPoly& poly);

// The five named Chazy-type polynomials.
UPoly poly_p4();   // u4 u8 - u6^2 + 8 u4^3
UPoly poly_p3();   // u4 u8^2 - u6^2 u8 + 24 u4^3 u8 - 15 u4^2 u6^2 + 144 u4^5
UPoly poly_p12();  // u8 + 24 u4^2  (classical Chazy)
UPoly poly_p8();   // 2 u4 u8 - u6^2 + 32 u4^3
UPoly poly_p6();   // 4 u4 u8 - 3 u6^2 + 48 u4^3

// Coefficients of the general weight-24 equation
//   C88 u4^2 u8^2 + C86 u4 u6^2 u8 + C84 u4^4 u8
//   + C66 u6^4 + C64 u4^3 u6^2 + C44 u4^6 = 0,
// symmetric in alpha and beta.
struct ChazyCoeffs {
  Rational c88, c86, c84, c66, c64, c44;
};
ChazyCoeffs theorem_general_coeffs(const Rational& alpha, const Rational& beta,
                                   const Rational& gamma);
UPoly theorem_general_poly(const Rational& alpha, const Rational& beta,
                           const Rational& gamma);

// Parametrized families of generalized Chazy equations.
//   weight12(M):        (M-2) u4 u8 - (M-3) u6^2 + 8M u4^3,
//                       satisfied at (1/M, 1/2, 0) and (1/M, 1/M, 0)
//   chazy_xii(N):       (N^2-36) u8 + 24 N^2 u4^2,
//                       satisfied at (1/3, 1/2, 1/N)
//   weight12_two(M,N):  [(M-2)^2 N^2 - 4M^2][(M-2) u4 u8 - (M-3) u6^2]
//                       + 8M (M-2)^2 N^2 u4^3,
//                       satisfied at (1/M, 1/2, 1/N) and (1/M, 1/M, 2/N)
//   weight20_two(M,N):  the weight-20 extension, satisfied at (1/3, 1/M, 1/N)
UPoly family_weight12(long M);
UPoly family_chazy_xii(long N);
UPoly family_weight12_two(long M, long N);
UPoly family_weight20_two(long M, long N);

// Evaluates a rational function on a Puiseux series argument of positive
// order (Horner on numerator and denominator, then one series division).
Puiseux ratfun_at_series(const RatFun& f, const Puiseux& t);

struct FamilyReport {
  std::string family;
  long checked = 0;
  std::vector<std::string> failures;
};

// Randomized and parametrized verification of the general equation:
//   - "general":      `samples` rational triples in (-2,2)^3 with
//                     alpha+beta+-gamma != 1, residual must vanish
//   - "degenerate":   triples on the two vacuous loci (Q = 0 there; every
//                     coefficient except C44 vanishes)
//   - "weight12", "chazyXII", "weight12.MN", "weight20.MN":
//                     the families above for M, N in 2..9
//   - "reductions":   exact polynomial specializations between families
//   - "rescale":      residual invariance under t -> c t, t* -> c t*
// Sampling is deterministic in `seed`; batches may run on `jobs` threads
// without affecting results.
std::vector<FamilyReport> verify_theorem_general(long samples, unsigned long long seed,
                                                 int jobs = 1);

}  // namespace qmf
