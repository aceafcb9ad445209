#pragma once

#include "qmf/arith.hpp"
#include "qmf/puiseux.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmf {

// First exponent at which two series disagree below their joint precision,
// together with both coefficients.  Empty when the series agree.
struct SeriesDiff {
  Rational expo;
  QuadExt lhs, rhs;
};
std::optional<SeriesDiff> first_difference(const Puiseux& a, const Puiseux& b);

// eta(delta tau) = q^{delta/24} prod (1 - q^{delta n}), expanded through the
// pentagonal number series (O(sqrt(prec)) stored terms).
Puiseux eta_series(long delta, const Rational& prec);

// scale * prod_delta eta(delta tau)^{e_delta}.  Pads the working precision
// so the result is trusted through the full requested range.
Puiseux eta_product(const std::vector<std::pair<long, int>>& factors,
                    const QuadExt& scale, const Rational& prec);

// sum_{m in Z} (-1)^{m, if alternating} q^{(m+shift)^2}.
Puiseux theta_sum_1d(const Rational& shift, bool alternating, const Rational& prec);

// Weight attached to a lattice point (n, m) of a binary theta sum.
enum class ThetaWeight {
  kUnit,
  kZeta3DiffNM,  // zeta3^{n-m}, computed over Q(sqrt(-3))
};

// sum_{n,m in Z} w(n,m) q^{Q(n+s1, m+s2)} for Q = a x^2 + b x y + c y^2.
// Q must be positive definite, and the exponents must land on the 1/48 grid.
Puiseux theta_sum_2d(const Rational& a, const Rational& b, const Rational& c,
                     const Rational& s1, const Rational& s2, ThetaWeight weight,
                     const Rational& prec);

// c0 + scale * sum_{n>=1} sigma_k(n; w) q^{n/den}; the conjugate variant
// weighs each divisor by the residue of its codivisor.
Puiseux divisor_series(long k, const WeightVector& w, bool conj, const Rational& c0,
                       const QuadExt& scale, long den, const Rational& prec);

// Double sum  sum_{e,d>=1} psi(e) phi(d) d^{k-1} q^{ed}.
Puiseux eisenstein_kernel(long k, const WeightVector& psi, const WeightVector& phi,
                          const Rational& prec);

// 1 + (2 / L(1-k, phi)) * kernel when psi has modulus one, 2 * kernel
// otherwise.  The constant is computed from generalized Bernoulli numbers.
Puiseux eisenstein_series(long k, const WeightVector& psi, const WeightVector& phi,
                          const Rational& prec);

// Level-one E_k for k in {2, 4, 6, 8}.
Puiseux eisenstein_level_one(long k, const Rational& prec);

// ---- named form registry ----

struct FormInfo {
  std::string name;
  int disc = 0;     // coefficient field of the series
  Rational weight;  // declared weight
  Rational order;   // declared order at the infinite cusp
  std::string group;
  std::vector<std::string> route_labels;  // route_labels[0] backs eval_form
};

bool has_form(const std::string& name);
const FormInfo& form_info(const std::string& name);  // throws UnknownFormError
std::vector<std::string> form_names();               // sorted

// Named form at the requested precision.  Thread-safe; a cached entry of
// higher precision serves lower requests by truncation.
Puiseux eval_form(const std::string& name, const Rational& prec);

// A specific construction route (index into route_labels), uncached.
Puiseux eval_form_route(const std::string& name, std::size_t route,
                        const Rational& prec);

struct CrosscheckResult {
  std::string form;
  std::string route_a, route_b;
  bool pass = false;
  std::string detail;  // first mismatching coefficient when failing
};

// Compares every alternate construction route against the primary one,
// ordered by form name.
std::vector<CrosscheckResult> registry_crosschecks(const Rational& prec);

// Data for the nine registered Hauptmodul triples (A, B, C): exponent
// denominator rho, cusp width, angle parameters, and the pinned value of the
// normalized Hauptmodul at the finite fixed-point class (0 when the chosen
// normalization leaves it free).
struct TriangleGroup {
  std::string name;  // registry prefix, e.g. "Gamma0.2"
  long rho = 1;
  long width = 1;
  Rational alpha, beta, gamma;
  Rational tstar;
};
const std::vector<TriangleGroup>& triangle_groups();

}  // namespace qmf
