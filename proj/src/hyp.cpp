#include "qmf/hyp.hpp"

#include "qmf/errors.hpp"

#include <stdexcept>
#include <vector>

namespace qmf {

namespace {

bool nonpositive_integer(const Rational& r) {
  return rat_is_integer(r) && r <= 0;
}

// Polynomial truncation of pFq with the given parameter lists, carrying
// enough terms that composition with g is exact through g's precision.
Puiseux hyp_compose(const std::vector<Rational>& upper,
                    const std::vector<Rational>& lower, const Puiseux& g) {
  for (const Rational& b : lower)
    if (nonpositive_integer(b))
      throw std::invalid_argument("hypergeometric series: lower parameter is a nonpositive integer");
  Rational ord = g.order_or_prec();
  if (!g.is_zero() && ord <= 0)
    throw CompositionDomainError("hypergeometric series: argument must vanish at q = 0");
  long n_max = g.is_zero() ? 1 : rat_long(rat_ceil(g.precision() / ord)) + 1;
  Puiseux f = Puiseux::zero(g.disc(), Rational(n_max + 1));
  Rational term(1);
  for (long n = 0; n <= n_max; ++n) {
    if (term != 0) f.set_coeff(Rational(n), QuadExt(term, 0, g.disc()));
    Rational step(1);
    for (const Rational& a : upper) step *= a + n;
    for (const Rational& b : lower) step /= b + n;
    term *= step / (n + 1);
    if (term == 0) break;  // terminating series
  }
  return compose(f, g);
}

}  // namespace

Puiseux hyp2f1(const Rational& a, const Rational& b, const Rational& c,
               const Puiseux& g) {
  return hyp_compose({a, b}, {c}, g);
}

Puiseux hyp3f2(const Rational& a1, const Rational& a2, const Rational& a3,
               const Rational& b1, const Rational& b2, const Puiseux& g) {
  return hyp_compose({a1, a2, a3}, {b1, b2}, g);
}

Puiseux hyp2f1_ode_residual(const Rational& a, const Rational& b, const Rational& c,
                            const Puiseux& y, const Puiseux& x) {
  Puiseux dx_inv = invert(derive(x));
  Puiseux yx = mul(derive(y), dx_inv);
  Puiseux yxx = mul(derive(yx), dx_inv);
  int d = common_series_disc(y, x);
  Puiseux one = Puiseux::constant(QuadExt(1, 0, d), x.precision(), d);
  Puiseux res = mul(mul(x, sub(one, x)), yxx);
  Puiseux coeff = sub(Puiseux::constant(QuadExt(c, 0, d), x.precision(), d),
                      scalar_mul(QuadExt(a + b + 1, 0, d), x));
  res = add(res, mul(coeff, yx));
  return sub(res, scalar_mul(QuadExt(a * b, 0, d), y));
}

Puiseux hyp3f2_ode_residual(const Rational& a1, const Rational& a2, const Rational& a3,
                            const Rational& b1, const Rational& b2,
                            const Puiseux& y, const Puiseux& x) {
  Puiseux dx_inv = invert(derive(x));
  auto theta = [&](const Puiseux& f) { return mul(x, mul(derive(f), dx_inv)); };
  auto theta_shift = [&](const Puiseux& f, const Rational& s) {
    return add(theta(f), scalar_mul(QuadExt(s, 0, f.disc()), f));
  };
  Puiseux lhs = theta(theta_shift(theta_shift(y, b2 - 1), b1 - 1));
  Puiseux rhs = mul(x, theta_shift(theta_shift(theta_shift(y, a3), a2), a1));
  return sub(lhs, rhs);
}

}  // namespace qmf
