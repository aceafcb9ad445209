#pragma once

#include "qmf/puiseux.hpp"

namespace qmf {

// Gauss series 2F1(a, b; c; g) composed with a q-series argument of positive
// order.  Coefficients come from the term recurrence
//   T_{n+1} = T_n (a+n)(b+n) / ((c+n)(n+1)),
// and the composition is exact through the precision of g.  c must not be a
// nonpositive integer.
Puiseux hyp2f1(const Rational& a, const Rational& b, const Rational& c,
               const Puiseux& g);

// Clausen-type series 3F2(a1, a2, a3; b1, b2; g), same conventions.
Puiseux hyp3f2(const Rational& a1, const Rational& a2, const Rational& a3,
               const Rational& b1, const Rational& b2, const Puiseux& g);

// Residual of the hypergeometric differential operator applied to a series
// y along the series variable x (both functions of q, x locally invertible):
//   x(1-x) y_xx + [c - (a+b+1) x] y_x - a b y,
// with y_x = y'/x' taken with q d/dq derivatives.  Vanishes iff y is a local
// solution of the 2F1(a, b; c) equation in the variable x.
Puiseux hyp2f1_ode_residual(const Rational& a, const Rational& b, const Rational& c,
                            const Puiseux& y, const Puiseux& x);

// Residual of the order-three generalized hypergeometric operator
//   th (th + b1 - 1)(th + b2 - 1) y - x (th + a1)(th + a2)(th + a3) y
// with th = x d/dx.  Vanishes iff y solves the 3F2(a1,a2,a3; b1,b2) equation.
Puiseux hyp3f2_ode_residual(const Rational& a1, const Rational& a2, const Rational& a3,
                            const Rational& b1, const Rational& b2,
                            const Puiseux& y, const Puiseux& x);

}  // namespace qmf
