#pragma once

#include "qmf/quadext.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qmf {

// Truncated Puiseux series: a finite sum of c_e * q^e with exponents e in
// (1/D)Z for a grid denominator D dividing 48, coefficients in Q(sqrt(d)),
// and a rational precision P.  The series is trusted exactly for every
// exponent strictly below P; stored terms at or above P are discarded.
//
// Exponents may be negative (Laurent tails appear when inverting), and the
// grid denominator is kept minimal, so equality and printing are canonical.
class Puiseux {
 public:
  static constexpr long kMaxExpoDen = 48;

  Puiseux() : disc_(0), den_(1), prec_(0) {}
  Puiseux(int disc, Rational prec) : disc_(disc), den_(1), prec_(std::move(prec)) {}

  static Puiseux zero(int disc, Rational prec) { return Puiseux(disc, std::move(prec)); }
  static Puiseux constant(const QuadExt& v, Rational prec, int disc = 0);
  static Puiseux monomial(const QuadExt& coeff, const Rational& expo, Rational prec,
                          int disc = 0);
  // The identity series q (handy as a composition argument).
  static Puiseux q(Rational prec, int disc = 0);

  int disc() const { return disc_; }
  long expo_den() const { return den_; }
  const Rational& precision() const { return prec_; }
  std::size_t term_count() const { return c_.size(); }

  // No representable term below precision.
  bool is_zero() const { return c_.empty(); }

  // Smallest stored exponent; empty for the (truncated) zero series.
  std::optional<Rational> order() const;
  // Order, with the precision standing in for the order of a zero series.
  Rational order_or_prec() const;

  // Coefficient at exponent e.  Throws PrecisionError when e >= precision.
  QuadExt coeff(const Rational& e) const;
  QuadExt coeff_int(long e) const { return coeff(Rational(e)); }

  // Terms in ascending exponent order.
  std::vector<std::pair<Rational, QuadExt>> terms() const;

  void set_coeff(const Rational& e, const QuadExt& v);

  Puiseux operator-() const;
  std::string str() const;

 private:
  friend Puiseux add(const Puiseux&, const Puiseux&);
  friend Puiseux sub(const Puiseux&, const Puiseux&);
  friend Puiseux mul(const Puiseux&, const Puiseux&);
  friend Puiseux scalar_mul(const QuadExt&, const Puiseux&);
  friend Puiseux invert(const Puiseux&);
  friend Puiseux rational_pow(const Puiseux&, const Rational&);
  friend Puiseux derive(const Puiseux&);
  friend Puiseux substitute_power(const Puiseux&, const Rational&);
  friend Puiseux compose(const Puiseux&, const Puiseux&);
  friend Puiseux truncate(const Puiseux&, const Rational&);
  friend bool equal(const Puiseux&, const Puiseux&);

  // Drops zeros and out-of-precision terms, reduces the grid denominator.
  void normalize();
  void rescale_den(long new_den);
  // Largest key allowed on the current grid (first index at/above precision).
  long prec_key() const;

  int disc_;
  long den_;                  // exponent denominator, divides 48
  std::map<long, QuadExt> c_; // key n represents exponent n / den_
  Rational prec_;
};

Puiseux add(const Puiseux& a, const Puiseux& b);
Puiseux sub(const Puiseux& a, const Puiseux& b);
Puiseux mul(const Puiseux& a, const Puiseux& b);
Puiseux scalar_mul(const QuadExt& s, const Puiseux& a);

// Multiplicative inverse; requires a nonempty series whose leading
// coefficient is invertible.  Precision drops to P - 2*ord(a).
Puiseux invert(const Puiseux& a);

// a^e for rational e.  Integer e works for any invertible a; fractional e
// requires the leading monomial c*q^m to have an exact e-th power in the
// working field (c rational or a pure radical multiple) and m*e on the grid.
Puiseux rational_pow(const Puiseux& a, const Rational& e);

// q d/dq.
Puiseux derive(const Puiseux& a);

// q -> q^m for rational m > 0; exponents and precision scale by m.
Puiseux substitute_power(const Puiseux& a, const Rational& m);

// f(g) for f with nonnegative integer exponents and ord(g) > 0.
Puiseux compose(const Puiseux& f, const Puiseux& g);

// Lowers precision to min(P, current); never raises trust.
Puiseux truncate(const Puiseux& a, const Rational& prec);

// Equality of all coefficients below min(precision); fields must embed.
bool equal(const Puiseux& a, const Puiseux& b);

int common_series_disc(const Puiseux& a, const Puiseux& b);

}  // namespace qmf
