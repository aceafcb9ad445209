#pragma once

#include "qmf/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qmf {

// Dense univariate polynomial over Q in the Hauptmodul variable t.  The
// coefficient of t^i sits at index i; trailing zeros are stripped, so the
// zero polynomial is the empty vector and degree() reports -1 for it.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c);
  static Poly var();
  static Poly from_coeffs(std::vector<Rational> c);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(long i) const;  // zero beyond the degree
  const Rational& lead() const;  // nonzero polynomials only

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const Rational& s) const;
  Poly pow(unsigned long e) const;
  Poly derivative() const;
  Rational eval(const Rational& x) const;
  // p(s*t); composing with a linear rescaling of the variable.
  Poly compose_scale(const Rational& s) const;

  // Quotient and remainder over Q; b must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);

  std::string str() const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

// Quotient of polynomials, kept with monic denominator and gcd(num, den)
// = 1, so equality is representation equality.  The zero function is 0/1.
class RatFun {
 public:
  RatFun();
  explicit RatFun(Rational c);
  RatFun(Poly num, Poly den);  // throws NonInvertibleError on den = 0
  static RatFun var();

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b);
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  RatFun scaled(const Rational& s) const;
  RatFun pow(long e) const;  // negative e requires a nonzero function
  RatFun derivative() const;
  RatFun compose_scale(const Rational& s) const;  // f(s*t)

  std::string str() const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace qmf
