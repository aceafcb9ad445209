#pragma once

#include "qmf/errors.hpp"
#include "qmf/rational.hpp"

namespace qmf {

// Scalar in the quadratic extension Q(w), w^2 = d, for a fixed squarefree
// integer d (d = 0 denotes plain Q).  A computation works over a single
// extension; a scalar with zero radical part embeds into any of them.
class QuadExt {
 public:
  QuadExt() : re_(0), rad_(0), d_(0) {}
  QuadExt(long v) : re_(v), rad_(0), d_(0) {}  // NOLINT: implicit by design
  QuadExt(Rational v) : re_(std::move(v)), rad_(0), d_(0) {}
  QuadExt(Rational re, Rational rad, int d);

  static QuadExt omega(int d) { return QuadExt(0, 1, d); }

  const Rational& re() const { return re_; }
  const Rational& rad() const { return rad_; }
  int disc() const { return d_; }

  bool is_zero() const { return re_ == 0 && rad_ == 0; }
  bool is_rational() const { return rad_ == 0; }

  QuadExt conj() const { return QuadExt(re_, -rad_, d_); }
  Rational norm() const { return re_ * re_ - Rational(d_) * rad_ * rad_; }
  QuadExt inv() const;

  // Coerces to field d; throws FieldMismatchError if the value genuinely
  // lives in a different extension.
  QuadExt in_field(int d) const;

  QuadExt operator-() const { return QuadExt(-re_, -rad_, d_); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    if (a.re_ != b.re_ || a.rad_ != b.rad_) return false;
    return a.rad_ == 0 || a.d_ == b.d_;
  }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

  QuadExt pow(long e) const;

  // "a", "a+b*w", "a-b*w", "b*w" (pure ASCII).
  std::string str() const;

 private:
  Rational re_, rad_;
  int d_;
};

// Common field of two scalars; throws FieldMismatchError when both carry
// nonzero radical parts over different d.
int common_disc(const QuadExt& a, const QuadExt& b);

}  // namespace qmf
