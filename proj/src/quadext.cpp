#include "qmf/quadext.hpp"

namespace qmf {

namespace {
bool valid_disc(int d) {
  if (d == 0) return true;
  if (d == 1) return false;
  int a = d < 0 ? -d : d;
  for (int p = 2; p * p <= a; ++p) {
    if (a % (p * p) == 0) return false;
  }
  return true;
}
}  // namespace

QuadExt::QuadExt(Rational re, Rational rad, int d)
    : re_(std::move(re)), rad_(std::move(rad)), d_(d) {
  if (!valid_disc(d)) {
    throw FieldMismatchError("discriminant must be 0 or squarefree != 1, got " +
                             std::to_string(d));
  }
  if (d == 0 && rad_ != 0) {
    throw FieldMismatchError("nonzero radical part over Q");
  }
}

int common_disc(const QuadExt& a, const QuadExt& b) {
  if (a.rad() == 0) return b.rad() == 0 ? (a.disc() != 0 ? a.disc() : b.disc()) : b.disc();
  if (b.rad() == 0) return a.disc();
  if (a.disc() != b.disc()) {
    throw FieldMismatchError("scalars over Q(sqrt(" + std::to_string(a.disc()) +
                             ")) and Q(sqrt(" + std::to_string(b.disc()) + "))");
  }
  return a.disc();
}

QuadExt QuadExt::in_field(int d) const {
  if (rad_ == 0) return QuadExt(re_, 0, d);
  if (d_ != d) {
    throw FieldMismatchError("scalar over Q(sqrt(" + std::to_string(d_) +
                             ")) used in Q(sqrt(" + std::to_string(d) + "))");
  }
  return *this;
}

QuadExt QuadExt::inv() const {
  if (is_zero()) throw NonInvertibleError("division by zero scalar");
  if (rad_ == 0) return QuadExt(1 / re_, 0, d_);
  Rational n = norm();
  // d squarefree (not a square), so the norm form is anisotropic over Q.
  if (n == 0) throw NonInvertibleError("zero norm in quadratic extension");
  return QuadExt(re_ / n, -rad_ / n, d_);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = common_disc(*this, o);
  re_ += o.re_;
  rad_ += o.rad_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = common_disc(*this, o);
  re_ -= o.re_;
  rad_ -= o.rad_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  d_ = common_disc(*this, o);
  Rational re = re_ * o.re_ + Rational(d_) * rad_ * o.rad_;
  Rational rad = re_ * o.rad_ + rad_ * o.re_;
  re_ = std::move(re);
  rad_ = std::move(rad);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inv(); }

QuadExt QuadExt::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  QuadExt acc(Rational(1), Rational(0), d_);
  QuadExt base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string QuadExt::str() const {
  if (rad_ == 0) return rat_str(re_);
  std::string w = "w";
  std::string radpart;
  if (rad_ == 1) {
    radpart = w;
  } else if (rad_ == -1) {
    radpart = "-" + w;
  } else {
    radpart = rat_str(rad_) + "*" + w;
  }
  if (re_ == 0) return radpart;
  if (rad_ > 0) return rat_str(re_) + "+" + (rad_ == 1 ? w : rat_str(rad_) + "*" + w);
  return rat_str(re_) + "-" + (rad_ == -1 ? w : rat_str(-rad_) + "*" + w);
}

}  // namespace qmf
