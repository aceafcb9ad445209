#include "qmf/ratfun.hpp"

#include "qmf/errors.hpp"

#include <sstream>

namespace qmf {

Poly::Poly(Rational c) {
  c_.push_back(std::move(c));
  normalize();
}

Poly Poly::var() { return from_coeffs({Rational(0), Rational(1)}); }

Poly Poly::from_coeffs(std::vector<Rational> c) {
  Poly p;
  p.c_ = std::move(c);
  p.normalize();
  return p;
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(long i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

const Rational& Poly::lead() const {
  if (is_zero()) throw NonInvertibleError("leading coefficient of the zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly::from_coeffs(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly::from_coeffs(std::move(c));
}

bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

Poly Poly::scaled(const Rational& s) const {
  if (s == 0) return Poly();
  Poly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

Poly Poly::pow(unsigned long e) const {
  Poly r(Rational(1));
  Poly base = *this;
  for (; e; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return from_coeffs(std::move(c));
}

Rational Poly::eval(const Rational& x) const {
  Rational v(0);
  for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
  return v;
}

Poly Poly::compose_scale(const Rational& s) const {
  Poly r = *this;
  Rational p(1);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    r.c_[i] *= p;
    p *= s;
  }
  r.normalize();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw NonInvertibleError("polynomial division by zero");
  Poly rem = a;
  if (a.degree() < b.degree()) return {Poly(), rem};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const long shift = rem.degree() - b.degree();
    const Rational f = rem.lead() / b.lead();
    q[static_cast<std::size_t>(shift)] = f;
    // rem -= f * t^shift * b, dropping the cancelled leading term exactly.
    std::vector<Rational> c(rem.c_.begin(), rem.c_.end());
    for (long i = 0; i <= b.degree(); ++i)
      c[static_cast<std::size_t>(i + shift)] -= f * b.coeff(i);
    rem = Poly::from_coeffs(std::move(c));
  }
  return {Poly::from_coeffs(std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scaled(1 / a.lead());
  return a;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rational& ci = c_[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    if (!first) os << (ci > 0 ? " + " : " - ");
    const Rational mag = first ? ci : Rational(abs(ci));
    first = false;
    if (i == 0 || mag != 1) {
      os << rat_str(mag);
      if (i > 0) os << "*";
    }
    if (i == 1) os << "t";
    if (i > 1) os << "t^" << i;
  }
  return os.str();
}

RatFun::RatFun() : den_(Poly(Rational(1))) {}

RatFun::RatFun(Rational c) : num_(Poly(std::move(c))), den_(Poly(Rational(1))) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw NonInvertibleError("rational function with zero denominator");
  normalize();
}

RatFun RatFun::var() { return RatFun(Poly::var(), Poly(Rational(1))); }

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  const Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  const Rational lc = den_.lead();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw NonInvertibleError("division by the zero rational function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFun& a, const RatFun& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

RatFun RatFun::scaled(const Rational& s) const { return RatFun(num_.scaled(s), den_); }

RatFun RatFun::pow(long e) const {
  if (e == 0) return RatFun(Rational(1));
  if (e < 0) {
    if (is_zero()) throw NonInvertibleError("negative power of the zero rational function");
    return RatFun(den_.pow(static_cast<unsigned long>(-e)),
                  num_.pow(static_cast<unsigned long>(-e)));
  }
  return RatFun(num_.pow(static_cast<unsigned long>(e)), den_.pow(static_cast<unsigned long>(e)));
}

RatFun RatFun::derivative() const {
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::compose_scale(const Rational& s) const {
  return RatFun(num_.compose_scale(s), den_.compose_scale(s));
}

std::string RatFun::str() const {
  if (den_ == Poly(Rational(1))) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace qmf
