#include "qmf/puiseux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qmf {

namespace {

long checked_lcm(long a, long b) {
  long l = std::lcm(a, b);
  if (l <= 0 || l > Puiseux::kMaxExpoDen || Puiseux::kMaxExpoDen % l != 0) {
    throw PrecisionError("exponent grid denominator " + std::to_string(l) +
                         " is not a divisor of 48");
  }
  return l;
}

int merge_disc(int a, int b) {
  if (a == b) return a;
  if (a == 0) return b;
  if (b == 0) return a;
  throw FieldMismatchError("series over Q(sqrt(" + std::to_string(a) +
                           ")) and Q(sqrt(" + std::to_string(b) + ")) do not mix");
}

long rat_to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw PrecisionError("exponent index overflows long");
  return z.get_si();
}

// Leading-monomial root: x with x^q = c, or null.  Handles x rational and
// x = r*w; a mixed a+b*w root of a monomial never arises for squarefree d.
std::optional<QuadExt> quad_root(const QuadExt& c, unsigned long q, int d) {
  Rational r;
  if (c.is_rational()) {
    if (rat_exact_root(c.re(), q, r)) return QuadExt(r);
    // x = r*w, even q: x^q = r^q * d^(q/2).
    if (d != 0 && q % 2 == 0) {
      Rational target = c.re() / rat_pow(Rational(d), static_cast<long>(q / 2));
      if (rat_exact_root(target, q, r)) return QuadExt(0, r, d);
    }
    return std::nullopt;
  }
  if (c.re() == 0 && q % 2 == 1) {
    // x = r*w, odd q: x^q = r^q * d^((q-1)/2) * w.
    Rational target = c.rad() / rat_pow(Rational(d), static_cast<long>((q - 1) / 2));
    if (rat_exact_root(target, q, r)) return QuadExt(0, r, d);
  }
  return std::nullopt;
}

}  // namespace

long Puiseux::prec_key() const { return rat_to_long(rat_ceil(prec_ * den_)); }

void Puiseux::normalize() {
  long cut = prec_key();
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second.is_zero() || it->first >= cut) {
      it = c_.erase(it);
    } else {
      ++it;
    }
  }
  if (c_.empty()) {
    den_ = 1;
    return;
  }
  long g = den_;
  for (const auto& [k, v] : c_) g = std::gcd(g, k);
  if (g > 1) {
    std::map<long, QuadExt> reduced;
    for (auto& [k, v] : c_) reduced.emplace(k / g, std::move(v));
    c_ = std::move(reduced);
    den_ /= g;
  }
}

void Puiseux::rescale_den(long new_den) {
  if (new_den == den_) return;
  long f = new_den / den_;
  std::map<long, QuadExt> scaled;
  for (auto& [k, v] : c_) scaled.emplace(k * f, std::move(v));
  c_ = std::move(scaled);
  den_ = new_den;
}

Puiseux Puiseux::constant(const QuadExt& v, Rational prec, int disc) {
  Puiseux r(merge_disc(disc, v.disc()), std::move(prec));
  if (!v.is_zero() && r.prec_ > 0) r.c_.emplace(0, v.in_field(r.disc_));
  return r;
}

Puiseux Puiseux::monomial(const QuadExt& coeff, const Rational& expo, Rational prec,
                          int disc) {
  Puiseux r(merge_disc(disc, coeff.disc()), std::move(prec));
  r.den_ = checked_lcm(1, rat_to_long(mpz_class(expo.get_den())));
  if (!coeff.is_zero() && expo < r.prec_) {
    r.c_.emplace(rat_to_long(mpz_class(expo.get_num())), coeff.in_field(r.disc_));
  }
  r.normalize();
  return r;
}

Puiseux Puiseux::q(Rational prec, int disc) {
  return monomial(QuadExt(1), Rational(1), std::move(prec), disc);
}

std::optional<Rational> Puiseux::order() const {
  if (c_.empty()) return std::nullopt;
  return rat(c_.begin()->first, den_);
}

Rational Puiseux::order_or_prec() const {
  auto o = order();
  return o ? *o : prec_;
}

QuadExt Puiseux::coeff(const Rational& e) const {
  if (e >= prec_) {
    throw PrecisionError("coefficient at q^" + rat_str(e) +
                         " requested beyond precision " + rat_str(prec_));
  }
  Rational scaled = e * den_;
  if (!rat_is_integer(scaled)) return QuadExt(0);
  auto it = c_.find(rat_to_long(mpz_class(scaled.get_num())));
  return it == c_.end() ? QuadExt(0) : it->second;
}

std::vector<std::pair<Rational, QuadExt>> Puiseux::terms() const {
  std::vector<std::pair<Rational, QuadExt>> out;
  out.reserve(c_.size());
  for (const auto& [k, v] : c_) out.emplace_back(rat(k, den_), v);
  return out;
}

void Puiseux::set_coeff(const Rational& e, const QuadExt& v) {
  disc_ = merge_disc(disc_, v.disc());
  long ed = rat_to_long(mpz_class(e.get_den()));
  long nd = checked_lcm(den_, ed);
  rescale_den(nd);
  long key = rat_to_long(mpz_class(e.get_num())) * (nd / ed);
  if (v.is_zero()) {
    c_.erase(key);
  } else {
    c_[key] = v.in_field(disc_);
  }
  normalize();
}

Puiseux Puiseux::operator-() const {
  Puiseux r(*this);
  for (auto& [k, v] : r.c_) v = -v;
  return r;
}

std::string Puiseux::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c_) {
    std::string cs = v.str();
    bool neg = cs.size() > 1 && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
               cs.find('-', 1) == std::string::npos;
    if (first) {
      if (neg) {
        os << "-";
        cs = cs.substr(1);
      }
      first = false;
    } else if (neg) {
      os << " - ";
      cs = cs.substr(1);
    } else {
      os << " + ";
    }
    bool wrap = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
    if (wrap) cs = "(" + cs + ")";
    if (k == 0) {
      os << cs;
      continue;
    }
    if (cs != "1") os << cs << "*";
    os << "q";
    if (k != den_) {
      if (den_ == 1) {
        os << "^" << k;
      } else {
        os << "^(" << k << "/" << den_ << ")";
      }
    } else if (den_ != 1) {
      os << "^(" << k << "/" << den_ << ")";
    }
  }
  if (first) os << "0";
  os << " + O(q^" << rat_str(prec_) << ")";
  return os.str();
}

int common_series_disc(const Puiseux& a, const Puiseux& b) {
  return merge_disc(a.disc(), b.disc());
}

Puiseux add(const Puiseux& a, const Puiseux& b) {
  Puiseux r(merge_disc(a.disc_, b.disc_), rat_min(a.prec_, b.prec_));
  r.den_ = checked_lcm(a.den_, b.den_);
  long fa = r.den_ / a.den_, fb = r.den_ / b.den_;
  for (const auto& [k, v] : a.c_) r.c_[k * fa] = v.in_field(r.disc_);
  for (const auto& [k, v] : b.c_) {
    auto [it, fresh] = r.c_.emplace(k * fb, v.in_field(r.disc_));
    if (!fresh) it->second += v;
  }
  r.normalize();
  return r;
}

Puiseux sub(const Puiseux& a, const Puiseux& b) { return add(a, -b); }

Puiseux mul(const Puiseux& a, const Puiseux& b) {
  int disc = merge_disc(a.disc_, b.disc_);
  Rational prec =
      rat_min(a.prec_ + b.order_or_prec(), b.prec_ + a.order_or_prec());
  Puiseux r(disc, prec);
  if (a.c_.empty() || b.c_.empty()) return r;
  r.den_ = checked_lcm(a.den_, b.den_);
  long fa = r.den_ / a.den_, fb = r.den_ / b.den_;
  long cut = r.prec_key();
  long base = a.c_.begin()->first * fa + b.c_.begin()->first * fb;
  long span = cut - base;
  // Convolution is quadratic either way; buffer into a flat array when that
  // is no larger than the number of coefficient products.
  if (span > 0 &&
      static_cast<unsigned long>(span) <=
          static_cast<unsigned long>(a.c_.size()) * b.c_.size()) {
    std::vector<QuadExt> buf(static_cast<std::size_t>(span));
    for (const auto& [ka, va] : a.c_) {
      QuadExt fva = va.in_field(disc);
      for (const auto& [kb, vb] : b.c_) {
        long k = ka * fa + kb * fb;
        if (k >= cut) break;
        buf[static_cast<std::size_t>(k - base)] += fva * vb;
      }
    }
    for (long i = 0; i < span; ++i) {
      if (!buf[static_cast<std::size_t>(i)].is_zero()) {
        r.c_.emplace_hint(r.c_.end(), base + i, std::move(buf[static_cast<std::size_t>(i)]));
      }
    }
  } else {
    for (const auto& [ka, va] : a.c_) {
      QuadExt fva = va.in_field(disc);
      for (const auto& [kb, vb] : b.c_) {
        long k = ka * fa + kb * fb;
        if (k >= cut) break;
        auto [it, fresh] = r.c_.emplace(k, fva * vb);
        if (!fresh) it->second += fva * vb;
      }
    }
  }
  r.normalize();
  return r;
}

Puiseux scalar_mul(const QuadExt& s, const Puiseux& a) {
  Puiseux r(merge_disc(a.disc_, s.disc()), a.prec_);
  if (s.is_zero()) return r;
  r.den_ = a.den_;
  QuadExt sf = s.in_field(r.disc_);
  for (const auto& [k, v] : a.c_) r.c_.emplace_hint(r.c_.end(), k, sf * v);
  r.normalize();
  return r;
}

Puiseux invert(const Puiseux& a) {
  if (a.c_.empty()) {
    throw NonInvertibleError("cannot invert a series with no trusted terms");
  }
  long mkey = a.c_.begin()->first;
  Rational m = rat(mkey, a.den_);
  Rational rel = a.prec_ - m;  // relative precision of the unit part
  QuadExt lead_inv = a.c_.begin()->second.inv();
  long steps = rat_to_long(rat_ceil(rel * a.den_));
  // Unit part u = a / (lead * q^m) = 1 + sum u_j q^(j/den), solved by the
  // convolution recurrence v_0 = 1, v_i = -sum_{j<=i} u_j v_{i-j}.
  std::vector<std::pair<long, QuadExt>> u;
  for (auto it = std::next(a.c_.begin()); it != a.c_.end(); ++it) {
    u.emplace_back(it->first - mkey, lead_inv * it->second);
  }
  std::vector<QuadExt> v(static_cast<std::size_t>(std::max<long>(steps, 0)));
  if (steps > 0) v[0] = QuadExt(1);
  for (long i = 1; i < steps; ++i) {
    QuadExt s(0);
    for (const auto& [j, uj] : u) {
      if (j > i) break;
      if (!v[static_cast<std::size_t>(i - j)].is_zero()) {
        s += uj * v[static_cast<std::size_t>(i - j)];
      }
    }
    v[static_cast<std::size_t>(i)] = -s;
  }
  Puiseux r(a.disc_, a.prec_ - 2 * m);
  r.den_ = a.den_;
  for (long i = 0; i < steps; ++i) {
    if (!v[static_cast<std::size_t>(i)].is_zero()) {
      r.c_.emplace_hint(r.c_.end(), i - mkey, lead_inv * v[static_cast<std::size_t>(i)]);
    }
  }
  r.normalize();
  return r;
}

Puiseux rational_pow(const Puiseux& a, const Rational& e) {
  if (rat_is_integer(e)) {
    long n = rat_long(e);
    if (n == 0) return Puiseux::constant(QuadExt(1), a.prec_ - a.order_or_prec(), a.disc_);
    if (n < 0) return invert(rational_pow(a, Rational(-n)));
    // Square-and-multiply from the low bit.  The over-precise seed constant
    // is harmless: every product is capped by the mul precision rule.
    Puiseux base = a;
    Puiseux acc = (n & 1) ? a
                          : Puiseux::constant(QuadExt(1),
                                              a.prec_ + (n - 1) * a.order_or_prec(),
                                              a.disc_);
    unsigned long bits = static_cast<unsigned long>(n) >> 1;
    while (bits != 0) {
      base = mul(base, base);
      if (bits & 1) acc = mul(acc, base);
      bits >>= 1;
    }
    return acc;
  }
  if (a.c_.empty()) {
    if (e < 0) throw NonInvertibleError("cannot invert a series with no trusted terms");
    return Puiseux(a.disc_, a.prec_ * e);
  }
  Rational m = *a.order();
  Rational me = m * e;
  if (Puiseux::kMaxExpoDen % mpz_class(me.get_den()) != 0) {
    throw PrecisionError("power would leave the (1/48)Z exponent grid");
  }
  unsigned long qden = mpz_class(e.get_den()).get_ui();
  long pnum = rat_to_long(mpz_class(e.get_num()));
  QuadExt cp = a.c_.begin()->second.pow(pnum);
  auto root = quad_root(cp, qden, a.disc_);
  if (!root) {
    throw RootExtractionError("leading coefficient " + a.c_.begin()->second.str() +
                              " has no exact power " + rat_str(e) +
                              " in the working field");
  }
  // a = c q^m (1 + v): binomial series in v at relative precision P - m.
  Rational rel = a.prec_ - m;
  Puiseux unit = scalar_mul(a.c_.begin()->second.inv(),
                            mul(a, Puiseux::monomial(QuadExt(1), -m, rel + 1, a.disc_)));
  Puiseux v = sub(truncate(unit, rel), Puiseux::constant(QuadExt(1), rel, a.disc_));
  Puiseux acc = Puiseux::constant(QuadExt(1), rel, a.disc_);
  Puiseux term = acc;
  for (unsigned long k = 1;; ++k) {
    term = truncate(mul(term, v), rel);
    if (term.is_zero()) break;
    acc = add(acc, scalar_mul(QuadExt(rat_binomial(e, k)), term));
  }
  Puiseux shifted = mul(acc, Puiseux::monomial(QuadExt(1), me, rel + (me > 0 ? me : Rational(0)) + 1, a.disc_));
  return scalar_mul(*root, truncate(shifted, rel + me));
}

Puiseux derive(const Puiseux& a) {
  Puiseux r(a.disc_, a.prec_);
  r.den_ = a.den_;
  for (const auto& [k, v] : a.c_) {
    if (k != 0) r.c_.emplace_hint(r.c_.end(), k, v * QuadExt(rat(k, a.den_)));
  }
  r.normalize();
  return r;
}

Puiseux substitute_power(const Puiseux& a, const Rational& m) {
  if (m <= 0) throw Error("substitute_power requires a positive exponent scale");
  long p = rat_to_long(mpz_class(m.get_num()));
  long q = rat_to_long(mpz_class(m.get_den()));
  Puiseux r(a.disc_, a.prec_ * m);
  long raw_den = a.den_ * q;
  long g = raw_den;
  for (const auto& [k, v] : a.c_) g = std::gcd(g, k * p);
  long new_den = raw_den / std::max<long>(g, 1);
  if (a.c_.empty()) new_den = 1;
  if (new_den > Puiseux::kMaxExpoDen || Puiseux::kMaxExpoDen % new_den != 0) {
    throw PrecisionError("substitution q -> q^(" + rat_str(m) +
                         ") leaves the (1/48)Z exponent grid");
  }
  r.den_ = new_den;
  for (const auto& [k, v] : a.c_) r.c_.emplace_hint(r.c_.end(), k * p / g, v);
  r.normalize();
  return r;
}

Puiseux compose(const Puiseux& f, const Puiseux& g) {
  if (f.den_ != 1 || (!f.c_.empty() && f.c_.begin()->first < 0)) {
    throw CompositionDomainError(
        "outer series must have nonnegative integer exponents");
  }
  Rational og = g.order_or_prec();
  if (og <= 0) {
    throw CompositionDomainError("inner series must have positive order");
  }
  int disc = merge_disc(f.disc_, g.disc_);
  Rational target = rat_min(f.prec_ * og, g.prec_);
  if (f.c_.empty()) return Puiseux(disc, target);
  Puiseux acc = Puiseux::constant(f.c_.rbegin()->second, target, disc);
  long prev = f.c_.rbegin()->first;
  for (auto it = std::next(f.c_.rbegin()); it != f.c_.rend(); ++it) {
    for (long i = 0; i < prev - it->first; ++i) acc = truncate(mul(acc, g), target);
    acc = add(acc, Puiseux::constant(it->second, target, disc));
    prev = it->first;
  }
  for (long i = 0; i < prev; ++i) acc = truncate(mul(acc, g), target);
  return acc;
}

Puiseux truncate(const Puiseux& a, const Rational& prec) {
  if (prec >= a.prec_) return a;
  Puiseux r = a;
  r.prec_ = prec;
  r.normalize();
  return r;
}

bool equal(const Puiseux& a, const Puiseux& b) {
  merge_disc(a.disc_, b.disc_);
  Rational p = rat_min(a.prec_, b.prec_);
  long den = checked_lcm(a.den_, b.den_);
  long fa = den / a.den_, fb = den / b.den_;
  long cut = rat_to_long(rat_ceil(p * den));
  auto ia = a.c_.begin();
  auto ib = b.c_.begin();
  // Keys at or beyond the shared precision are not comparable and count as
  // exhausted (either operand may carry them when its own precision is higher).
  while (ia != a.c_.end() || ib != b.c_.end()) {
    long ka = ia == a.c_.end() ? cut : ia->first * fa;
    long kb = ib == b.c_.end() ? cut : ib->first * fb;
    if (ka >= cut && kb >= cut) return true;
    if (ka != kb) return false;
    if (ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
  return true;
}

}  // namespace qmf
