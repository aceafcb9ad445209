#include "qmf/rational.hpp"

#include <stdexcept>

namespace qmf {

Rational rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& x) { return x.get_str(); }

bool rat_is_integer(const Rational& x) { return x.get_den() == 1; }

long rat_long(const Rational& x) {
  if (!rat_is_integer(x) || !x.get_num().fits_slong_p()) {
    throw std::invalid_argument("rational is not a machine integer: " + rat_str(x));
  }
  return x.get_num().get_si();
}

mpz_class rat_floor(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

mpz_class rat_ceil(const Rational& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

bool rat_exact_root(const Rational& x, unsigned long n, Rational& out) {
  if (n == 0) throw std::invalid_argument("0th root");
  if (x == 0) {
    out = 0;
    return true;
  }
  if (x < 0 && n % 2 == 0) return false;
  mpz_class num = x.get_num(), den = x.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  mpz_class rn, rd;
  bool oknum = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) != 0;
  bool okden = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) != 0;
  if (!oknum || !okden) return false;
  out = Rational(neg ? -rn : rn, rd);
  out.canonicalize();
  return true;
}

Rational rat_binomial(const Rational& a, unsigned long k) {
  Rational r = 1;
  for (unsigned long i = 0; i < k; ++i) {
    r *= (a - Rational(static_cast<long>(i)));
    r /= Rational(static_cast<long>(i) + 1);
  }
  return r;
}

Rational rat_pow(const Rational& a, long e) {
  if (e == 0) return 1;
  if (a == 0 && e < 0) throw std::invalid_argument("0^negative");
  mpz_class num = a.get_num(), den = a.get_den();
  unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), ae);
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), ae);
  Rational r = (e < 0) ? Rational(pd, pn) : Rational(pn, pd);
  r.canonicalize();
  return r;
}

}  // namespace qmf
