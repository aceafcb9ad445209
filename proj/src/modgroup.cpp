#include "qmf/modgroup.hpp"

#include "qmf/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace qmf {

int jacobi_symbol(long a, long n) {
  if (n <= 0 || n % 2 == 0) throw std::invalid_argument("jacobi symbol needs odd n > 0");
  a %= n;
  if (a < 0) a += n;
  int s = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long m = n % 8;
      if (m == 3 || m == 5) s = -s;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) s = -s;
    a %= n;
  }
  return n == 1 ? s : 0;
}

namespace {

int mod24(long e) {
  int r = static_cast<int>(e % 24);
  return r < 0 ? r + 24 : r;
}

int mod48(long e) {
  int r = static_cast<int>(e % 48);
  return r < 0 ? r + 48 : r;
}

}  // namespace

int eta_multiplier_exp24(const Mat2& g) {
  if (g.det() != 1) throw std::invalid_argument("eta multiplier needs det 1");
  if (g.c == 0) {
    if (g.d != 1) throw std::invalid_argument("c = 0 case needs d = 1");
    return mod24(g.b);
  }
  if (g.c < 0) throw std::invalid_argument("eta multiplier needs c >= 0");
  // Jacobi-symbol closed forms, stated against the rotated square root
  // (-i(c tau + d))^(1/2); the trailing -3 converts to the principal branch.
  long e;
  int sign;
  if (g.c % 2 == 1) {
    sign = jacobi_symbol(g.d, g.c);
    e = 3 * (1 - g.c) + g.b * g.d * (1 - g.c * g.c) + g.c * (g.a + g.d);
  } else {
    long dd = g.d > 0 ? g.d : -g.d;  // (c/-d) = (c/d) in this convention
    sign = jacobi_symbol(g.c, dd);
    e = 3 * g.d + g.a * g.c * (1 - g.d * g.d) + g.d * (g.b - g.c);
  }
  return mod24(e - 3 + (sign == 1 ? 0 : 12));
}

int EtaQuotient::weight2() const {
  int s = 0;
  for (auto& [delta, rd] : r) s += rd;
  return s;
}

Rational EtaQuotient::order_at(long dden) const {
  Rational s(0);
  for (auto& [delta, rd] : r) {
    long g = std::gcd(dden, delta);
    s += Rational(rd) * rat(g * g, 24 * delta);
  }
  return s;
}

Rational EtaQuotient::reg_order_at(long dden) const {
  return Rational(cusp_width(level, dden)) * order_at(dden);
}

long cusp_width(long N, long dden) {
  if (N % dden != 0) throw std::invalid_argument("cusp denominator must divide the level");
  return N / (dden * std::gcd(dden, N / dden));
}

long group_index(long N) {
  long idx = N;
  long n = N;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    idx = idx / p * (p + 1);
    while (n % p == 0) n /= p;
  }
  if (n > 1) idx = idx / n * (n + 1);
  return idx;
}

int quotient_multiplier_exp48(const EtaQuotient& eq, const Mat2& g) {
  if (!g.in_gamma0(eq.level)) {
    throw std::invalid_argument("matrix is not in the quotient's group");
  }
  int k2 = eq.weight2();
  if (k2 % 2 != 0) throw std::invalid_argument("quotient must have integral weight");
  int k = k2 / 2;
  if (g.c < 0 || (g.c == 0 && g.d < 0)) {
    // f((-g) tau) = f(g tau) and (c tau + d)^k = (-1)^k ((-c) tau + (-d))^k.
    return mod48(quotient_multiplier_exp48(eq, -g) + 24L * k);
  }
  if (g.c == 0) {
    long e = 0;
    for (auto& [delta, rd] : eq.r) e += rd * delta * g.b;
    return mod48(2 * e);
  }
  // eta(delta g tau) = eps(g_delta) (c tau + d)^(1/2) eta(delta tau) with
  // g_delta = (a, delta b; c/delta, d), so the quotient multiplier is the
  // exponent-weighted product of the scaled eta multipliers.
  long e = 0;
  for (auto& [delta, rd] : eq.r) {
    Mat2 gd{g.a, delta * g.b, g.c / delta, g.d};
    e += static_cast<long>(rd) * eta_multiplier_exp24(gd);
  }
  return mod48(2 * e);
}

std::vector<Mat2> gamma0_generators(long N) {
  switch (N) {
    case 1:
      return {{1, 1, 0, 1}, {0, -1, 1, 0}};
    case 2:
      return {{1, 1, 0, 1}, {1, -1, 2, -1}};
    case 3:
      return {{1, 1, 0, 1}, {-1, -1, 3, 2}};
    case 4:
      return {{1, 1, 0, 1}, {1, -1, 4, -3}};
    default:
      throw std::invalid_argument("generators tabulated for level <= 4 only");
  }
}

bool is_modular_form_with_character(const EtaQuotient& eq,
                                    const WeightVector& chi_table) {
  int k2 = eq.weight2();
  if (k2 % 2 != 0) return false;
  int k = k2 / 2;
  // -I must act by (-1)^k = chi(-1).
  Rational chi_m1 = char_at(chi_table, -1);
  if (chi_m1 != (k % 2 == 0 ? 1 : -1)) return false;
  for (const Mat2& g : gamma0_generators(eq.level)) {
    Rational chi_d = char_at(chi_table, g.d);
    int want;
    if (chi_d == 1) {
      want = 0;
    } else if (chi_d == -1) {
      want = 24;
    } else {
      return false;
    }
    if (quotient_multiplier_exp48(eq, g) != want) return false;
  }
  for (long dden = 1; dden <= eq.level; ++dden) {
    if (eq.level % dden != 0) continue;
    if (eq.order_at(dden) < 0) return false;
  }
  return true;
}

}  // namespace qmf
