#include "qmf/arith.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qmf {

namespace {

Rational ipow(long base, long e) { return rat_pow(Rational(base), e); }

}  // namespace

Rational sigma_weighted(long n, long k, const WeightVector& w) {
  if (n <= 0) throw std::invalid_argument("divisor sum needs n >= 1");
  long N = static_cast<long>(w.size());
  Rational s(0);
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += w[static_cast<std::size_t>(d % N)] * ipow(d, k);
    long e = n / d;
    if (e != d) s += w[static_cast<std::size_t>(e % N)] * ipow(e, k);
  }
  return s;
}

Rational sigma_weighted_conj(long n, long k, const WeightVector& w) {
  if (n <= 0) throw std::invalid_argument("divisor sum needs n >= 1");
  long N = static_cast<long>(w.size());
  Rational s(0);
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    long e = n / d;
    s += w[static_cast<std::size_t>(e % N)] * ipow(d, k);
    if (e != d) s += w[static_cast<std::size_t>(d % N)] * ipow(e, k);
  }
  return s;
}

Rational sigma_plain(long n, long k) { return sigma_weighted(n, k, char_trivial()); }

WeightVector char_trivial() { return {Rational(1)}; }

WeightVector char_principal(long N) {
  WeightVector w(static_cast<std::size_t>(N), Rational(0));
  for (long a = 0; a < N; ++a) {
    if (std::gcd(a, N) == 1) w[static_cast<std::size_t>(a)] = 1;
  }
  return w;
}

WeightVector char_m3() { return {Rational(0), Rational(1), Rational(-1)}; }

WeightVector char_m4() { return {Rational(0), Rational(1), Rational(0), Rational(-1)}; }

Rational char_at(const WeightVector& w, long n) {
  long N = static_cast<long>(w.size());
  long r = n % N;
  if (r < 0) r += N;
  return w[static_cast<std::size_t>(r)];
}

const Rational& bernoulli(unsigned long m) {
  static std::vector<Rational> cache{Rational(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= m) {
    unsigned long n = cache.size();
    // sum_{j=0}^{n} binom(n+1, j) B_j = 0
    Rational s(0);
    for (unsigned long j = 0; j < n; ++j) {
      s += rat_binomial(Rational(static_cast<long>(n + 1)), j) * cache[j];
    }
    cache.push_back(-s / Rational(static_cast<long>(n + 1)));
  }
  return cache[m];
}

Rational bernoulli_twisted(unsigned long k, const WeightVector& phi) {
  long N = static_cast<long>(phi.size());
  std::vector<Rational> S(k + 1, Rational(0));
  for (unsigned long m = 0; m <= k; ++m) {
    for (long a = 0; a < N; ++a) {
      if (phi[static_cast<std::size_t>(a)] == 0) continue;
      // 0^0 = 1 by convention in the power sum.
      Rational am = (m == 0) ? Rational(1) : ipow(a, static_cast<long>(m));
      S[m] += phi[static_cast<std::size_t>(a)] * am;
    }
  }
  Rational b(0);
  for (unsigned long j = 0; j <= k; ++j) {
    b += rat_binomial(Rational(static_cast<long>(k)), j) * bernoulli(j) *
         rat_pow(Rational(N), static_cast<long>(j) - 1) * S[k - j];
  }
  return b;
}

Rational l_value(unsigned long k, const WeightVector& phi) {
  if (k == 0) throw std::invalid_argument("l_value needs k >= 1");
  return -bernoulli_twisted(k, phi) / Rational(static_cast<long>(k));
}

}  // namespace qmf
