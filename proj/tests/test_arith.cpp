#include "doctest.h"

#include "qmf/arith.hpp"

#include <random>

using namespace qmf;

namespace {

// Oracle: enumerate every divisor directly.
Rational sigma_brute(long n, long k, const WeightVector& w, bool conj) {
  long N = static_cast<long>(w.size());
  Rational s(0);
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long tag = conj ? (n / d) % N : d % N;
    s += w[static_cast<std::size_t>(tag)] * rat_pow(Rational(d), k);
  }
  return s;
}

}  // namespace

TEST_CASE("plain divisor sums") {
  CHECK(sigma_plain(1, 1) == 1);
  CHECK(sigma_plain(6, 1) == 12);
  CHECK(sigma_plain(4, 3) == 73);
  CHECK(sigma_plain(12, 0) == 6);
  CHECK(sigma_plain(28, 1) == 56);
}

TEST_CASE("weighted divisor sums against brute enumeration") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<long> npick(1, 400);
  std::uniform_int_distribution<long> Npick(1, 6);
  std::uniform_int_distribution<long> wpick(-3, 3);
  std::uniform_int_distribution<long> kpick(0, 4);
  for (int round = 0; round < 200; ++round) {
    long N = Npick(rng);
    WeightVector w;
    for (long i = 0; i < N; ++i) w.push_back(Rational(wpick(rng)));
    long n = npick(rng);
    long k = kpick(rng);
    CHECK(sigma_weighted(n, k, w) == sigma_brute(n, k, w, false));
    CHECK(sigma_weighted_conj(n, k, w) == sigma_brute(n, k, w, true));
  }
}

TEST_CASE("character tables") {
  WeightVector m3 = char_m3();
  CHECK(char_at(m3, 7) == 1);
  CHECK(char_at(m3, -1) == -1);
  CHECK(char_at(m3, 6) == 0);
  WeightVector m4 = char_m4();
  CHECK(char_at(m4, 5) == 1);
  CHECK(char_at(m4, -1) == -1);
  CHECK(char_at(m4, 2) == 0);
  WeightVector p2 = char_principal(2);
  CHECK(char_at(p2, 3) == 1);
  CHECK(char_at(p2, 4) == 0);

  // chi(-4) weighted sigma_1(5) = 1 + 5 = 6.
  CHECK(sigma_weighted(5, 1, m4) == 6);
  // and sigma_1(2; chi_m4) counts only odd divisors: 1.
  CHECK(sigma_weighted(2, 1, m4) == 1);
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == rat(-1, 2));
  CHECK(bernoulli(2) == rat(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == rat(-1, 30));
  CHECK(bernoulli(6) == rat(1, 42));
  CHECK(bernoulli(8) == rat(-1, 30));
  CHECK(bernoulli(10) == rat(5, 66));
  CHECK(bernoulli(12) == rat(-691, 2730));
}

TEST_CASE("twisted Bernoulli numbers and L-values") {
  // Trivial modulus-1 sequence reproduces the classical numbers.
  WeightVector triv = char_trivial();
  for (unsigned long k = 2; k <= 12; k += 2) {
    CHECK(bernoulli_twisted(k, triv) == bernoulli(k));
  }

  WeightVector m4 = char_m4();
  WeightVector m3 = char_m3();
  CHECK(bernoulli_twisted(1, m4) == rat(-1, 2));
  CHECK(bernoulli_twisted(3, m4) == rat(3, 2));
  CHECK(bernoulli_twisted(1, m3) == rat(-1, 3));
  // Odd characters kill even-index twisted numbers.
  CHECK(bernoulli_twisted(2, m4) == 0);
  CHECK(bernoulli_twisted(4, m4) == 0);
  CHECK(bernoulli_twisted(2, m3) == 0);

  // Normalization constants 2/L(1-k) of the classical level-one series.
  CHECK(Rational(2) / l_value(2, triv) == -24);
  CHECK(Rational(2) / l_value(4, triv) == 240);
  CHECK(Rational(2) / l_value(6, triv) == -504);
  CHECK(Rational(2) / l_value(8, triv) == 480);
  // ...and of the weight-one theta companions.
  CHECK(Rational(2) / l_value(1, m4) == 4);
  CHECK(Rational(2) / l_value(1, m3) == 6);
  CHECK(Rational(2) / l_value(3, m4) == -4);
}
