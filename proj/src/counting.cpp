#include "qmf/counting.hpp"

#include "qmf/arith.hpp"
#include "qmf/forms.hpp"

#include <stdexcept>
#include <utility>

namespace qmf {

namespace {

void check_args(int s, long max_n) {
  if (s < 1 || s > 4) throw std::invalid_argument("tuple size: s must lie in 1..4");
  if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
}

}  // namespace

std::vector<mpz_class> lattice_counts(TupleKind kind, int s, long max_n) {
  check_args(s, max_n);
  // Counting sequence of a single entry, stored sparsely.
  std::vector<std::pair<long, long>> gen;
  if (kind == TupleKind::squares) {
    gen.emplace_back(0, 1);
    for (long m = 1; m * m <= max_n; ++m) gen.emplace_back(m * m, 2);
  } else {
    for (long k = 0; k * (k + 1) / 2 <= max_n; ++k) gen.emplace_back(k * (k + 1) / 2, 1);
  }
  std::vector<mpz_class> acc(static_cast<std::size_t>(max_n) + 1, 0);
  acc[0] = 1;
  for (int rep = 0; rep < 2 * s; ++rep) {
    std::vector<mpz_class> next(acc.size(), 0);
    for (long i = 0; i <= max_n; ++i) {
      if (acc[i] == 0) continue;
      for (const auto& [e, w] : gen) {
        if (i + e > max_n) break;
        next[i + e] += acc[i] * w;
      }
    }
    acc.swap(next);
  }
  return acc;
}

std::vector<Rational> theta_counts(TupleKind kind, int s, long max_n) {
  check_args(s, max_n);
  const bool squares = kind == TupleKind::squares;
  const Rational prec = squares ? Rational(max_n + 1)
                                : Rational(2 * max_n + 1) + rat(s, 2);
  Puiseux base = eval_form(squares ? "A2" : "C2", prec);
  Puiseux power = base;
  for (int i = 1; i < s; ++i) power = mul(power, base);
  const Rational scale = squares ? Rational(1) : rat_pow(rat(1, 4), s);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  for (long n = 0; n <= max_n; ++n) {
    const Rational e = squares ? Rational(n) : Rational(2 * n) + rat(s, 2);
    out.push_back(power.coeff(e).re() * scale);
  }
  return out;
}

namespace {

WeightVector wv(std::initializer_list<long> vals) {
  WeightVector w;
  for (long v : vals) w.emplace_back(v);
  return w;
}

// (num/den) * sigma_k(a*n + b; w), conjugate-weighted when conj is set.
CountFormula sig(std::string label, long k, WeightVector w, bool conj, long num, long den,
                 long a, long b) {
  // The explicit return type keeps the gmpxx expression template from
  // leaving the lambda with references to dead temporaries.
  auto value = [k, w = std::move(w), conj, num, den, a, b](long n) -> Rational {
    const Rational base =
        conj ? sigma_weighted_conj(a * n + b, k, w) : sigma_weighted(a * n + b, k, w);
    return base * Rational(num, den);
  };
  return {std::move(label), std::move(value)};
}

std::vector<CountFormula> make_formulas(TupleKind kind, int s) {
  if (kind == TupleKind::squares) {
    switch (s) {
      case 1:
        return {sig("4*sigma_0(n; 0,1,0,-1)", 0, wv({0, 1, 0, -1}), false, 4, 1, 1, 0)};
      case 2:
        return {sig("8*sigma_1(n; 0,1,1,1)", 1, wv({0, 1, 1, 1}), false, 8, 1, 1, 0),
                sig("8*sigmac_1(n; -3,1,1,1)", 1, wv({-3, 1, 1, 1}), true, 8, 1, 1, 0)};
      case 3: {
        // The two terms come from the two weight-3 Eisenstein series with
        // character modulo 4; neither alone counts anything.
        auto value = [](long n) -> Rational {
          const WeightVector chi = char_m4();
          return 16 * sigma_weighted_conj(n, 2, chi) - 4 * sigma_weighted(n, 2, chi);
        };
        return {{"16*sigmac_2(n; 0,1,0,-1) - 4*sigma_2(n; 0,1,0,-1)", value}};
      }
      default:
        return {sig("4*sigma_3(n; 4,4,3,4)", 3, wv({4, 4, 3, 4}), false, 4, 1, 1, 0),
                sig("16*sigmac_3(n; 15,1,-1,1)", 3, wv({15, 1, -1, 1}), true, 16, 1, 1, 0)};
    }
  }
  switch (s) {
    case 1:
      return {sig("sigma_0(4n+1; 0,1,-1,-1,0,1,1,-1)", 0, wv({0, 1, -1, -1, 0, 1, 1, -1}),
                  false, 1, 1, 4, 1),
              sig("sigma_0(8n+2; 0,1,0,-1)", 0, wv({0, 1, 0, -1}), false, 1, 1, 8, 2)};
    case 2:
      return {sig("sigma_1(2n+1; 0,2,-1,2)/2", 1, wv({0, 2, -1, 2}), false, 1, 2, 2, 1),
              sig("sigmac_1(2n+1; 0,1,-2,1)", 1, wv({0, 1, -2, 1}), true, 1, 1, 2, 1),
              sig("sigma_1(2n+1)", 1, wv({1}), false, 1, 1, 2, 1),
              sig("sigmac_1(2n+1)", 1, wv({1}), true, 1, 1, 2, 1)};
    case 3: {
      auto two_term = [](long n) -> Rational {
        const long m = 4 * n + 3;
        return (sigma_weighted(m, 2, wv({0, -4, 1, 4, 0, -4, -1, 4})) +
                4 * sigma_weighted_conj(m, 2, wv({0, 1, -4, -1, 0, 1, 4, -1}))) /
               64;
      };
      return {{"(sigma_2(4n+3; 0,-4,1,4,0,-4,-1,4) + 4*sigmac_2(4n+3; 0,1,-4,-1,0,1,4,-1))/64",
               two_term},
              sig("sigma_2(4n+3; 0,-1,0,1)/8", 2, wv({0, -1, 0, 1}), false, 1, 8, 4, 3)};
    }
    default:
      return {sig("sigma_3(2n+2; 7,0,8,0)/64", 3, wv({7, 0, 8, 0}), false, 1, 64, 2, 2),
              sig("sigmac_3(2n+2; 0,0,1,0)", 3, wv({0, 0, 1, 0}), true, 1, 1, 2, 2),
              sig("sigma_3(n+1; 7,8)/8", 3, wv({7, 8}), false, 1, 8, 1, 1),
              sig("sigmac_3(n+1; 0,1)", 3, wv({0, 1}), true, 1, 1, 1, 1)};
  }
}

}  // namespace

const std::vector<CountFormula>& count_formulas(TupleKind kind, int s) {
  check_args(s, 0);
  static const std::vector<CountFormula> tables[2][4] = {
      {make_formulas(TupleKind::squares, 1), make_formulas(TupleKind::squares, 2),
       make_formulas(TupleKind::squares, 3), make_formulas(TupleKind::squares, 4)},
      {make_formulas(TupleKind::triangles, 1), make_formulas(TupleKind::triangles, 2),
       make_formulas(TupleKind::triangles, 3), make_formulas(TupleKind::triangles, 4)}};
  return tables[kind == TupleKind::squares ? 0 : 1][s - 1];
}

}  // namespace qmf
