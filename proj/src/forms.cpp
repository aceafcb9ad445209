#include "qmf/forms.hpp"

#include "qmf/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qmf {

std::optional<SeriesDiff> first_difference(const Puiseux& a, const Puiseux& b) {
  common_series_disc(a, b);
  Rational pmin = rat_min(a.precision(), b.precision());
  auto ta = a.terms();
  auto tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    bool take_a = j == tb.size() || (i < ta.size() && ta[i].first < tb[j].first);
    bool take_b = i == ta.size() || (j < tb.size() && tb[j].first < ta[i].first);
    Rational e = take_a ? ta[i].first : tb[j].first;
    if (e >= pmin) break;
    QuadExt ca = take_b ? QuadExt(0) : ta[i++].second;
    QuadExt cb = take_a ? QuadExt(0) : tb[j++].second;
    if (ca != cb) return SeriesDiff{e, ca, cb};
  }
  return std::nullopt;
}

Puiseux eta_series(long delta, const Rational& prec) {
  if (delta <= 0) throw std::invalid_argument("eta_series: delta must be positive");
  Puiseux s(0, prec);
  Rational base = rat(delta, 24);
  for (long k = 0;; ++k) {
    // generalized pentagonal exponents k(3k-1)/2 and k(3k+1)/2
    Rational lo = base + rat(delta) * rat(k * (3 * k - 1), 2);
    Rational hi = base + rat(delta) * rat(k * (3 * k + 1), 2);
    if (lo >= prec && hi >= prec && k > 0) break;
    QuadExt sign(k % 2 == 0 ? 1 : -1);
    if (lo < prec) s.set_coeff(lo, sign);
    if (k > 0 && hi < prec) s.set_coeff(hi, sign);
  }
  return s;
}

Puiseux eta_product(const std::vector<std::pair<long, int>>& factors,
                    const QuadExt& scale, const Rational& prec) {
  Rational den_ord = 0;
  for (const auto& [delta, e] : factors)
    if (e < 0) den_ord += rat(delta * static_cast<long>(-e), 24);
  Rational work = prec + 2 * den_ord + 1;
  Puiseux num = Puiseux::constant(scale, work, scale.disc());
  Puiseux den = Puiseux::constant(QuadExt(1), work);
  for (const auto& [delta, e] : factors) {
    Puiseux f = rational_pow(eta_series(delta, work), rat(e < 0 ? -e : e));
    if (e < 0)
      den = mul(den, f);
    else
      num = mul(num, f);
  }
  return truncate(mul(num, invert(den)), prec);
}

Puiseux theta_sum_1d(const Rational& shift, bool alternating, const Rational& prec) {
  Puiseux s(0, prec);
  auto accumulate = [&](long m) {
    Rational x = m + shift;
    Rational e = x * x;
    if (e >= prec) return false;
    QuadExt v((alternating && (m % 2 != 0)) ? -1 : 1);
    s.set_coeff(e, s.coeff(e) + v);
    return true;
  };
  for (long k = 0;; ++k) {
    bool in_range = accumulate(k);
    if (k > 0) in_range = accumulate(-k) || in_range;
    if (!in_range && k > 0) break;
  }
  return s;
}

namespace {

// Smallest loop bound M with Q(x, *) >= prec for all |x| > M, using the
// positive-definite lower bound Q(x, y) >= (4ac - b^2) x^2 / (4c).
long theta_bound(const Rational& quad_disc, const Rational& opposite,
                 const Rational& shift, const Rational& prec) {
  Rational need = 4 * opposite * prec / quad_disc;  // x^2 must reach this
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), rat_ceil(need).get_mpz_t());
  long slack = 2 + static_cast<long>(mpz_class(rat_ceil(shift < 0 ? -shift : shift)).get_si());
  return root.get_si() + slack;
}

const QuadExt kZeta3(rat(-1, 2), rat(1, 2), -3);
const QuadExt kZeta3Sq(rat(-1, 2), rat(-1, 2), -3);

}  // namespace

Puiseux theta_sum_2d(const Rational& a, const Rational& b, const Rational& c,
                     const Rational& s1, const Rational& s2, ThetaWeight weight,
                     const Rational& prec) {
  Rational qd = 4 * a * c - b * b;
  if (a <= 0 || c <= 0 || qd <= 0)
    throw std::invalid_argument("theta_sum_2d: form is not positive definite");
  int disc = weight == ThetaWeight::kZeta3DiffNM ? -3 : 0;
  Puiseux s(disc, prec);
  long bn = theta_bound(qd, c, s1, prec);
  long bm = theta_bound(qd, a, s2, prec);
  for (long n = -bn; n <= bn; ++n) {
    Rational x = n + s1;
    for (long m = -bm; m <= bm; ++m) {
      Rational y = m + s2;
      Rational e = a * x * x + b * x * y + c * y * y;
      if (e >= prec) continue;
      QuadExt w(1);
      if (weight == ThetaWeight::kZeta3DiffNM) {
        long r = (n - m) % 3;
        if (r < 0) r += 3;
        w = r == 0 ? QuadExt(1) : (r == 1 ? kZeta3 : kZeta3Sq);
      }
      s.set_coeff(e, s.coeff(e) + w);
    }
  }
  return s;
}

Puiseux divisor_series(long k, const WeightVector& w, bool conj, const Rational& c0,
                       const QuadExt& scale, long den, const Rational& prec) {
  Puiseux s(scale.disc(), prec);
  if (c0 != 0) s.set_coeff(rat(0), QuadExt(c0));
  for (long n = 1; rat(n, den) < prec; ++n) {
    Rational v = conj ? sigma_weighted_conj(n, k, w) : sigma_weighted(n, k, w);
    if (v == 0) continue;
    s.set_coeff(rat(n, den), scale * QuadExt(v));
  }
  return s;
}

Puiseux eisenstein_kernel(long k, const WeightVector& psi, const WeightVector& phi,
                          const Rational& prec) {
  Puiseux s(0, prec);
  std::map<long, Rational> acc;
  long bound = static_cast<long>(mpz_class(rat_ceil(prec)).get_si());
  for (long e = 1; e < bound; ++e) {
    Rational pe = char_at(psi, e);
    if (pe == 0) continue;
    for (long d = 1; e * d < bound; ++d) {
      Rational pd = char_at(phi, d);
      if (pd == 0) continue;
      acc[e * d] += pe * pd * rat_pow(rat(d), k - 1);
    }
  }
  for (const auto& [n, v] : acc)
    if (v != 0 && rat(n) < prec) s.set_coeff(rat(n), QuadExt(v));
  return s;
}

Puiseux eisenstein_series(long k, const WeightVector& psi, const WeightVector& phi,
                          const Rational& prec) {
  Puiseux kern = eisenstein_kernel(k, psi, phi, prec);
  if (psi.size() == 1) {
    Rational lv = l_value(static_cast<unsigned long>(k), phi);
    Puiseux s = scalar_mul(QuadExt(2 / lv), kern);
    return add(Puiseux::constant(QuadExt(1), prec), s);
  }
  return scalar_mul(QuadExt(2), kern);
}

Puiseux eisenstein_level_one(long k, const Rational& prec) {
  Rational coeff;
  switch (k) {
    case 2: coeff = rat(-24); break;
    case 4: coeff = rat(240); break;
    case 6: coeff = rat(-504); break;
    case 8: coeff = rat(480); break;
    default: throw std::invalid_argument("eisenstein_level_one: k not in {2,4,6,8}");
  }
  return divisor_series(k - 1, char_trivial(), false, 1, QuadExt(coeff), 1, prec);
}

namespace {

using Builder = std::function<Puiseux(const Rational&)>;

struct Route {
  std::string label;
  Builder build;
};

struct FormEntry {
  FormInfo info;
  std::vector<Route> routes;
};

using Table = std::map<std::string, FormEntry>;

Rational R(long n, long d = 1) { return rat(n, d); }

WeightVector wv(std::initializer_list<long> xs) {
  WeightVector w;
  w.reserve(xs.size());
  for (long x : xs) w.emplace_back(x);
  return w;
}

Puiseux to_rational_series(const Puiseux& a) {
  Puiseux r(0, a.precision());
  for (const auto& [e, c] : a.terms()) {
    if (c.rad() != 0)
      throw FieldMismatchError("series has irrational coefficients");
    r.set_coeff(e, QuadExt(c.re()));
  }
  return r;
}

// q d/dq of x divided by x, padded past the inversion loss.
Builder log_deriv_of(const std::string& name, const Rational& ord) {
  return [name, ord](const Rational& prec) {
    Puiseux x = eval_form(name, prec + 2 * ord + 1);
    return truncate(mul(derive(x), invert(x)), prec);
  };
}

Builder form_pow(const std::string& name, const Rational& e) {
  return [name, e](const Rational& prec) {
    return truncate(rational_pow(eval_form(name, prec + 1), e), prec);
  };
}

Builder form_alias(const std::string& name) {
  return [name](const Rational& prec) { return eval_form(name, prec); };
}

// (s/u) [ m^2 E2(q^m) - n^2 E2(q^n) ] with the convention E2(q^0) := 0 gives
// every weight-2 combination in use; spell the four instances directly.
Puiseux e2_combination(const Rational& s, long cm, long m, long cn, long n,
                       const Rational& prec) {
  Puiseux e2 = eisenstein_level_one(2, prec);
  Puiseux lhs = scalar_mul(QuadExt(rat(cm)), substitute_power(e2, R(m)));
  Puiseux rhs = scalar_mul(QuadExt(rat(cn)), n == 1 ? e2 : substitute_power(e2, R(n)));
  return scalar_mul(QuadExt(s), add(lhs, rhs));
}

void add_form(Table& t, const std::string& name, int disc, Rational weight,
              Rational order, std::string group, std::vector<Route> routes) {
  FormEntry e;
  e.info.name = name;
  e.info.disc = disc;
  e.info.weight = std::move(weight);
  e.info.order = std::move(order);
  e.info.group = std::move(group);
  for (const auto& r : routes) e.info.route_labels.push_back(r.label);
  e.routes = std::move(routes);
  t.emplace(name, std::move(e));
}

void register_scaffolding(Table& t) {
  for (long d : {1L, 2L, 3L, 4L}) {
    add_form(t, "eta." + std::to_string(d), 0, R(1, 2), R(d, 24), "eta multiplier",
             {{"pentagonal series", [d](const Rational& p) { return eta_series(d, p); }}});
  }

  add_form(t, "Delta", 0, R(12), R(1), "Gamma(1)",
           {{"eta power", [](const Rational& p) { return eta_product({{1, 24}}, QuadExt(1), p); }},
            {"(E4^3 - E6^2)/1728",
             [](const Rational& p) {
               Puiseux e4 = eisenstein_level_one(4, p);
               Puiseux e6 = eisenstein_level_one(6, p);
               return scalar_mul(QuadExt(R(1, 1728)),
                                 sub(rational_pow(e4, R(3)), rational_pow(e6, R(2))));
             }}});

  add_form(t, "theta2", 0, R(1, 2), R(1, 4), "Gamma0(4)",
           {{"eta quotient", [](const Rational& p) { return eta_product({{4, 2}, {2, -1}}, QuadExt(2), p); }},
            {"shifted square sum",
             [](const Rational& p) { return theta_sum_1d(R(1, 2), false, p); }}});
  add_form(t, "theta3", 0, R(1, 2), R(0), "Gamma0(4)",
           {{"eta quotient",
             [](const Rational& p) { return eta_product({{2, 5}, {1, -2}, {4, -2}}, QuadExt(1), p); }},
            {"square sum", [](const Rational& p) { return theta_sum_1d(R(0), false, p); }}});
  add_form(t, "theta4", 0, R(1, 2), R(0), "Gamma0(4)",
           {{"eta quotient", [](const Rational& p) { return eta_product({{1, 2}, {2, -1}}, QuadExt(1), p); }},
            {"alternating square sum",
             [](const Rational& p) { return theta_sum_1d(R(0), true, p); }}});

  add_form(t, "E2", 0, R(2), R(0), "Gamma(1)",
           {{"divisor sum", [](const Rational& p) { return eisenstein_level_one(2, p); }},
            {"log derivative of Delta", log_deriv_of("Delta", R(1))}});
  for (long k : {4L, 6L, 8L}) {
    add_form(t, "E" + std::to_string(k), 0, R(k), R(0), "Gamma(1)",
             {{"divisor sum", [k](const Rational& p) { return eisenstein_level_one(k, p); }},
              {"normalized Eisenstein kernel",
               [k](const Rational& p) {
                 return eisenstein_series(k, char_trivial(), char_trivial(), p);
               }}});
  }
}

void register_character_eisenstein(Table& t) {
  struct Spec {
    const char* name;
    long k;
    bool psi_char;  // true: E_k^{chi,1}; false: E_k^{1,chi}
    WeightVector chi;
    long level;
    Rational divisor_scale;  // explicit Table-1 constant for the divisor route
  };
  const std::vector<Spec> specs = {
      {"E1.1.m4.4", 1, false, char_m4(), 4, R(4)},
      {"E3.1.m4.4", 3, false, char_m4(), 4, R(-4)},
      {"E3.m4.1.4", 3, true, char_m4(), 4, R(2)},
      {"E1.1.m3.3", 1, false, char_m3(), 3, R(6)},
      {"E3.1.m3.3", 3, false, char_m3(), 3, R(-9)},
      {"E3.m3.1.3", 3, true, char_m3(), 3, R(2)},
      {"E5.1.m3.3", 5, false, char_m3(), 3, R(3)},
      {"E5.m3.1.3", 5, true, char_m3(), 3, R(2)},
  };
  for (const auto& sp : specs) {
    WeightVector chi = sp.chi;
    long k = sp.k;
    bool psi_char = sp.psi_char;
    Rational scale = sp.divisor_scale;
    Route kernel{"normalized Eisenstein kernel", [k, psi_char, chi](const Rational& p) {
                   return psi_char ? eisenstein_series(k, chi, char_trivial(), p)
                                   : eisenstein_series(k, char_trivial(), chi, p);
                 }};
    Route divisor{psi_char ? "codivisor sum" : "divisor sum",
                  [k, psi_char, chi, scale](const Rational& p) {
                    return divisor_series(k - 1, chi, psi_char,
                                          psi_char ? R(0) : R(1), QuadExt(scale), 1, p);
                  }};
    add_form(t, sp.name, 0, R(sp.k), psi_char ? R(1) : R(0),
             "Gamma0(" + std::to_string(sp.level) + ")", {kernel, divisor});
  }
}

void register_core_forms(Table& t) {
  add_form(t, "B4", 0, R(1), R(0), "Gamma0(2)",
           {{"eta quotient", [](const Rational& p) { return eta_product({{1, 4}, {2, -2}}, QuadExt(1), p); }},
            {"divisor sum mod 8",
             [](const Rational& p) {
               return divisor_series(0, wv({0, 1, -2, -1, 0, 1, 2, -1}), false, R(1),
                                     QuadExt(-4), 1, p);
             }}});

  add_form(t, "C4", 2, R(1), R(1, 4), "Gamma0(2)",
           {{"eta quotient",
             [](const Rational& p) { return eta_product({{2, 4}, {1, -2}}, QuadExt(0, 2, 2), p); }},
            {"theta product",
             [](const Rational& p) {
               return scalar_mul(QuadExt(0, 1, 2),
                                 mul(eval_form("theta2", p), eval_form("theta3", p)));
             }},
            {"rescaled level-8 companion",
             [](const Rational& p) {
               Puiseux c2 = eval_form("C2", 2 * p);
               return scalar_mul(QuadExt(0, R(1, 2), 2), substitute_power(c2, R(1, 2)));
             }},
            {"divisor sum mod 8 on the quarter grid",
             [](const Rational& p) {
               return divisor_series(0, wv({0, 1, -1, -1, 0, 1, 1, -1}), false, R(0),
                                     QuadExt(0, 2, 2), 4, p);
             }}});

  add_form(t, "B2", 0, R(1), R(0), "Gamma0(4)",
           {{"eta quotient", [](const Rational& p) { return eta_product({{1, 4}, {2, -2}}, QuadExt(1), p); }},
            {"theta4 squared", form_pow("theta4", R(2))},
            {"level-2 companion", form_alias("B4")}});

  add_form(t, "C2", 0, R(1), R(1, 2), "Gamma0(4)",
           {{"eta quotient", [](const Rational& p) { return eta_product({{4, 4}, {2, -2}}, QuadExt(4), p); }},
            {"theta2 squared", form_pow("theta2", R(2))},
            {"divisor sum mod 8 on the half grid",
             [](const Rational& p) {
               return divisor_series(0, wv({0, 1, -1, -1, 0, 1, 1, -1}), false, R(0),
                                     QuadExt(4), 2, p);
             }}});

  add_form(t, "A2", 0, R(1), R(0), "Gamma0(4)",
           {{"eta quotient",
             [](const Rational& p) { return eta_product({{2, 10}, {1, -4}, {4, -4}}, QuadExt(1), p); }},
            {"theta3 squared", form_pow("theta3", R(2))},
            {"square root of the eta resolvent",
             [](const Rational& p) {
               Rational w = p + 2;
               Puiseux s = add(eta_product({{4, 8}}, QuadExt(16), w), eta_product({{1, 8}}, QuadExt(1), w));
               return truncate(mul(rational_pow(s, R(1, 2)),
                                   invert(eta_product({{2, 2}}, QuadExt(1), w))),
                               p);
             }},
            {"divisor sum with chi_-4",
             [](const Rational& p) {
               return divisor_series(0, char_m4(), false, R(1), QuadExt(4), 1, p);
             }},
            {"odd-character Eisenstein series", form_alias("E1.1.m4.4")}});

  add_form(t, "A4", 0, R(1), R(0), "Gamma0(2)",
           {{"quartic root of the eta resolvent",
             [](const Rational& p) {
               Rational w = p + 3;
               Puiseux s = add(eta_product({{2, 24}}, QuadExt(64), w), eta_product({{1, 24}}, QuadExt(1), w));
               return truncate(mul(rational_pow(s, R(1, 4)),
                                   invert(eta_product({{1, 2}, {2, 2}}, QuadExt(1), w))),
                               p);
             }},
            {"square root of the theta form",
             [](const Rational& p) {
               Puiseux s = add(form_pow("theta2", R(4))(p), form_pow("theta3", R(4))(p));
               return rational_pow(s, R(1, 2));
             }}});

  add_form(t, "A3", 0, R(1), R(0), "Gamma0(3)",
           {{"cube root of the eta resolvent",
             [](const Rational& p) {
               Rational w = p + 2;
               Puiseux s = add(eta_product({{3, 12}}, QuadExt(27), w), eta_product({{1, 12}}, QuadExt(1), w));
               return truncate(mul(rational_pow(s, R(1, 3)),
                                   invert(eta_product({{1, 1}, {3, 1}}, QuadExt(1), w))),
                               p);
             }},
            {"hexagonal lattice sum",
             [](const Rational& p) {
               return theta_sum_2d(R(1), R(1), R(1), R(0), R(0), ThetaWeight::kUnit, p);
             }},
            {"theta pairing at levels 1 and 3",
             [](const Rational& p) {
               Puiseux t3 = eval_form("theta3", p);
               Puiseux t2 = eval_form("theta2", p);
               return add(mul(t3, substitute_power(t3, R(3))),
                          mul(t2, substitute_power(t2, R(3))));
             }},
            {"divisor sum with chi_-3",
             [](const Rational& p) {
               return divisor_series(0, char_m3(), false, R(1), QuadExt(6), 1, p);
             }},
            {"odd-character Eisenstein series", form_alias("E1.1.m3.3")}});

  add_form(t, "B3", 0, R(1), R(0), "Gamma0(3)",
           {{"eta quotient", [](const Rational& p) { return eta_product({{1, 3}, {3, -1}}, QuadExt(1), p); }},
            {"zeta3-weighted hexagonal sum",
             [](const Rational& p) {
               return to_rational_series(
                   theta_sum_2d(R(1), R(1), R(1), R(0), R(0), ThetaWeight::kZeta3DiffNM, p));
             }},
            {"divisor sum mod 9",
             [](const Rational& p) {
               return divisor_series(0, wv({0, 1, -1, -3, 1, -1, 3, 1, -1}), false, R(1),
                                     QuadExt(-3), 1, p);
             }}});

  add_form(t, "C3", 0, R(1), R(1, 3), "Gamma0(3)",
           {{"eta quotient", [](const Rational& p) { return eta_product({{3, 3}, {1, -1}}, QuadExt(3), p); }},
            {"shifted hexagonal sum",
             [](const Rational& p) {
               return theta_sum_2d(R(1), R(1), R(1), R(1, 3), R(1, 3), ThetaWeight::kUnit, p);
             }},
            {"divisor sum mod 9 on the third grid",
             [](const Rational& p) {
               return divisor_series(0, wv({0, 1, -1, -1, 1, -1, 1, 1, -1}), false, R(0),
                                     QuadExt(3), 3, p);
             }}});
}

void register_hauptmoduls(Table& t) {
  add_form(t, "t2", 0, R(0), R(1), "Gamma0(2)",
           {{"eta quotient",
             [](const Rational& p) { return eta_product({{2, 24}, {1, -24}}, QuadExt(4096), p); }},
            {"cusp quotient of quartic powers",
             [](const Rational& p) {
               Rational w = p + 1;
               return truncate(mul(scalar_mul(QuadExt(64), eval_form("Gamma0.2.Crho", w)),
                                   invert(eval_form("Gamma0.2.Brho", w))),
                               p);
             }}});
  add_form(t, "t3", 0, R(0), R(1), "Gamma0(3)",
           {{"eta quotient",
             [](const Rational& p) { return eta_product({{3, 12}, {1, -12}}, QuadExt(729), p); }},
            {"cusp quotient of cubic powers",
             [](const Rational& p) {
               Rational w = p + 1;
               return truncate(mul(scalar_mul(QuadExt(27), eval_form("Gamma0.3.Crho", w)),
                                   invert(eval_form("Gamma0.3.Brho", w))),
                               p);
             }}});
  add_form(t, "t4", 0, R(0), R(1), "Gamma0(4)",
           {{"eta quotient",
             [](const Rational& p) { return eta_product({{4, 8}, {1, -8}}, QuadExt(256), p); }},
            {"cusp quotient of squares",
             [](const Rational& p) {
               Rational w = p + 1;
               return truncate(mul(scalar_mul(QuadExt(16), eval_form("Gamma0.4.Crho", w)),
                                   invert(eval_form("Gamma0.4.Brho", w))),
                               p);
             }}});

  add_form(t, "j", 0, R(0), R(-1), "Gamma(1)",
           {{"E4 cubed over the discriminant",
             [](const Rational& p) {
               Rational w = p + 3;
               Puiseux a = eval_form("Gamma1.Arho", w);
               return truncate(mul(scalar_mul(QuadExt(1728), a),
                                   invert(sub(a, eval_form("Gamma1.Brho", w)))),
                               p);
             }},
            {"E4 cubed over the eta power",
             [](const Rational& p) {
               Rational w = p + 3;
               return truncate(mul(eval_form("Gamma1.Arho", w),
                                   invert(eta_product({{1, 24}}, QuadExt(1), w))),
                               p);
             }}});
}

void register_elliptic_family(Table& t) {
  add_form(t, "Khat", 0, R(1), R(0), "Gamma0(4)",
           {{"theta3 squared", form_pow("theta3", R(2))},
            {"level-4 companion", form_alias("A2")}});

  add_form(t, "KhatEhat", 0, R(2), R(0), "Gamma0(4)",
           {{"E2 combination",
             [](const Rational& p) { return e2_combination(R(1, 3), 4, 4, -1, 2, p); }},
            {"Lambert series",
             [](const Rational& p) {
               Puiseux s(0, p);
               s.set_coeff(R(0), QuadExt(1));
               long bound = static_cast<long>(mpz_class(rat_ceil(p)).get_si());
               std::map<long, Rational> acc;
               for (long n = 1; 2 * n < bound; ++n)
                 for (long m = 1; 2 * n * m < bound; ++m)
                   acc[2 * n * m] += rat(m % 2 == 1 ? 8 : -8) * rat(m);
               for (const auto& [e, v] : acc)
                 if (v != 0 && rat(e) < p) s.set_coeff(rat(e), QuadExt(v));
               return s;
             }},
            {"log derivative of theta2^4",
             [](const Rational& p) {
               Puiseux x = rational_pow(eval_form("theta2", p + 3), R(4));
               return truncate(mul(derive(x), invert(x)), p);
             }},
            {"divisor sum mod 4",
             [](const Rational& p) {
               return divisor_series(1, wv({-1, 0, 1, 0}), false, R(1), QuadExt(4), 1, p);
             }}});

  add_form(t, "Ehat", 0, R(1), R(0), "Gamma0(4)",
           {{"quotient by Khat",
             [](const Rational& p) {
               return mul(eval_form("KhatEhat", p), invert(eval_form("Khat", p)));
             }}});

  add_form(t, "KhatGhat", 0, R(2), R(1), "Gamma0(4)",
           {{"log derivative of theta3^4",
             [](const Rational& p) {
               Puiseux x = rational_pow(eval_form("theta3", p + 1), R(4));
               return truncate(mul(derive(x), invert(x)), p);
             }},
            {"log derivative of A2^2", log_deriv_of("Gamma0.4.Arho", R(0))}});

  add_form(t, "KhatIhat", 0, R(2), R(1), "Gamma0(4)",
           {{"log derivative of theta4^4",
             [](const Rational& p) {
               Puiseux x = rational_pow(eval_form("theta4", p + 1), R(4));
               return truncate(mul(derive(x), invert(x)), p);
             }},
            {"log derivative of B2^2", log_deriv_of("Gamma0.4.Brho", R(0))}});
}

void register_e_forms(Table& t) {
  add_form(t, "Er.4", 0, R(2), R(0), "Gamma0(2)",
           {{"E2 combination",
             [](const Rational& p) { return e2_combination(R(1, 3), 4, 2, -1, 1, p); }},
            {"divisor sum mod 2",
             [](const Rational& p) {
               return divisor_series(1, wv({-1, 1}), false, R(1), QuadExt(8), 1, p);
             }},
            {"codivisor sum mod 2",
             [](const Rational& p) {
               return divisor_series(1, wv({-3, 1}), true, R(1), QuadExt(8), 1, p);
             }},
            {"log derivative of C4^4", log_deriv_of("Gamma0.2.Crho", R(1))}});

  add_form(t, "Er.3", 0, R(2), R(0), "Gamma0(3)",
           {{"E2 combination",
             [](const Rational& p) { return e2_combination(R(1, 8), 9, 3, -1, 1, p); }},
            {"divisor sum mod 3",
             [](const Rational& p) {
               return divisor_series(1, wv({-2, 1, 1}), false, R(1), QuadExt(3), 1, p);
             }},
            {"codivisor sum mod 3",
             [](const Rational& p) {
               return divisor_series(1, wv({-8, 1, 1}), true, R(1), QuadExt(3), 1, p);
             }},
            {"log derivative of C3^3", log_deriv_of("Gamma0.3.Crho", R(1))}});

  add_form(t, "Er.2", 0, R(2), R(0), "Gamma0(4)",
           {{"E2 combination",
             [](const Rational& p) { return e2_combination(R(1, 3), 4, 4, -1, 2, p); }},
            {"divisor sum mod 4",
             [](const Rational& p) {
               return divisor_series(1, wv({-1, 0, 1, 0}), false, R(1), QuadExt(4), 1, p);
             }},
            {"codivisor sum mod 4",
             [](const Rational& p) {
               return divisor_series(1, wv({-3, 0, 1, 0}), true, R(1), QuadExt(8), 1, p);
             }},
            {"log derivative of C2^2", log_deriv_of("Gamma0.4.Crho", R(1))},
            {"level doubling",
             [](const Rational& p) {
               return substitute_power(eval_form("Er.4", p / 2 + 1), R(2));
             }}});

  add_form(t, "Er.12", 0, R(2), R(0), "Gamma(1)",
           {{"level-one E2", form_alias("E2")}});

  add_form(t, "Er.8", 0, R(2), R(0), "Gamma0+(2)",
           {{"E2 combination",
             [](const Rational& p) { return e2_combination(R(1, 3), 2, 2, 1, 1, p); }},
            {"divisor sum mod 2",
             [](const Rational& p) {
               return divisor_series(1, wv({2, 1}), false, R(1), QuadExt(-8), 1, p);
             }},
            {"codivisor sum mod 2",
             [](const Rational& p) {
               return divisor_series(1, wv({3, 1}), true, R(1), QuadExt(-8), 1, p);
             }},
            {"log derivative of the cusp component", log_deriv_of("Gamma0p.2.Crho", R(1))}});

  add_form(t, "Er.6", 0, R(2), R(0), "Gamma0+(3)",
           {{"E2 combination",
             [](const Rational& p) { return e2_combination(R(1, 4), 3, 3, 1, 1, p); }},
            {"divisor sum mod 3",
             [](const Rational& p) {
               return divisor_series(1, wv({2, 1, 1}), false, R(1), QuadExt(-6), 1, p);
             }},
            {"codivisor sum mod 3",
             [](const Rational& p) {
               return divisor_series(1, wv({4, 1, 1}), true, R(1), QuadExt(-6), 1, p);
             }},
            {"log derivative of the cusp component", log_deriv_of("Gamma0p.3.Crho", R(1))}});
}

void register_triples(Table& t) {
  // --- Gamma0(2), rho = 4 ---
  add_form(t, "Gamma0.2.Arho", 0, R(4), R(0), "Gamma0(2)",
           {{"eta resolvent",
             [](const Rational& p) {
               Rational w = p + 3;
               Puiseux s = add(eta_product({{2, 24}}, QuadExt(64), w), eta_product({{1, 24}}, QuadExt(1), w));
               return truncate(mul(s, invert(eta_product({{1, 8}, {2, 8}}, QuadExt(1), w))), p);
             }},
            {"theta form squared",
             [](const Rational& p) {
               Puiseux s = add(form_pow("theta2", R(4))(p), form_pow("theta3", R(4))(p));
               return rational_pow(s, R(2));
             }},
            {"divisor sum mod 2",
             [](const Rational& p) {
               return divisor_series(3, wv({3, 2}), false, R(1), QuadExt(24), 1, p);
             }}});
  add_form(t, "Gamma0.2.Brho", 0, R(4), R(0), "Gamma0(2)",
           {{"eta quotient", [](const Rational& p) { return eta_product({{1, 16}, {2, -8}}, QuadExt(1), p); }},
            {"theta4 eighth power", form_pow("theta4", R(8))},
            {"divisor sum mod 2",
             [](const Rational& p) {
               return divisor_series(3, wv({-1, 1}), false, R(1), QuadExt(-16), 1, p);
             }}});
  add_form(t, "Gamma0.2.Crho", 0, R(4), R(1), "Gamma0(2)",
           {{"eta quotient", [](const Rational& p) { return eta_product({{2, 16}, {1, -8}}, QuadExt(64), p); }},
            {"theta product fourth power",
             [](const Rational& p) {
               return scalar_mul(QuadExt(4),
                                 mul(form_pow("theta2", R(4))(p), form_pow("theta3", R(4))(p)));
             }},
            {"codivisor sum mod 2",
             [](const Rational& p) {
               return divisor_series(3, wv({0, 1}), true, R(0), QuadExt(64), 1, p);
             }}});

  // --- Gamma0(3), rho = 3 ---
  add_form(t, "Gamma0.3.Arho", 0, R(3), R(0), "Gamma0(3)",
           {{"eta resolvent",
             [](const Rational& p) {
               Rational w = p + 2;
               Puiseux s = add(eta_product({{3, 12}}, QuadExt(27), w), eta_product({{1, 12}}, QuadExt(1), w));
               return truncate(mul(s, invert(eta_product({{1, 3}, {3, 3}}, QuadExt(1), w))), p);
             }},
            {"odd Eisenstein pair",
             [](const Rational& p) {
               return add(eval_form("E3.1.m3.3", p),
                          scalar_mul(QuadExt(R(27, 2)), eval_form("E3.m3.1.3", p)));
             }}});
  add_form(t, "Gamma0.3.Brho", 0, R(3), R(0), "Gamma0(3)",
           {{"eta quotient", [](const Rational& p) { return eta_product({{1, 9}, {3, -3}}, QuadExt(1), p); }},
            {"odd-character Eisenstein series", form_alias("E3.1.m3.3")}});
  add_form(t, "Gamma0.3.Crho", 0, R(3), R(1), "Gamma0(3)",
           {{"eta quotient", [](const Rational& p) { return eta_product({{3, 9}, {1, -3}}, QuadExt(27), p); }},
            {"codivisor sum mod 3",
             [](const Rational& p) {
               return divisor_series(2, char_m3(), true, R(0), QuadExt(27), 1, p);
             }}});

  // --- Gamma0(4), rho = 2 ---
  add_form(t, "Gamma0.4.Arho", 0, R(2), R(0), "Gamma0(4)",
           {{"square of A2", form_pow("A2", R(2))},
            {"theta3 fourth power", form_pow("theta3", R(4))},
            {"divisor sum mod 4",
             [](const Rational& p) {
               return divisor_series(1, wv({0, 1, 1, 1}), false, R(1), QuadExt(8), 1, p);
             }},
            {"E2 combination",
             [](const Rational& p) { return e2_combination(R(1, 3), 4, 4, -1, 1, p); }}});
  add_form(t, "Gamma0.4.Brho", 0, R(2), R(0), "Gamma0(4)",
           {{"eta quotient", [](const Rational& p) { return eta_product({{1, 8}, {2, -4}}, QuadExt(1), p); }},
            {"theta4 fourth power", form_pow("theta4", R(4))},
            {"divisor sum mod 4",
             [](const Rational& p) {
               return divisor_series(1, wv({0, 1, -2, 1}), false, R(1), QuadExt(-8), 1, p);
             }}});
  add_form(t, "Gamma0.4.Crho", 0, R(2), R(1), "Gamma0(4)",
           {{"eta quotient", [](const Rational& p) { return eta_product({{4, 8}, {2, -4}}, QuadExt(16), p); }},
            {"theta2 fourth power", form_pow("theta2", R(4))},
            {"divisor sum mod 4",
             [](const Rational& p) {
               return divisor_series(1, wv({0, 2, -1, 2}), false, R(0), QuadExt(8), 1, p);
             }}});

  // --- Gamma(1), rho = 12 ---
  add_form(t, "Gamma1.Arho", 0, R(12), R(0), "Gamma(1)",
           {{"cube of E4", form_pow("E4", R(3))},
            {"discriminant shift of E6^2",
             [](const Rational& p) {
               return add(form_pow("E6", R(2))(p),
                          scalar_mul(QuadExt(1728), eval_form("Delta", p)));
             }}});
  add_form(t, "Gamma1.Brho", 0, R(12), R(0), "Gamma(1)",
           {{"square of E6", form_pow("E6", R(2))},
            {"discriminant shift of E4^3",
             [](const Rational& p) {
               return sub(form_pow("E4", R(3))(p),
                          scalar_mul(QuadExt(1728), eval_form("Delta", p)));
             }}});
  add_form(t, "Gamma1.Crho", 0, R(12), R(1), "Gamma(1)",
           {{"scaled eta power",
             [](const Rational& p) { return eta_product({{1, 24}}, QuadExt(1728), p); }},
            {"difference of cusp powers",
             [](const Rational& p) {
               return sub(form_pow("E4", R(3))(p), form_pow("E6", R(2))(p));
             }}});

  // --- Gamma0+(2), rho = 8 ---
  add_form(t, "Gamma0p.2.Arho", 0, R(8), R(0), "Gamma0+(2)",
           {{"square of the level-2 resolvent", form_pow("Gamma0.2.Arho", R(2))}});
  add_form(t, "Gamma0p.2.Brho", 0, R(8), R(0), "Gamma0+(2)",
           {{"squared difference",
             [](const Rational& p) {
               Puiseux x = sub(eval_form("Gamma0.2.Brho", p), eval_form("Gamma0.2.Crho", p));
               return rational_pow(x, R(2));
             }},
            {"resolvent minus cross term",
             [](const Rational& p) {
               return sub(eval_form("Gamma0p.2.Arho", p),
                          scalar_mul(QuadExt(4), mul(eval_form("Gamma0.2.Brho", p),
                                                     eval_form("Gamma0.2.Crho", p))));
             }}});
  add_form(t, "Gamma0p.2.Crho", 0, R(8), R(1), "Gamma0+(2)",
           {{"cross term",
             [](const Rational& p) {
               return scalar_mul(QuadExt(4), mul(eval_form("Gamma0.2.Brho", p),
                                                 eval_form("Gamma0.2.Crho", p)));
             }},
            {"theta product",
             [](const Rational& p) {
               Puiseux x = mul(form_pow("theta2", R(4))(p), form_pow("theta3", R(4))(p));
               return scalar_mul(QuadExt(16), mul(x, form_pow("theta4", R(8))(p)));
             }}});

  // --- Gamma0+(3), rho = 6 ---
  add_form(t, "Gamma0p.3.Arho", 0, R(6), R(0), "Gamma0+(3)",
           {{"square of the level-3 resolvent", form_pow("Gamma0.3.Arho", R(2))}});
  add_form(t, "Gamma0p.3.Brho", 0, R(6), R(0), "Gamma0+(3)",
           {{"squared difference",
             [](const Rational& p) {
               Puiseux x = sub(eval_form("Gamma0.3.Brho", p), eval_form("Gamma0.3.Crho", p));
               return rational_pow(x, R(2));
             }},
            {"resolvent minus cross term",
             [](const Rational& p) {
               return sub(eval_form("Gamma0p.3.Arho", p),
                          scalar_mul(QuadExt(4), mul(eval_form("Gamma0.3.Brho", p),
                                                     eval_form("Gamma0.3.Crho", p))));
             }}});
  add_form(t, "Gamma0p.3.Crho", 0, R(6), R(1), "Gamma0+(3)",
           {{"cross term",
             [](const Rational& p) {
               return scalar_mul(QuadExt(4), mul(eval_form("Gamma0.3.Brho", p),
                                                 eval_form("Gamma0.3.Crho", p)));
             }},
            {"scaled eta product",
             [](const Rational& p) { return eta_product({{1, 6}, {3, 6}}, QuadExt(108), p); }}});

  // --- index-2 subgroup of Gamma(1), rho = 6, width 2 ---
  add_form(t, "2ap.Arho", -3, R(6), R(0), "index-2 in Gamma(1)",
           {{"sextic component",
             [](const Rational& p) {
               return add(eval_form("E6", p),
                          eta_product({{1, 12}}, QuadExt(0, 24, -3), p));
             }}});
  add_form(t, "2ap.Brho", -3, R(6), R(0), "index-2 in Gamma(1)",
           {{"sextic component",
             [](const Rational& p) {
               return sub(eval_form("E6", p),
                          eta_product({{1, 12}}, QuadExt(0, 24, -3), p));
             }}});
  add_form(t, "2ap.Crho", -3, R(6), R(1, 2), "index-2 in Gamma(1)",
           {{"scaled eta power",
             [](const Rational& p) { return eta_product({{1, 12}}, QuadExt(0, 48, -3), p); }}});
  add_form(t, "2ap.Asq", -3, R(2), R(0), "index-2 in Gamma(1)",
           {{"cube root of the sextic component", form_pow("2ap.Arho", R(1, 3))},
            {"level-8 half-grid combination",
             [](const Rational& p) {
               Rational w = 2 * p + 1;
               Puiseux x = sub(eval_form("Gamma0.4.Brho", w),
                               scalar_mul(kZeta3Sq, eval_form("Gamma0.4.Crho", w)));
               return truncate(substitute_power(x, R(1, 2)), p);
             }}});
  add_form(t, "2ap.Bsq", -3, R(2), R(0), "index-2 in Gamma(1)",
           {{"cube root of the sextic component", form_pow("2ap.Brho", R(1, 3))},
            {"level-8 half-grid combination",
             [](const Rational& p) {
               Rational w = 2 * p + 1;
               Puiseux x = sub(eval_form("Gamma0.4.Brho", w),
                               scalar_mul(kZeta3, eval_form("Gamma0.4.Crho", w)));
               return truncate(substitute_power(x, R(1, 2)), p);
             }}});

  // --- index-2 subgroup of Gamma0+(2), rho = 4, width 2 ---
  add_form(t, "4ap.Arho", -1, R(4), R(0), "index-2 in Gamma0+(2)",
           {{"square of the quadratic component",
             [](const Rational& p) {
               Puiseux x = add(eval_form("Gamma0.4.Brho", p),
                               eta_product({{2, 8}, {1, -4}}, QuadExt(0, 8, -1), p));
               return rational_pow(x, R(2));
             }},
            {"fourth power of the theta combination",
             [](const Rational& p) {
               Puiseux x = add(form_pow("theta3", R(2))(p),
                               scalar_mul(QuadExt(0, 1, -1), form_pow("theta2", R(2))(p)));
               return rational_pow(x, R(4));
             }}});
  add_form(t, "4ap.Brho", -1, R(4), R(0), "index-2 in Gamma0+(2)",
           {{"square of the quadratic component",
             [](const Rational& p) {
               Puiseux x = sub(eval_form("Gamma0.4.Brho", p),
                               eta_product({{2, 8}, {1, -4}}, QuadExt(0, 8, -1), p));
               return rational_pow(x, R(2));
             }},
            {"fourth power of the theta combination",
             [](const Rational& p) {
               Puiseux x = sub(form_pow("theta3", R(2))(p),
                               scalar_mul(QuadExt(0, 1, -1), form_pow("theta2", R(2))(p)));
               return rational_pow(x, R(4));
             }}});
  add_form(t, "4ap.Crho", -1, R(4), R(1, 2), "index-2 in Gamma0+(2)",
           {{"scaled eta product",
             [](const Rational& p) { return eta_product({{1, 4}, {2, 4}}, QuadExt(0, 32, -1), p); }},
            {"difference of component squares",
             [](const Rational& p) {
               return sub(eval_form("4ap.Arho", p), eval_form("4ap.Brho", p));
             }}});
  add_form(t, "4ap.A", -1, R(1), R(0), "index-2 in Gamma0+(2)",
           {{"quartic root", form_pow("4ap.Arho", R(1, 4))},
            {"theta combination",
             [](const Rational& p) {
               return add(form_pow("theta3", R(2))(p),
                          scalar_mul(QuadExt(0, 1, -1), form_pow("theta2", R(2))(p)));
             }}});
  add_form(t, "4ap.B", -1, R(1), R(0), "index-2 in Gamma0+(2)",
           {{"quartic root", form_pow("4ap.Brho", R(1, 4))},
            {"theta combination",
             [](const Rational& p) {
               return sub(form_pow("theta3", R(2))(p),
                          scalar_mul(QuadExt(0, 1, -1), form_pow("theta2", R(2))(p)));
             }}});

  // --- index-2 subgroup of Gamma0+(3), rho = 3, width 2 ---
  add_form(t, "6ap.Arho", -3, R(3), R(0), "index-2 in Gamma0+(3)",
           {{"cubic component",
             [](const Rational& p) {
               Puiseux x = sub(eval_form("Gamma0.3.Brho", p), eval_form("Gamma0.3.Crho", p));
               return add(x, eta_product({{1, 3}, {3, 3}}, QuadExt(0, 6, -3), p));
             }}});
  add_form(t, "6ap.Brho", -3, R(3), R(0), "index-2 in Gamma0+(3)",
           {{"cubic component",
             [](const Rational& p) {
               Puiseux x = sub(eval_form("Gamma0.3.Brho", p), eval_form("Gamma0.3.Crho", p));
               return sub(x, eta_product({{1, 3}, {3, 3}}, QuadExt(0, 6, -3), p));
             }}});
  add_form(t, "6ap.Crho", -3, R(3), R(1, 2), "index-2 in Gamma0+(3)",
           {{"scaled eta product",
             [](const Rational& p) { return eta_product({{1, 3}, {3, 3}}, QuadExt(0, 12, -3), p); }}});

  // --- normalized components A, B (constant term one) ---
  struct Comp {
    const char* name;
    const char* rho_form;
    long rho;
    std::optional<Route> extra;
  };
  const std::vector<Comp> comps = {
      {"Gamma0.2.A", "Gamma0.2.Arho", 4, Route{"level-2 quartic root", form_alias("A4")}},
      {"Gamma0.2.B", "Gamma0.2.Brho", 4, Route{"level-2 companion", form_alias("B4")}},
      {"Gamma0.3.A", "Gamma0.3.Arho", 3, Route{"level-3 cube root", form_alias("A3")}},
      {"Gamma0.3.B", "Gamma0.3.Brho", 3, Route{"level-3 companion", form_alias("B3")}},
      {"Gamma0.4.A", "Gamma0.4.Arho", 2, Route{"level-4 square root", form_alias("A2")}},
      {"Gamma0.4.B", "Gamma0.4.Brho", 2, Route{"level-4 companion", form_alias("B2")}},
      {"Gamma1.A", "Gamma1.Arho", 12, Route{"quartic root of E4", form_pow("E4", R(1, 4))}},
      {"Gamma1.B", "Gamma1.Brho", 12, Route{"sextic root of E6", form_pow("E6", R(1, 6))}},
      {"Gamma0p.2.A", "Gamma0p.2.Arho", 8, Route{"level-2 quartic root", form_alias("A4")}},
      {"Gamma0p.2.B", "Gamma0p.2.Brho", 8,
       Route{"quartic root of the difference",
             [](const Rational& p) {
               Puiseux x = sub(eval_form("Gamma0.2.Brho", p), eval_form("Gamma0.2.Crho", p));
               return rational_pow(x, R(1, 4));
             }}},
      {"Gamma0p.3.A", "Gamma0p.3.Arho", 6, Route{"level-3 cube root", form_alias("A3")}},
      {"Gamma0p.3.B", "Gamma0p.3.Brho", 6,
       Route{"cube root of the difference",
             [](const Rational& p) {
               Puiseux x = sub(eval_form("Gamma0.3.Brho", p), eval_form("Gamma0.3.Crho", p));
               return rational_pow(x, R(1, 3));
             }}},
      {"2ap.A", "2ap.Arho", 6, std::nullopt},
      {"2ap.B", "2ap.Brho", 6, std::nullopt},
      {"6ap.A", "6ap.Arho", 3, std::nullopt},
      {"6ap.B", "6ap.Brho", 3, std::nullopt},
  };
  for (const auto& c : comps) {
    const FormEntry& base = t.at(c.rho_form);
    std::vector<Route> routes = {
        {"principal root of the rho power", form_pow(c.rho_form, R(1, c.rho))}};
    if (c.extra) routes.push_back(*c.extra);
    add_form(t, c.name, base.info.disc, R(1), R(0), base.info.group, std::move(routes));
  }
}

const Table& registry() {
  static const Table table = [] {
    Table t;
    register_scaffolding(t);
    register_character_eisenstein(t);
    register_core_forms(t);
    register_hauptmoduls(t);
    register_elliptic_family(t);
    register_e_forms(t);
    register_triples(t);
    return t;
  }();
  return table;
}

const FormEntry& entry(const std::string& name) {
  const Table& t = registry();
  auto it = t.find(name);
  if (it == t.end()) throw UnknownFormError("unknown form: " + name);
  return it->second;
}

std::mutex cache_mu;
std::map<std::string, Puiseux>& cache() {
  static std::map<std::string, Puiseux> c;
  return c;
}

}  // namespace

bool has_form(const std::string& name) { return registry().count(name) > 0; }

const FormInfo& form_info(const std::string& name) { return entry(name).info; }

std::vector<std::string> form_names() {
  std::vector<std::string> names;
  for (const auto& [name, fe] : registry()) names.push_back(name);
  return names;
}

Puiseux eval_form(const std::string& name, const Rational& prec) {
  const FormEntry& fe = entry(name);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache().find(name);
    if (it != cache().end() && it->second.precision() >= prec)
      return truncate(it->second, prec);
  }
  Puiseux v = fe.routes.front().build(prec);
  if (v.precision() < prec)
    throw PrecisionError("builder for " + name + " returned reduced precision");
  v = truncate(v, prec);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache().find(name);
    if (it == cache().end() || it->second.precision() < v.precision())
      cache().insert_or_assign(name, v);
  }
  return v;
}

Puiseux eval_form_route(const std::string& name, std::size_t route, const Rational& prec) {
  const FormEntry& fe = entry(name);
  if (route >= fe.routes.size())
    throw UnknownFormError("form " + name + " has no route " + std::to_string(route));
  Puiseux v = fe.routes[route].build(prec);
  if (v.precision() < prec)
    throw PrecisionError("route for " + name + " returned reduced precision");
  return truncate(v, prec);
}

std::vector<CrosscheckResult> registry_crosschecks(const Rational& prec) {
  std::vector<CrosscheckResult> results;
  for (const auto& [name, fe] : registry()) {
    if (fe.routes.size() < 2) continue;
    Puiseux primary = eval_form(name, prec);
    for (std::size_t r = 1; r < fe.routes.size(); ++r) {
      CrosscheckResult cr;
      cr.form = name;
      cr.route_a = fe.routes[0].label;
      cr.route_b = fe.routes[r].label;
      Puiseux alt = eval_form_route(name, r, prec);
      auto diff = first_difference(primary, alt);
      cr.pass = !diff.has_value();
      if (diff) {
        cr.detail = "first mismatch at q^(" + rat_str(diff->expo) + "): " +
                    diff->lhs.str() + " vs " + diff->rhs.str();
      }
      results.push_back(std::move(cr));
    }
  }
  return results;
}

const std::vector<TriangleGroup>& triangle_groups() {
  static const std::vector<TriangleGroup> groups = {
      {"Gamma0.2", 4, 1, R(1, 2), R(0), R(0), R(-64)},
      {"Gamma0.3", 3, 1, R(1, 3), R(0), R(0), R(-27)},
      {"Gamma0.4", 2, 1, R(0), R(0), R(0), R(-16)},
      {"Gamma1", 12, 1, R(1, 3), R(1, 2), R(0), R(0)},
      {"Gamma0p.2", 8, 1, R(1, 4), R(1, 2), R(0), R(0)},
      {"Gamma0p.3", 6, 1, R(1, 6), R(1, 2), R(0), R(0)},
      {"2ap", 6, 2, R(1, 3), R(1, 3), R(0), R(0)},
      {"4ap", 4, 2, R(1, 4), R(1, 4), R(0), R(0)},
      {"6ap", 3, 2, R(1, 6), R(1, 6), R(0), R(0)},
  };
  return groups;
}

}  // namespace qmf
