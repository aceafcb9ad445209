#include "qmf/forms.hpp"

#include "qmf/errors.hpp"
#include "qmf/modgroup.hpp"

#include "doctest.h"

#include <vector>

using namespace qmf;

namespace {

Rational R(long n, long d = 1) { return rat(n, d); }

std::vector<Rational> integer_window(const Puiseux& s, long count) {
  std::vector<Rational> out;
  for (long n = 0; n < count; ++n) {
    QuadExt c = s.coeff(R(n));
    REQUIRE(c.is_rational());
    out.push_back(c.re());
  }
  return out;
}

}  // namespace

TEST_CASE("golden expansion of the level-2 quartic root") {
  Puiseux a4 = eval_form("A4", R(6));
  std::vector<Rational> want = {R(1), R(12), R(-60), R(768), R(-11004), R(178200)};
  CHECK(integer_window(a4, 6) == want);
}

TEST_CASE("golden expansions of the level-one roots") {
  Puiseux a = eval_form("Gamma1.A", R(5));
  std::vector<Rational> want_a = {R(1), R(60), R(-4860), R(660480), R(-105063420)};
  CHECK(integer_window(a, 5) == want_a);

  Puiseux b = eval_form("Gamma1.B", R(5));
  std::vector<Rational> want_b = {R(1), R(-84), R(-20412), R(-6617856), R(-2505409788)};
  CHECK(integer_window(b, 5) == want_b);
}

TEST_CASE("theta2 sum has the documented leading shape") {
  Puiseux t2 = eval_form_route("theta2", 1, R(5));
  CHECK(t2.order().value() == R(1, 4));
  CHECK(t2.coeff(R(1, 4)) == QuadExt(2));
  CHECK(t2.coeff(R(9, 4)) == QuadExt(2));
  CHECK(t2.coeff(R(2)) == QuadExt(0));
}

TEST_CASE("registry crosschecks agree on every alternate route") {
  for (const auto& cr : registry_crosschecks(R(16))) {
    INFO(cr.form, ": ", cr.route_a, " vs ", cr.route_b, " ", cr.detail);
    CHECK(cr.pass);
  }
}

TEST_CASE("declared order and field match the computed series") {
  for (const auto& name : form_names()) {
    const FormInfo& info = form_info(name);
    Puiseux s = eval_form(name, R(8));
    INFO(name);
    CHECK(s.disc() == info.disc);
    REQUIRE(s.order().has_value());
    CHECK(s.order().value() == info.order);
  }
}

TEST_CASE("sum identity A^rho = B^rho + C^rho for all nine triples") {
  for (const auto& g : triangle_groups()) {
    INFO(g.name);
    Puiseux a = eval_form(g.name + ".Arho", R(12));
    Puiseux b = eval_form(g.name + ".Brho", R(12));
    Puiseux c = eval_form(g.name + ".Crho", R(12));
    CHECK(equal(a, add(b, c)));
  }
}

TEST_CASE("index-2 triples multiply back to their parent resolvents") {
  // (E6 + 24 w eta^12)(E6 - 24 w eta^12) = E4^3 over w^2 = -3, and the two
  // analogous products one level down.
  CHECK(equal(mul(eval_form("2ap.Arho", R(10)), eval_form("2ap.Brho", R(10))),
              eval_form("Gamma1.Arho", R(10))));
  CHECK(equal(mul(eval_form("4ap.Arho", R(10)), eval_form("4ap.Brho", R(10))),
              eval_form("Gamma0p.2.Arho", R(10))));
  CHECK(equal(mul(eval_form("6ap.Arho", R(10)), eval_form("6ap.Brho", R(10))),
              eval_form("Gamma0p.3.Arho", R(10))));
}

TEST_CASE("level companions coincide") {
  CHECK(equal(eval_form("B4", R(14)), eval_form("B2", R(14))));
  CHECK(equal(eval_form("Khat", R(14)), eval_form("A2", R(14))));
  CHECK(equal(eval_form("Er.2", R(14)), eval_form("KhatEhat", R(14))));
}

TEST_CASE("quasi-modular log derivatives from the theta relations") {
  // 4 theta2'/theta2 = KhatEhat;  4 theta3'/theta3 = KhatEhat - theta4^4;
  // 4 theta4'/theta4 = KhatEhat - theta3^4.
  Rational p(12);
  Puiseux ke = eval_form("KhatEhat", p);
  auto logderiv = [&](const char* name) {
    Puiseux x = eval_form(name, p + 2);
    return truncate(scalar_mul(QuadExt(4), mul(derive(x), invert(x))), p);
  };
  CHECK(equal(logderiv("theta2"), ke));
  CHECK(equal(logderiv("theta3"), sub(ke, eval_form("Gamma0.4.Brho", p))));
  CHECK(equal(logderiv("theta4"), sub(ke, eval_form("Gamma0.4.Arho", p))));
}

TEST_CASE("eta quotient characters certify on the documented generators") {
  // level 2: the fourth powers transform trivially
  CHECK(is_modular_form_with_character({2, {{1, 16}, {2, -8}}}, char_principal(2)));
  CHECK(is_modular_form_with_character({2, {{2, 16}, {1, -8}}}, char_principal(2)));
  // level 3: the cubes carry chi_-3
  CHECK(is_modular_form_with_character({3, {{1, 9}, {3, -3}}}, char_m3()));
  CHECK(is_modular_form_with_character({3, {{3, 9}, {1, -3}}}, char_m3()));
  // level 4: A2 carries chi_-4; the squares are trivial
  CHECK(is_modular_form_with_character({4, {{2, 10}, {1, -4}, {4, -4}}}, char_m4()));
  CHECK(is_modular_form_with_character({4, {{1, 8}, {2, -4}}}, char_principal(4)));
  CHECK(is_modular_form_with_character({4, {{4, 8}, {2, -4}}}, char_principal(4)));
  CHECK(is_modular_form_with_character({1, {{1, 24}}}, char_principal(1)));
  // mismatched characters are rejected
  CHECK_FALSE(is_modular_form_with_character({3, {{1, 9}, {3, -3}}}, char_principal(3)));
  CHECK_FALSE(is_modular_form_with_character({4, {{2, 10}, {1, -4}, {4, -4}}}, char_principal(4)));
}

TEST_CASE("registry rejects unknown names and bad theta rules") {
  CHECK_THROWS_AS(eval_form("A5", R(4)), UnknownFormError);
  CHECK_THROWS_AS(form_info("nope"), UnknownFormError);
  CHECK_THROWS_AS(theta_sum_2d(R(1), R(3), R(1), R(0), R(0), ThetaWeight::kUnit, R(4)),
                  std::invalid_argument);
  CHECK(has_form("Er.8"));
  CHECK_FALSE(has_form("Er.5"));
}

TEST_CASE("cache serves lower precision requests consistently") {
  Puiseux lo = eval_form("t2", R(6));
  Puiseux hi = eval_form("t2", R(18));
  Puiseux mid = eval_form("t2", R(11));
  CHECK(lo.precision() == R(6));
  CHECK(mid.precision() == R(11));
  CHECK(equal(lo, truncate(hi, R(6))));
  CHECK(equal(mid, truncate(hi, R(11))));
  CHECK(hi.coeff_int(1) == QuadExt(4096));
}

TEST_CASE("eisenstein kernel matches the known double-sum values") {
  // sum_{e d <= 4} chi_-4(d) d^2 q^{ed}: n=1 -> 1, n=2 -> 1, n=3 -> -9+1,
  // n=4 -> 1.
  Puiseux k = eisenstein_kernel(3, char_trivial(), char_m4(), R(5));
  CHECK(k.coeff_int(1) == QuadExt(1));
  CHECK(k.coeff_int(2) == QuadExt(1));
  CHECK(k.coeff_int(3) == QuadExt(-8));
  CHECK(k.coeff_int(4) == QuadExt(1));
}
