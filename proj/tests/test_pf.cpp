#include "qmf/pf.hpp"

#include <stdexcept>
#include <string>

#include "doctest.h"
#include "qmf/errors.hpp"
#include "qmf/forms.hpp"
#include "qmf/puiseux.hpp"

using namespace qmf;

namespace {

Poly pc(std::vector<Rational> c) { return Poly::from_coeffs(std::move(c)); }

}  // namespace

TEST_CASE("dense polynomial arithmetic") {
  const Poly t = Poly::var();
  const Poly a = pc({Rational(5), Rational(-2), Rational(0), Rational(1)});  // t^3 - 2t + 5
  const Poly b = pc({Rational(1), Rational(0), Rational(1)});                // t^2 + 1

  CHECK(a.degree() == 3);
  CHECK(a.coeff(1) == -2);
  CHECK(a.coeff(7) == 0);
  CHECK(a.eval(Rational(2)) == 9);

  const auto [quo, rem] = Poly::divmod(a, b);
  CHECK(quo == t);
  CHECK(rem == pc({Rational(5), Rational(-3)}));
  CHECK(quo * b + rem == a);

  const Poly g = Poly::gcd(pc({Rational(-1), Rational(0), Rational(1)}),
                           pc({Rational(-1), Rational(0), Rational(0), Rational(1)}));
  CHECK(g == pc({Rational(-1), Rational(1)}));  // monic t - 1

  CHECK(a.derivative() == pc({Rational(-2), Rational(0), Rational(3)}));
  const Poly p = pc({Rational(0), Rational(3), Rational(1)});
  CHECK(p.compose_scale(Rational(2)) == pc({Rational(0), Rational(6), Rational(4)}));
  CHECK(b.pow(2) == pc({Rational(1), Rational(0), Rational(2), Rational(0), Rational(1)}));
  CHECK(Poly().is_zero());
  CHECK(Poly().degree() == -1);
  CHECK_THROWS_AS(Poly().lead(), NonInvertibleError);
}

TEST_CASE("rational function normalization and calculus") {
  const Poly t = Poly::var();
  CHECK(RatFun(t * t - Poly(Rational(1)), t - Poly(Rational(1))) ==
        RatFun(t + Poly(Rational(1)), Poly(Rational(1))));
  // Denominator is kept monic.
  const RatFun half(t, t.scaled(Rational(2)) + Poly(Rational(2)));
  CHECK(half.den() == pc({Rational(1), Rational(1)}));
  CHECK(half.num() == pc({Rational(0), rat(1, 2)}));

  const RatFun inv_t(Poly(Rational(1)), t);
  CHECK(inv_t.derivative() == -RatFun(Poly(Rational(1)), t * t));
  CHECK(inv_t.pow(-2) == RatFun(t * t, Poly(Rational(1))));
  CHECK(inv_t + RatFun(Rational(-1)) * inv_t == RatFun());
  CHECK((inv_t / inv_t) == RatFun(Rational(1)));
  CHECK(inv_t.compose_scale(rat(1, 3)) == RatFun(Poly(Rational(3)), t));
  CHECK_THROWS_AS(RatFun(t, Poly()), NonInvertibleError);
  CHECK_THROWS_AS(RatFun(Rational(1)) / RatFun(), NonInvertibleError);
}

TEST_CASE("operator coefficients at the three hauptmodul points") {
  const Poly t = Poly::var();

  const PFOperator n2(rat(1, 2), Rational(0), Rational(0), Rational(-64));
  CHECK(n2.P == RatFun(pc({Rational(32), Rational(1)}), t * pc({Rational(64), Rational(1)})));
  CHECK(n2.Q == RatFun(Poly(Rational(4)), t * t * pc({Rational(64), Rational(1)})));

  const PFOperator n3(rat(1, 3), Rational(0), Rational(0), Rational(-27));
  CHECK(n3.P == RatFun(pc({Rational(9), Rational(1)}), t * pc({Rational(27), Rational(1)})));
  CHECK(n3.Q == RatFun(Poly(Rational(3)), t * t * pc({Rational(27), Rational(1)})));

  const PFOperator n4(Rational(0), Rational(0), Rational(0), Rational(-16));
  CHECK(n4.P == RatFun(Poly(Rational(1)), pc({Rational(16), Rational(1)})));
  CHECK(n4.Q == RatFun(Poly(Rational(4)), t * t * pc({Rational(16), Rational(1)})));

  CHECK_THROWS_AS(PFOperator(rat(1, 2), Rational(0), Rational(0), Rational(0)),
                  std::invalid_argument);
}

TEST_CASE("hat ladder matches the closed forms") {
  const PFOperator op(rat(1, 2), rat(1, 5), rat(1, 7), Rational(-3));
  const auto hat = u_hat_ladder(op, 8);
  REQUIRE(hat.size() == 3);
  CHECK(hat[0] == -op.Q);
  CHECK(hat[1] == -(op.Q.derivative() + (op.P * op.Q).scaled(Rational(2))));
  CHECK(hat[2] == -(op.Q.derivative().derivative() + (op.P * op.Q.derivative()).scaled(Rational(5)) +
                    (op.Q * op.P.derivative()).scaled(Rational(2)) +
                    (op.P * op.P * op.Q).scaled(Rational(6))));

  // Concrete value at the weight-12 point with t* = -1.
  const Poly t = Poly::var();
  const auto h = u_hat_ladder(PFOperator(rat(1, 2), Rational(0), Rational(0)), 6);
  CHECK(h[1] == RatFun(Poly(rat(1, 16)), t * t * t * pc({Rational(1), Rational(1)})));

  CHECK_THROWS_AS(u_hat_ladder(op, 3), std::invalid_argument);
  CHECK_THROWS_AS(u_hat_ladder(op, 2), std::invalid_argument);
}

TEST_CASE("monomial polynomial helpers") {
  const UPoly a = u_add(u_mono(Rational(2), 1, 0, 1), u_mono(Rational(3), 1, 0, 1));
  REQUIRE(a.size() == 1);
  CHECK(a[0].coeff == 5);
  CHECK(u_is_zero(u_add(a, u_scale(a, Rational(-1)))));
  CHECK(u_weight(a) == 12);
  CHECK(u_weight(u_add(a, u_mono(Rational(1), 1, 0, 0))) == -1);
  CHECK(u_weight(UPoly{}) == 0);
  const UPoly sq = u_mul(poly_p12(), poly_p12());
  CHECK(u_equal(sq, u_add(u_add(u_mono(Rational(1), 0, 0, 2), u_mono(Rational(48), 2, 0, 1)),
                          u_mono(Rational(576), 4, 0, 0))));
  CHECK(u_str(poly_p12()) == "1*u8 + 24*u4^2");
}

TEST_CASE("residuals of the named relations vanish where they should") {
  const PFOperator lvl2(rat(1, 2), Rational(0), Rational(0));
  const PFOperator lvl3(rat(1, 3), Rational(0), Rational(0));
  const PFOperator lvl4(Rational(0), Rational(0), Rational(0));

  CHECK(chazy_residual(lvl2, poly_p4()).is_zero());
  CHECK(chazy_residual(lvl4, poly_p4()).is_zero());
  CHECK(chazy_residual(lvl3, poly_p3()).is_zero());

  CHECK(chazy_residual(PFOperator(rat(1, 3), rat(1, 2), Rational(0)), poly_p12()).is_zero());
  CHECK(chazy_residual(PFOperator(rat(1, 3), rat(1, 3), Rational(0)), poly_p12()).is_zero());
  CHECK(chazy_residual(PFOperator(rat(1, 4), rat(1, 2), Rational(0)), poly_p8()).is_zero());
  CHECK(chazy_residual(PFOperator(rat(1, 4), rat(1, 4), Rational(0)), poly_p8()).is_zero());
  CHECK(chazy_residual(PFOperator(rat(1, 6), rat(1, 2), Rational(0)), poly_p6()).is_zero());
  CHECK(chazy_residual(PFOperator(rat(1, 6), rat(1, 6), Rational(0)), poly_p6()).is_zero());

  // The classical equation does not hold at the weight-12 point itself.
  CHECK(!chazy_residual(lvl2, poly_p12()).is_zero());

  CHECK_THROWS_AS(chazy_residual(lvl2, u_add(u_mono(Rational(1), 1, 0, 0),
                                             u_mono(Rational(1), 0, 1, 0))),
                  std::invalid_argument);
}

TEST_CASE("general equation coefficients") {
  const ChazyCoeffs a = theorem_general_coeffs(rat(1, 2), Rational(0), Rational(0));
  CHECK(a.c88 == 0);
  CHECK(a.c86 == rat(1, 32));
  CHECK(a.c84 == 0);
  CHECK(a.c66 == rat(-1, 32));
  CHECK(a.c64 == rat(1, 4));
  CHECK(a.c44 == 0);
  CHECK(u_equal(theorem_general_poly(rat(1, 2), Rational(0), Rational(0)),
                u_scale(u_mul(u_mono(Rational(1), 0, 2, 0), poly_p4()), rat(1, 32))));

  const ChazyCoeffs b = theorem_general_coeffs(rat(1, 3), rat(1, 2), Rational(0));
  CHECK(b.c86 == rat(1, 7776));
  CHECK(b.c64 == rat(1, 324));
  CHECK(u_equal(theorem_general_poly(rat(1, 3), rat(1, 2), Rational(0)),
                u_scale(u_mul(u_mono(Rational(1), 1, 2, 0), poly_p12()), rat(1, 7776))));

  // Symmetry in the first two parameters.
  const Rational al = rat(2, 7), be = rat(-3, 5), ga = rat(1, 4);
  const ChazyCoeffs lhs = theorem_general_coeffs(al, be, ga);
  const ChazyCoeffs rhs = theorem_general_coeffs(be, al, ga);
  CHECK(lhs.c88 == rhs.c88);
  CHECK(lhs.c86 == rhs.c86);
  CHECK(lhs.c84 == rhs.c84);
  CHECK(lhs.c66 == rhs.c66);
  CHECK(lhs.c64 == rhs.c64);
  CHECK(lhs.c44 == rhs.c44);
}

TEST_CASE("family polynomials specialize exactly") {
  CHECK(u_equal(family_weight12(3), u_mul(u_mono(Rational(1), 1, 0, 0), poly_p12())));
  CHECK(u_equal(family_weight12(4), poly_p8()));
  CHECK(u_equal(family_weight12(6), poly_p6()));
  // At N = 6 the second-order term drops out entirely.
  CHECK(u_equal(family_chazy_xii(6), u_mono(Rational(864), 2, 0, 0)));
  CHECK(u_equal(family_weight12_two(3, 5),
                u_mul(u_mono(Rational(1), 1, 0, 0), family_chazy_xii(5))));
}

TEST_CASE("randomized theorem verification is clean and deterministic") {
  const auto reps = verify_theorem_general(40, 0xC0FFEEULL, 2);
  REQUIRE(reps.size() == 8);
  for (const auto& r : reps) {
    CAPTURE(r.family);
    CHECK(r.failures.empty());
    for (const auto& f : r.failures) MESSAGE(f);
  }
  CHECK(reps[0].family == "general");
  CHECK(reps[0].checked == 40);
  CHECK(reps[2].family == "weight12");
  CHECK(reps[2].checked == 16);
  CHECK(reps[3].checked == 8);
  CHECK(reps[4].checked == 128);
  CHECK(reps[5].checked == 64);

  const auto again = verify_theorem_general(40, 0xC0FFEEULL, 1);
  REQUIRE(again.size() == reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    CHECK(again[i].family == reps[i].family);
    CHECK(again[i].checked == reps[i].checked);
    CHECK(again[i].failures == reps[i].failures);
  }

  CHECK_THROWS_AS(verify_theorem_general(0, 1), std::invalid_argument);
}

TEST_CASE("series evaluation of rational functions") {
  const Poly t = Poly::var();
  const RatFun f(Poly(Rational(1)), t * pc({Rational(1), Rational(1)}));  // 1/(t(t+1))
  // At t = q the expansion is q^{-1} - 1 + q - q^2 + ...
  Puiseux q = Puiseux::zero(0, Rational(8));
  q.set_coeff(Rational(1), QuadExt(Rational(1)));
  const Puiseux s = ratfun_at_series(f, q);
  CHECK(s.coeff_int(-1) == QuadExt(Rational(1)));
  CHECK(s.coeff_int(0) == QuadExt(Rational(-1)));
  CHECK(s.coeff_int(1) == QuadExt(Rational(1)));
  CHECK(s.coeff_int(2) == QuadExt(Rational(-1)));

  Puiseux c = Puiseux::constant(QuadExt(Rational(2)), Rational(8));
  CHECK_THROWS_AS(ratfun_at_series(f, c), CompositionDomainError);
}

TEST_CASE("hat functions reproduce the q-series ladder") {
  // u_k in the q-domain from the weight-2 quasimodular form, against
  // r^2 uhat_k(t(q)) (q t'(q))^{k/2} for the three hauptmoduln.
  struct Probe {
    const char* tname;
    const char* ename;
    long r;
    Rational alpha;
    Rational tstar;
  };
  const Probe probes[] = {
      {"t2", "Er.4", 4, rat(1, 2), Rational(-64)},
      {"t3", "Er.3", 3, rat(1, 3), Rational(-27)},
      {"t4", "Er.2", 2, Rational(0), Rational(-16)},
  };
  const Rational work(40), compare(24);
  for (const auto& p : probes) {
    CAPTURE(p.tname);
    const Puiseux tq = eval_form(p.tname, work);
    const Puiseux dt = derive(tq);
    const Puiseux e = eval_form(p.ename, work);

    std::vector<Puiseux> u;  // u4, u6, u8 from the Ramanujan-style ladder
    u.push_back(sub(scalar_mul(QuadExt(Rational(p.r)), derive(e)), mul(e, e)));
    for (int k = 4; k <= 6; k += 2)
      u.push_back(sub(derive(u.back()), scalar_mul(QuadExt(rat(k, p.r)), mul(e, u.back()))));

    const auto hat = u_hat_ladder(PFOperator(p.alpha, Rational(0), Rational(0), p.tstar), 8);
    for (int i = 0; i < 3; ++i) {
      CAPTURE(i);
      const Rational half_k = rat(4 + 2 * i, 2);
      const Puiseux rhs = scalar_mul(QuadExt(Rational(p.r * p.r)),
                                     mul(ratfun_at_series(hat[i], tq), rational_pow(dt, half_k)));
      CHECK(equal(truncate(u[i], compare), truncate(rhs, compare)));
    }
  }
}
