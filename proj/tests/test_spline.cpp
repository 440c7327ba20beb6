#include <doctest.h>

#include "dyadlab/chui_wang.hpp"
#include "dyadlab/families.hpp"
#include "dyadlab/haar.hpp"

#include <cmath>

using namespace dyadlab;

TEST_CASE("b-splines: orders 1..4") {
  CHECK(bspline(1).realization == ExactPiecewise::indicator(Rational(0), Rational(1)));
  ExactPiecewise n2 = bspline(2).realization;
  CHECK(n2 == hat(0, 0));
  CHECK(n2(rat(1, 2)) == rat(1, 2));
  CHECK(n2(rat(3, 2)) == rat(1, 2));
  ExactPiecewise n4 = bspline(4).realization;
  CHECK(n4(Rational(1)) == rat(1, 6));
  CHECK(n4(Rational(2)) == rat(4, 6));
  CHECK(n4(Rational(3)) == rat(1, 6));
  CHECK(n4(Rational(1)) + n4(Rational(2)) + n4(Rational(3)) == Rational(1));
  CHECK(n4.support_left() == Rational(0));
  CHECK(n4.support_right() == Rational(4));
  for (int m = 1; m <= 4; ++m) CHECK(integrate(bspline(m).realization) == Rational(1));
  CHECK_THROWS_AS(bspline(0), std::invalid_argument);
  CHECK_THROWS_AS(bspline(5), std::invalid_argument);
}

TEST_CASE("partition of unity on a compact window") {
  for (int m : {2, 3, 4}) {
    ExactPiecewise nm = bspline(m).realization;
    ExactPiecewise sum;
    for (long long k = -m; k <= 4; ++k) sum += nm.shifted_arg(Rational(-Integer(k)));
    // exact equality with the constant 1 on [0, 4)
    ExactPiecewise window = sum.restricted(Rational(0), Rational(4));
    CHECK(window == ExactPiecewise::indicator(Rational(0), Rational(4)));
  }
}

TEST_CASE("refinement identity: residual is the exact zero function") {
  auto r = refine_hat(0, 0);
  CHECK(r.residual.is_zero());
  // pointwise equality at quarter points
  ExactPiecewise n = hat(0, 0);
  for (Rational x : {rat(1, 4), rat(1, 2), Rational(1), rat(3, 2)})
    CHECK(r.expansion(x) == n(x));
  CHECK(refine_hat(3, -7).residual.is_zero());
  CHECK(refine_hat(7, 129).residual.is_zero());
}

TEST_CASE("refinement composed twice expands into seven finer hats") {
  // weights found by composing the two-scale relation with itself
  const Rational w[7] = {rat(1, 4), rat(1, 2), rat(3, 4), Rational(1),
                         rat(3, 4), rat(1, 2), rat(1, 4)};
  ExactPiecewise expect;
  for (int k = 0; k < 7; ++k) expect += w[k] * hat(2, k);
  CHECK(expect == hat(0, 0));
}

TEST_CASE("spline wavelet: exact expansion coefficients and support") {
  ChuiWangSystem sys = chui_wang_mother();
  CHECK(sys.b[0] == rat(1, 12));
  CHECK(sys.b[1] == rat(-1, 2));
  CHECK(sys.b[2] == rat(5, 6));
  CHECK(sys.b[3] == rat(-1, 2));
  CHECK(sys.b[4] == rat(1, 12));
  Rational bsum(0);
  for (const auto& b : sys.b) bsum += b;
  CHECK(bsum == Rational(0));
  CHECK(sys.mother.support_left() >= Rational(0));
  CHECK(sys.mother.support_right() <= Rational(3));
}

TEST_CASE("spline wavelet: two vanishing moments, exact") {
  ChuiWangSystem sys = chui_wang_mother();
  CHECK(integrate(sys.mother) == Rational(0));
  ExactPiecewise x_window = ExactPiecewise::restriction(Poly({Rational(0), Rational(1)}),
                                                        Rational(-1), Rational(4));
  CHECK(inner_product(sys.mother, x_window) == Rational(0));
}

TEST_CASE("spline wavelet: gram is symmetric with bandwidth 2") {
  ChuiWangSystem sys = chui_wang_mother();
  CHECK(sys.gram[0] > 0);
  CHECK(sys.gram[3] == Rational(0));
  CHECK(sys.gram[4] == Rational(0));
  for (long long k = -2; k <= 2; ++k)
    CHECK(inner_product(sys.mother, sys.mother.shifted_arg(Rational(Integer(k)))) ==
          sys.gram_at(k));
}

TEST_CASE("inter-scale orthogonality over a finite box, exact") {
  ChuiWangSystem sys = chui_wang_mother();
  for (int j1 = 0; j1 <= 2; ++j1)
    for (int j2 = j1 + 1; j2 <= 2; ++j2)
      for (long long m1 = -2; m1 <= 2; ++m1)
        for (long long m2 = -2; m2 <= 6; ++m2)
          CHECK(inner_product(cw_atom(sys, j1, m1), cw_atom(sys, j2, m2)) == Rational(0));
  // scale-0 wavelets are orthogonal to the coarse hats as well
  for (long long m1 = -2; m1 <= 2; ++m1)
    for (long long m2 = -2; m2 <= 2; ++m2)
      CHECK(inner_product(cw_atom(sys, -1, m1), cw_atom(sys, 1, m2)) == Rational(0));
}

TEST_CASE("dual coefficients: symmetry, residual, decay") {
  ChuiWangSystem sys = chui_wang_with_dual(1e-10);
  CHECK(sys.half_window <= 100);
  CHECK(sys.residual < 1e-8);
  for (long long k = 1; k <= sys.half_window; ++k)
    CHECK(std::abs(sys.dual_coeff(k) - sys.dual_coeff(-k)) < 1e-10);
  // biorthogonality by direct substitution
  for (long long n = -(sys.half_window - 4); n <= sys.half_window - 4; ++n) {
    double s = 0;
    for (long long k = n - 2; k <= n + 2; ++k)
      s += sys.dual_coeff(k) * to_double(sys.gram_at(n - k));
    CHECK(std::abs(s - (n == 0 ? 1.0 : 0.0)) < 1e-8);
  }
  // geometric decay with a uniform ratio bound away from the window edge
  double worst_ratio = 0;
  for (long long k = 3; k + 4 <= sys.half_window; ++k) {
    double num = std::abs(sys.dual_coeff(k + 1)), den = std::abs(sys.dual_coeff(k));
    if (den > 0) worst_ratio = std::max(worst_ratio, num / den);
  }
  CHECK(worst_ratio < 1.0);
  CHECK_THROWS_AS(chui_wang_with_dual(0.0), std::invalid_argument);
}

TEST_CASE("dual realization has numerically vanishing moments") {
  ChuiWangSystem sys = chui_wang_with_dual(1e-10);
  GridFunction dual = cw_dual_realization(sys, 7);
  CHECK(std::abs(integrate(dual)) < 1e-8);
  // first moment via pairing with a wide ramp
  ExactPiecewise ramp = ExactPiecewise::restriction(
      Poly({Rational(0), Rational(1)}), Rational(-Integer(sys.half_window + 1)),
      Rational(Integer(sys.half_window + 4)));
  CHECK(std::abs(inner_product(dual, ramp)) < 1e-6);
}

TEST_CASE("wavelet analysis: vanishing moments kill constants and ramps") {
  ChuiWangSystem sys = chui_wang_mother();
  // constant on a wide neighborhood of supp psi_{1,2} = [1, 5/2]
  ExactPiecewise c = Rational(7) * ExactPiecewise::indicator(Rational(-1), Rational(4));
  CHECK(inner_product(c, cw_atom(sys, 1, 2)) == Rational(0));
  ExactPiecewise ramp = ExactPiecewise::restriction(Poly({rat(1, 3), rat(5, 2)}), Rational(-1),
                                                    Rational(4));
  CHECK(inner_product(ramp, cw_atom(sys, 1, 2)) == Rational(0));
  // <psi, psi_{0,0}> = g_0
  CHECK(inner_product(sys.mother, cw_atom(sys, 0, 0)) == sys.gram[0]);
  auto coeffs = cw_analyze(sys, sys.mother, 1);
  CHECK(coeffs.at(0, 0) == sys.gram[0]);
}

TEST_CASE("derivative pairing identity: hat input") {
  ExactPiecewise n2 = hat(0, 0);
  for (int j : {1, 2, 3})
    for (long long nu = -2; nu <= 4; ++nu) {
      auto chk = derivative_identity_check(n2, j, nu);
      CHECK(chk.lhs == chk.rhs);
    }
  auto chk0 = derivative_identity_check(n2, 0, 0);
  CHECK(chk0.lhs == chk0.rhs);
}

TEST_CASE("derivative pairing identity: plateau and ramp regions") {
  // trapezoid hat(-1..1) + hat(0..2): equals 1 on [0,1]
  ExactPiecewise trap = hat(0, -1) + hat(0, 0);
  // atom deep inside the plateau: both sides vanish
  auto flat = derivative_identity_check(trap, 3, 2);
  CHECK(flat.lhs == Rational(0));
  CHECK(flat.rhs == Rational(0));
  // atom inside the rising ramp of the plain hat: both sides equal slope * 2^{-j}
  auto rise = derivative_identity_check(hat(0, 0), 3, 1);
  CHECK(rise.lhs == rise.rhs);
  CHECK(rise.lhs == pow2r(-3));
}

TEST_CASE("derivative pairing identity: quadratic piece, exact") {
  // x^2 on [0,1] glued to a matching downward ramp on [1,2], continuous
  ExactPiecewise f(
      {Rational(0), Rational(1), Rational(2)},
      {Poly({Rational(0), Rational(0), Rational(1)}), Poly({Rational(2), Rational(-1)})});
  auto d = derivative(f);
  REQUIRE(d.jumps.empty());
  for (long long nu = 0; nu <= 5; ++nu) {
    auto chk = derivative_identity_check(f, 3, nu);
    CHECK(chk.lhs == chk.rhs);
  }
}

TEST_CASE("derivative pairing identity rejects jumps") {
  CHECK_THROWS_AS(
      derivative_identity_check(ExactPiecewise::indicator(Rational(0), Rational(1)), 1, 0),
      std::invalid_argument);
}
