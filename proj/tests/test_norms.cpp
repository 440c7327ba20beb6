#include <doctest.h>

#include "dyadlab/bspline.hpp"
#include "dyadlab/families.hpp"
#include "dyadlab/norms.hpp"

#include <cmath>
#include <random>

using namespace dyadlab;

namespace {
constexpr double kInfE = SmoothnessParams::inf;
}

TEST_CASE("region predicates") {
  CHECK(SmoothnessParams{0.4, 2, 2}.unconditional_F());
  CHECK_FALSE(SmoothnessParams{0.5, 2, 2}.unconditional_F());  // open at s = 1/p
  CHECK_FALSE(SmoothnessParams{0.9, 2, 2}.unconditional_F());
  CHECK(SmoothnessParams{0.9, 2, 2}.frame_F());
  CHECK(SmoothnessParams{0.9, 2, kInfE}.frame_B());
  CHECK_FALSE(SmoothnessParams{1.0, 2, 2}.frame_F());
  CHECK(SmoothnessParams{0.7, 2, kInfE}.equiv_B());
  CHECK_FALSE(SmoothnessParams{0.4, 2, kInfE}.equiv_B());  // needs s > 1/p
  CHECK(SmoothnessParams{0.3, 2, 2}.synthesis_F());
  CHECK_FALSE(SmoothnessParams{0.6, 2, 2}.synthesis_F());  // s < min{1/p,1/q}
  CHECK(SmoothnessParams{0.4, 2, 2}.synthesis_B());
  CHECK(SmoothnessParams{0.5, 2, 2}.spline_B());
}

TEST_CASE("b_norm: single unit entry is 1 for every parameter choice") {
  CoeffArray<Rational> beta(2);
  beta.set(0, 0, Rational(1));
  for (double s : {-0.5, 0.0, 0.7, 1.0})
    for (double p : {0.5, 1.0, 2.0, kInfE})
      for (double q : {0.5, 1.0, 2.0, kInfE})
        CHECK(b_norm(beta, {s, p, q}).value == 1.0);
}

TEST_CASE("b_norm: staircase data at s = 1/p") {
  // entries 1 at (j, 0) for j < N, the scaled Haar data of the staircase
  int n = 6;
  CoeffArray<Rational> beta(n - 1);
  for (int j = 0; j < n; ++j) beta.set(j, 0, Rational(1));
  for (double p : {1.0, 2.0}) {
    NormReport sup = b_norm(beta, {1.0 / p, p, kInfE});
    CHECK(sup.value == 1.0);
    CHECK(sup.method.substr(0, 8) == "rational");
    NormReport sum = b_norm(beta, {1.0 / p, p, 1.0});
    CHECK(sum.value == static_cast<double>(n));
  }
}

TEST_CASE("b_norm: homogeneity and definiteness") {
  CoeffArray<Rational> beta(3);
  beta.set(1, 2, rat(3, 4));
  beta.set(2, -1, rat(-7, 8));
  beta.set(-1, 0, rat(1, 3));
  SmoothnessParams prm{0.4, 2, 3};
  double base = b_norm(beta, prm).value;
  CoeffArray<Rational> scaled(3);
  beta.for_each_nonzero(
      [&](int j, long long mu, const Rational& v) { scaled.set(j, mu, Rational(-5) * v); });
  CHECK(b_norm(scaled, prm).value == doctest::Approx(5 * base).epsilon(1e-14));
  CoeffArray<Rational> zero(3);
  CHECK(b_norm(zero, prm).value == 0.0);
}

TEST_CASE("b_norm: rho-triangle inequality on random pairs") {
  std::mt19937_64 rng(17);
  auto random_array = [&](CoeffArray<double>& a) {
    for (int j = -1; j <= 3; ++j)
      for (long long mu = 0; mu < 6; ++mu)
        if (rng() % 2) a.set(j, mu, static_cast<double>(rng() % 100) / 25.0 - 2.0);
  };
  for (double p : {0.5, 1.0, 2.0})
    for (double q : {0.5, 2.0, kInfE}) {
      SmoothnessParams prm{0.3, p, q};
      double rho = std::min({1.0, p, q});
      for (int rep = 0; rep < 20; ++rep) {
        CoeffArray<double> a(3), b(3), sum(3);
        random_array(a);
        random_array(b);
        for (int j = -1; j <= 3; ++j)
          for (long long mu = 0; mu < 6; ++mu) sum.set(j, mu, a.at(j, mu) + b.at(j, mu));
        double na = b_norm(a, prm).value, nb = b_norm(b, prm).value,
               ns = b_norm(sum, prm).value;
        CHECK(std::pow(ns, rho) <= std::pow(na, rho) + std::pow(nb, rho) + 1e-9);
      }
    }
}

TEST_CASE("b_norm is non-increasing in q") {
  CoeffArray<Rational> beta(4);
  std::mt19937_64 rng(5);
  for (int j = -1; j <= 4; ++j)
    for (long long mu = 0; mu < 5; ++mu)
      if (rng() % 2) beta.set(j, mu, Rational(static_cast<long long>(rng() % 9) - 4, 2));
  for (double p : {1.0, 2.0}) {
    double prev = kInfE;
    for (double q : {0.5, 1.0, 2.0, kInfE}) {
      double v = b_norm(beta, {0.6, p, q}).value;
      CHECK(v <= prev * (1 + 1e-12));
      prev = v;
    }
  }
}

TEST_CASE("f_norm equals b_norm for single-level data") {
  CoeffArray<Rational> beta(3);
  beta.set(2, 0, rat(3, 2));
  beta.set(2, 5, rat(-1, 2));
  beta.set(2, 7, Rational(2));
  for (double p : {1.0, 2.0, 3.0})
    for (double q : {0.5, 1.0, 2.0, kInfE}) {
      SmoothnessParams prm{0.45, p, q};
      CHECK(f_norm(beta, prm).value ==
            doctest::Approx(b_norm(beta, prm).value).epsilon(1e-12));
    }
  // p = q coincidence on multi-level data supported at levels >= 0; a level -1
  // entry would pick up the extra 2^{1/p} weight of the unit cells
  CoeffArray<Rational> multi(3);
  multi.set(0, 0, Rational(1));
  multi.set(2, 1, rat(-5, 4));
  multi.set(1, -2, rat(1, 2));
  for (double pq : {1.0, 2.0})
    CHECK(f_norm(multi, {0.3, pq, pq}).value ==
          doctest::Approx(b_norm(multi, {0.3, pq, pq}).value).epsilon(1e-12));
  CHECK_THROWS_AS(f_norm(beta, SmoothnessParams{0.3, kInfE, 2.0}), std::invalid_argument);
}

TEST_CASE("f_norm: nested-level staircase data against a brute-force cell oracle") {
  int n = 5;
  CoeffArray<Rational> beta(n - 1);
  for (int j = 0; j < n; ++j) beta.set(j, 0, Rational(1));
  SmoothnessParams prm{0.0, 2.0, 2.0};
  // brute force: the inner sum counts the indicators covering each fine cell
  int cells = 1 << n;
  double integral = 0;
  for (int c = 0; c < cells; ++c) {
    double count = 0;
    for (int j = 0; j < n; ++j)
      if (c >> (n - j) == 0) count += 1;  // cell inside I_{j,0} = [0, 2^{-j})
    integral += count * std::exp2(-n);
  }
  double expected = std::sqrt(integral);
  CHECK(f_norm(beta, prm).value == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("dyadic Besov norm: staircase value is exactly 1 at s = 1/p") {
  for (int n : {1, 4, 9})
    for (double p : {1.0, 2.0}) {
      NormReport rep = dyadic_besov_norm(staircase(n), {1.0 / p, p, kInfE}, n + 2);
      CHECK(rep.value == 1.0);
      CHECK_FALSE(rep.tail_at_max);
    }
}

TEST_CASE("dyadic Besov norm: single Haar atom at s=1/2, p=q=2") {
  NormReport rep = dyadic_besov_norm(haar_atom({0, 0, Parity::Even}), {0.5, 2, 2}, 4);
  CHECK(rep.value == 1.0);
}

TEST_CASE("dyadic distance of concentrating indicators matches the closed form") {
  SmoothnessParams prm{-0.75, 2.0, 2.0};  // s < 1/p - 1
  for (int n : {2, 4}) {
    int m = n + 3;
    ExactPiecewise diff = geometric_staircase(m) - geometric_staircase(n);
    double dist = dyadic_besov_norm(diff, prm, m + 2).value;
    double closed = 0;
    for (int j = n; j < m; ++j) closed += std::pow(std::exp2(j * (prm.s + 1 - 0.5)), 2.0);
    CHECK(dist == doctest::Approx(std::sqrt(closed)).epsilon(1e-12));
  }
}

TEST_CASE("frame norms: zero input, region flag, J-stability for the hat") {
  CHECK(frame_besov_norm(ExactPiecewise::zero(), {0.5, 2, 2}, 6).value == 0.0);
  CHECK_FALSE(frame_besov_norm(hat(0, 0), {0.5, 2, 2}, 6).out_of_region);
  CHECK(frame_besov_norm(hat(0, 0), {1.5, 2, 2}, 6).out_of_region);
  double a = frame_besov_norm(hat(0, 0), {0.5, 2, 2}, 12).value;
  double b = frame_besov_norm(hat(0, 0), {0.5, 2, 2}, 16).value;
  CHECK(std::abs(a - b) / b < 0.01);
  CHECK_THROWS_AS(frame_tl_norm(hat(0, 0), SmoothnessParams{0.5, kInfE, 2.0}, 6),
                  std::invalid_argument);
}

TEST_CASE("frame Besov norm of the unit indicator against a closed-form oracle") {
  // only the two straddling half-shift atoms survive at each level j >= 0,
  // each contributing 1/2; level -1 contributes the single entry 1
  ExactPiecewise ind = ExactPiecewise::indicator(Rational(0), Rational(1));
  int J = 9;
  for (double s : {0.3, 0.6})
    for (double p : {1.0, 2.0})
      for (double q : {1.0, 2.0}) {
        double level_sum = 2.0 * std::pow(0.5, p);  // sum_mu c^p at one level
        double expected = std::pow(std::exp2(-(s - 1.0 / p)), q);  // level -1 term
        for (int j = 0; j <= J; ++j)
          expected +=
              std::pow(std::exp2(j * (s - 1.0 / p)) * std::pow(level_sum, 1.0 / p), q);
        expected = std::pow(expected, 1.0 / q);
        CHECK(frame_besov_norm(ind, {s, p, q}, J).value ==
              doctest::Approx(expected).epsilon(1e-12));
      }
}

TEST_CASE("modulus delta-grid accepts non-dyadic subdivisions") {
  // delta = t i/5 leaves the dyadic lattice; breakpoints stay exact rationals
  double v = modulus2(hat(0, 0), rat(1, 4), kInfE, 5);
  CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("frame TL norm vs frame Besov norm at p = q") {
  // identical except at level -1, where the b-weight carries an extra 2^{1/p}:
  // f-norm <= b-norm <= 2^{1/p} f-norm
  ExactPiecewise f = random_pwlinear(31);
  for (double pq : {1.0, 2.0}) {
    SmoothnessParams prm{0.5, pq, pq};
    double fv = frame_tl_norm(f, prm, 8).value;
    double bv = frame_besov_norm(f, prm, 8).value;
    CHECK(fv <= bv * (1 + 1e-12));
    CHECK(bv <= std::exp2(1.0 / pq) * fv * (1 + 1e-12));
  }
}

TEST_CASE("frame dominates dyadic entrywise, hence in norm") {
  for (uint64_t seed : {1u, 2u, 3u}) {
    ExactPiecewise f = random_pwlinear(seed);
    for (double s : {0.3, 0.7}) {
      SmoothnessParams prm{s, 2, 2};
      CHECK(frame_besov_norm(f, prm, 8).value >=
            dyadic_besov_norm(f, prm, 8).value * (1 - 1e-12));
    }
  }
}

TEST_CASE("modulus of smoothness of the hat: brute-force delta grid") {
  ExactPiecewise n2 = hat(0, 0);
  for (Rational t : {rat(1, 4), rat(1, 2), Rational(1)}) {
    double coarse = modulus2(n2, t, kInfE, 8);
    double fine = modulus2(n2, t, kInfE, 256);
    CHECK(coarse == doctest::Approx(2 * to_double(t)).epsilon(1e-12));
    CHECK(fine == doctest::Approx(coarse).epsilon(1e-12));
  }
}

TEST_CASE("reference Besov norm: zero function, domain errors") {
  CHECK(ref_besov_norm(ExactPiecewise::zero(), {0.5, 2, kInfE}, 4).value == 0.0);
  CHECK_THROWS_AS(ref_besov_norm(hat(0, 0), SmoothnessParams{2.5, 2, 2}, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(ref_besov_norm(hat(0, 0), SmoothnessParams{-0.1, 2, 2}, 4),
                  std::invalid_argument);
}

TEST_CASE("reference norm of the staircase grows at least linearly") {
  for (double p : {1.0, 2.0}) {
    int n = 5;
    double lower = std::exp2(n / p) * lp_norm(second_difference(staircase(n), pow2r(-n)), p).value;
    CHECK(lower >= n);
    NormReport full = ref_besov_norm(staircase(n), {1.0 / p, p, kInfE}, n);
    CHECK(full.value >= lower * (1 - 1e-12));
  }
}

TEST_CASE("Sobolev and BV norms of the hat and the indicator") {
  CHECK(w1p_norm(hat(0, 0), 1.0).value == 3.0);
  CHECK(w1p_norm(hat(0, 0), kInfE).value == 2.0);
  ExactPiecewise ind = ExactPiecewise::indicator(Rational(0), Rational(1));
  CHECK(bv_norm(ind).value == 3.0);
  CHECK_THROWS_AS(w1p_norm(ind, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(w1p_norm(ind, 2.0), std::invalid_argument);
}

TEST_CASE("frame Sobolev data: indicator is finite and stable in J") {
  ExactPiecewise ind = ExactPiecewise::indicator(Rational(0), Rational(1));
  double v8 = frame_sobolev_norm(ind, 1.0, 8).value;
  double v12 = frame_sobolev_norm(ind, 1.0, 12).value;
  CHECK(v8 == v12);  // every level contributes the same finite sum
  CHECK(v8 > 0);
  CHECK(std::isfinite(v8));
  CHECK(frame_sobolev_norm(ExactPiecewise::zero(), 2.0, 6).value == 0.0);
}

TEST_CASE("frame Sobolev data of the hat against a brute-force level scan") {
  ExactPiecewise n2 = hat(0, 0);
  int J = 8;
  double brute = 0;
  for (int j = -1; j <= J; ++j) {
    double best = 0;
    for (long long mu = -4; mu < (4LL << std::max(j, 0)); ++mu) {
      double even = std::abs(to_double(inner_product(n2, extended_haar_atom(j, 2 * mu))));
      double odd =
          j < 0 ? 0.0
                : std::abs(to_double(inner_product(n2, extended_haar_atom(j, 2 * mu + 1))));
      double c = j < 0 ? even : std::ldexp(even + odd, j);
      best = std::max(best, c);
    }
    brute = std::max(brute, std::exp2(j) * best);  // p = inf: weight 2^{j(1-0)}
  }
  double got = frame_sobolev_norm(n2, kInfE, J).value;
  CHECK(got == doctest::Approx(brute).epsilon(1e-12));
}

TEST_CASE("bootstrap constant at the reference parameter values") {
  BootstrapParams bp;  // (1/2, 1, 1/2)
  SmoothnessParams prm{1.0, 2.0, kInfE};
  double c = bootstrap_constant(prm, bp);
  CHECK(c == doctest::Approx(1.0 / (std::sqrt(2.0) - 1.0) + 1.0).epsilon(1e-14));
  // inadmissible center weight
  BootstrapParams bad;
  bad.lambda = {0.5, 2.0, 0.5};
  CHECK_THROWS_AS(bootstrap_constant(SmoothnessParams{1.0, 2.0, kInfE}, bad),
                  std::invalid_argument);
}

TEST_CASE("bootstrap verify: all-even sequences give ratio 1") {
  BootstrapParams bp;
  SmoothnessParams prm{1.0, 2.0, kInfE};
  CoeffArray<double> a(4, CoeffConvention::Scaled);
  for (int j = 0; j <= 4; ++j)
    for (long long mu = 0; mu < 8; mu += 2) a.set(j, mu, 1.0 + j + mu);
  BootstrapReport rep = bootstrap_verify(a, prm, bp);
  CHECK(rep.relation_holds);
  CHECK(rep.ratio == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rep.bounded);
}

TEST_CASE("bootstrap verify: detects violations of the neighbor bound") {
  BootstrapParams bp;
  SmoothnessParams prm{1.0, 2.0, kInfE};
  CoeffArray<double> a(2, CoeffConvention::Scaled);
  a.set(0, 1, 5.0);  // odd entry with nothing below it
  BootstrapReport rep = bootstrap_verify(a, prm, bp);
  CHECK_FALSE(rep.relation_holds);
  CHECK(rep.violation_level == 0);
  CHECK(rep.violation_index == 0);
}

TEST_CASE("band comparison: second-difference norm vs dyadic data for 1/p < s < 1") {
  // fixed corpus: hats, random continuous piecewise-linear, a sampled bump
  std::vector<ExactPiecewise> corpus{hat(0, 0), hat(1, 1)};
  for (uint64_t seed : {4u, 5u, 6u}) corpus.push_back(random_pwlinear(seed));
  SmoothnessParams prm{0.7, 2.0, kInfE};
  double lo = kInfE, hi = 0;
  for (const auto& f : corpus) {
    double ratio = ref_besov_norm(f, prm, 8).value / dyadic_besov_norm(f, prm, 8).value;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK(hi / lo <= 100.0);
}

TEST_CASE("band comparison: frame Sobolev vs W1p on piecewise-linear corpus") {
  double lo = kInfE, hi = 0;
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    ExactPiecewise f = random_pwlinear(seed);
    for (double p : {2.0, kInfE}) {
      double ratio = frame_sobolev_norm(f, p, 8).value / w1p_norm(f, p).value;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  CHECK(lo >= 1.0 / 50);
  CHECK(hi <= 50.0);
  CHECK(hi / lo <= 50.0);
}

TEST_CASE("grid reference norm: second differences on the sample grid") {
  GridFunction bump = sample_bump(BumpProfile{}, 9);
  NormReport rep = ref_besov_norm(bump, {0.5, 2.0, kInfE}, 6);
  CHECK(rep.value > 0);
  CHECK(std::isfinite(rep.value));
  // delta below the grid step is rejected
  CHECK_THROWS_AS(ref_besov_norm(bump, SmoothnessParams{0.5, 2.0, kInfE}, 12),
                  std::invalid_argument);
}
