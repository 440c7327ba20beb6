#include <doctest.h>

#include "dyadlab/bspline.hpp"
#include "dyadlab/families.hpp"
#include "dyadlab/haar.hpp"

#include <random>

using namespace dyadlab;

TEST_CASE("haar atoms: plain, shifted, level -1") {
  ExactPiecewise h = haar_atom({0, 0, Parity::Even});
  CHECK(h(rat(1, 4)) == Rational(1));
  CHECK(h(rat(3, 4)) == Rational(-1));
  CHECK(h.support_left() == Rational(0));
  CHECK(h.support_right() == Rational(1));

  ExactPiecewise odd = haar_atom({0, 0, Parity::Odd});
  CHECK(odd.support_left() == rat(1, 2));
  CHECK(odd.support_right() == rat(3, 2));
  CHECK(odd(rat(3, 4)) == Rational(1));
  CHECK(odd(rat(5, 4)) == Rational(-1));

  ExactPiecewise ind = haar_atom({-1, 3, Parity::Even});
  CHECK(ind == ExactPiecewise::indicator(Rational(3), Rational(4)));
  CHECK_THROWS_AS(haar_atom({-1, 0, Parity::Odd}), std::invalid_argument);
}

TEST_CASE("analyze: orthogonality picks out single atoms") {
  auto c = analyze(haar_atom({3, 5, Parity::Even}), 5);
  CHECK(c.at(3, 5) == pow2r(-3));
  size_t nonzero_at_pos_levels = 0;
  c.for_each_nonzero([&](int j, long long, const Rational&) {
    if (j >= 0) ++nonzero_at_pos_levels;
  });
  CHECK(nonzero_at_pos_levels == 1);
}

TEST_CASE("analyze: indicator has only the level -1 coefficient") {
  auto c = analyze(ExactPiecewise::indicator(Rational(0), Rational(1)), 6);
  CHECK(c.at(-1, 0) == Rational(1));
  size_t nonzero = 0;
  c.for_each_nonzero([&](int j, long long, const Rational&) {
    if (j >= 0) ++nonzero;
  });
  CHECK(nonzero == 0);
}

TEST_CASE("analyze: two-step staircase has exactly two coefficients") {
  auto c = analyze(staircase(2), 4);
  CHECK(c.at(0, 0) == Rational(1));
  CHECK(c.at(1, 0) == rat(1, 2));
  size_t nonzero = 0;
  c.for_each_nonzero([&](int j, long long, const Rational&) {
    if (j >= 0) ++nonzero;
  });
  CHECK(nonzero == 2);
}

TEST_CASE("analyze_shifted examples") {
  ExactPiecewise ind = ExactPiecewise::indicator(Rational(0), Rational(1));
  auto s = analyze_shifted(ind, 2);
  // only the left half of the shifted atom meets [0,1)
  CHECK(s.at(0, 0) == rat(1, 2));
  // constant over the whole shifted support cancels
  ExactPiecewise wide = Rational(5) * ExactPiecewise::indicator(Rational(-2), Rational(3));
  auto sw = analyze_shifted(wide, 1);
  CHECK(sw.at(0, 0) == Rational(0));
  CHECK(sw.at(1, 1) == Rational(0));
  // ramp x on [0,2]
  ExactPiecewise ramp = ExactPiecewise::restriction(Poly({Rational(0), Rational(1)}),
                                                    Rational(0), Rational(2));
  auto sr = analyze_shifted(ramp, 1);
  CHECK(sr.at(0, 0) == rat(-1, 4));
}

TEST_CASE("pyramid agrees exactly with direct inner products") {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    ExactPiecewise f = random_pwconst(seed, 12, 3);
    auto fast = analyze(f, 4);
    auto slow = analyze_direct(f, 4);
    bool equal = true;
    for (int j = -1; j <= 4; ++j) {
      long long lo = std::min(fast.level(j).mu_begin(), slow.level(j).mu_begin());
      long long hi = std::max(fast.level(j).mu_end(), slow.level(j).mu_end());
      for (long long mu = lo; mu < hi; ++mu)
        equal = equal && fast.at(j, mu) == slow.at(j, mu);
    }
    CHECK(equal);
  }
}

TEST_CASE("shifted pyramid agrees exactly with direct inner products") {
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    ExactPiecewise f = random_pwconst(seed, 10, 3);
    auto fast = analyze_shifted(f, 3);
    auto slow = analyze_shifted_direct(f, 3);
    bool equal = true;
    for (int j = 0; j <= 3; ++j) {
      long long lo = std::min(fast.level(j).mu_begin(), slow.level(j).mu_begin());
      long long hi = std::max(fast.level(j).mu_end(), slow.level(j).mu_end());
      for (long long mu = lo; mu < hi; ++mu)
        equal = equal && fast.at(j, mu) == slow.at(j, mu);
    }
    CHECK(equal);
  }
}

TEST_CASE("shift covariance at a fixed level") {
  ExactPiecewise f = random_pwconst(42, 8, 2);
  for (int j : {1, 2}) {
    long long k = 3;
    ExactPiecewise g = f.shifted_arg(-Rational(Integer(k)) * pow2r(-j));  // f(. - 2^{-j} k)
    auto cf = analyze(f, 3), cg = analyze(g, 3);
    for (long long mu = -4; mu < 40; ++mu) CHECK(cg.at(j, mu + k) == cf.at(j, mu));
  }
}

TEST_CASE("frame coefficients: indicator on [0,4)") {
  ExactPiecewise f = ExactPiecewise::indicator(Rational(0), Rational(4));
  auto c = frame_coeffs(f, 4);
  for (long long mu = 0; mu < 4; ++mu) CHECK(c.at(-1, mu) == Rational(1));
  // interior atoms (both supports inside [0,4)) vanish
  for (int j = 1; j <= 4; ++j)
    for (long long mu = 1; mu < (4LL << j) - 1; ++mu) CHECK(c.at(j, mu) == Rational(0));
  // straddling atoms at the right edge carry 1/2
  for (int j = 0; j <= 4; ++j) CHECK(c.at(j, (4LL << j) - 1) == rat(1, 2));
}

TEST_CASE("frame coefficients dominate the scaled plain coefficients") {
  ExactPiecewise h = haar_atom({0, 0, Parity::Even});
  auto c = frame_coeffs(h, 3);
  CHECK(c.at(0, 0) >= Rational(1));  // 2^0 |<h,h>| = 1
  ExactPiecewise f = random_pwlinear(5);
  auto frame = frame_coeffs(f, 5);
  auto plain = scaled_by_level(analyze(f, 5));
  plain.for_each_nonzero([&](int j, long long mu, const Rational& v) {
    CHECK(frame.at(j, mu) >= rat_abs(v));
  });
}

TEST_CASE("frame coefficients of the hat: direct-integral oracle") {
  ExactPiecewise n2 = hat(0, 0);
  Rational even = inner_product(n2, extended_haar_atom(0, 0));
  Rational odd = inner_product(n2, extended_haar_atom(0, 1));
  auto c = frame_coeffs(n2, 2);
  CHECK(c.at(0, 0) == rat_abs(even) + rat_abs(odd));
  // the odd pairing vanishes by symmetry about x = 1, so the value is 1/4
  CHECK(even == rat(-1, 4));
  CHECK(odd == Rational(0));
  CHECK(c.at(0, 0) == rat(1, 4));
}

TEST_CASE("synthesize: unit coefficient gives the indicator") {
  CoeffArray<Rational> beta(-1);
  beta.set(-1, 0, Rational(1));
  CHECK(synthesize(beta) == ExactPiecewise::indicator(Rational(0), Rational(1)));
}

TEST_CASE("synthesize: staircase coefficients reproduce the generator") {
  int n = 5;
  CoeffArray<Rational> beta(n - 1);
  for (int j = 0; j < n; ++j) beta.set(j, 0, Rational(1));
  CHECK(synthesize(beta) == staircase(n));
}

TEST_CASE("synthesize: geometric coefficients concentrate into one cell") {
  int n = 4;
  CoeffArray<Rational> beta(n - 1);
  beta.set(-1, 0, Rational(1));
  for (int j = 0; j < n; ++j) beta.set(j, 0, pow2r(j));
  CHECK(synthesize(beta) == pow2r(n) * ExactPiecewise::indicator(Rational(0), pow2r(-n)));
}

TEST_CASE("round trip: analyze after synthesize recovers the coefficients") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 20; ++rep) {
    CoeffArray<Rational> beta(4);
    for (int j = -1; j <= 4; ++j)
      for (long long mu = -2; mu < 6; ++mu)
        if (rng() % 3 == 0)
          beta.set(j, mu, Rational(static_cast<long long>(rng() % 17) - 8, 4));
    ExactPiecewise f = synthesize(beta);
    auto rec = analyze(f, 4);
    bool ok = true;
    for (int j = -1; j <= 4; ++j)
      for (long long mu = -4; mu < 8; ++mu) {
        Rational expected = beta.at(j, mu);
        Rational got = j >= 0 ? Rational(rec.at(j, mu) * pow2r(j)) : rec.at(j, mu);
        ok = ok && got == expected;
      }
    CHECK(ok);
  }
}

TEST_CASE("grid pyramid matches direct interpolant pairings") {
  std::vector<Complex> vals;
  for (int i = 0; i <= 32; ++i)
    vals.emplace_back(std::sin(0.7 * i), std::cos(0.3 * i) - 1.0);
  GridFunction g(4, -3, vals, InterpMode::PiecewiseLinear);
  auto c = analyze(g, 3);
  auto cs = analyze_shifted(g, 3);
  for (int j = -1; j <= 3; ++j)
    for (long long mu = -4; mu < 12; ++mu) {
      Complex direct = inner_product(g, haar_atom({j, mu, Parity::Even}));
      CHECK(std::abs(c.at(j, mu) - direct) < 1e-13);
      if (j >= 0) {
        Complex sdirect = inner_product(g, extended_haar_atom(j, 2 * mu + 1));
        CHECK(std::abs(cs.at(j, mu) - sdirect) < 1e-13);
      }
    }
}
