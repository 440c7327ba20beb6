#include <doctest.h>

#include "dyadlab/families.hpp"
#include "dyadlab/norms.hpp"

#include <cmath>
#include <numbers>

using namespace dyadlab;

namespace {
constexpr double kInfE = SmoothnessParams::inf;
const double kTau = 2 * std::numbers::pi;
}  // namespace

TEST_CASE("staircase basics") {
  CHECK(staircase(1) == haar_atom({0, 0, Parity::Even}));
  for (int n : {3, 6}) {
    ExactPiecewise f = staircase(n);
    // all atoms are +1 on [0, 2^{-n})
    CHECK(f(pow2r(-n) / 2) == Rational(n));
    // exactly n nonzero Haar coefficients at levels >= 0, each 2^{-j} at (j,0)
    auto c = analyze(f, n + 2);
    size_t nonzero = 0;
    c.for_each_nonzero([&](int j, long long mu, const Rational& v) {
      if (j < 0) return;
      ++nonzero;
      CHECK(mu == 0);
      CHECK(v == pow2r(-j));
    });
    CHECK(nonzero == static_cast<size_t>(n));
  }
  CHECK_THROWS_AS(staircase(0), std::invalid_argument);
}

TEST_CASE("geometric staircase: two routes agree exactly") {
  CHECK(geometric_staircase(0) == ExactPiecewise::indicator(Rational(0), Rational(1)));
  for (int n : {0, 1, 5, 9}) {
    ExactPiecewise direct = geometric_staircase(n);
    ExactPiecewise synth = geometric_staircase_synthesis(n);
    CHECK((direct - synth).is_zero());
    CHECK(lp_norm(direct, 1.0).value == 1.0);
    CHECK(lp_norm(direct, kInfE).value == std::exp2(n));
  }
}

TEST_CASE("odd extension") {
  ExactPiecewise ind = ExactPiecewise::indicator(Rational(0), Rational(1));
  ExactPiecewise g = odd_extension(ind);
  CHECK(g(rat(1, 2)) == Rational(1));
  CHECK(g(rat(-1, 2)) == Rational(-1));
  // oddness at 64 interior sample points
  ExactPiecewise f = random_pwlinear(13);
  ExactPiecewise gf = odd_extension(f);
  for (int i = 0; i < 64; ++i) {
    Rational x = Rational(2 * i + 1, 64);
    CHECK(gf(x) == -gf(-x));
  }
  // dyadic data of the extension dominates that of the original
  SmoothnessParams prm{0.5, 2.0, kInfE};
  CHECK(dyadic_besov_norm(gf, prm, 8).value >= dyadic_besov_norm(f, prm, 8).value * (1 - 1e-12));
  // support must not cross zero
  CHECK_THROWS_AS(odd_extension(ExactPiecewise::indicator(Rational(-1), Rational(1))),
                  std::invalid_argument);
}

TEST_CASE("bump profile: plateau, support, range") {
  BumpProfile u;
  CHECK(u(0.5) == 1.0);
  CHECK(u(0.25) == 1.0);
  CHECK(u(0.75) == 1.0);
  CHECK(u(0.125) == 0.0);
  CHECK(u(0.875) == 0.0);
  CHECK(u(-1.0) == 0.0);
  for (double x = 0.0; x <= 1.0; x += 0.01) {
    CHECK(u(x) >= 0.0);
    CHECK(u(x) <= 1.0);
  }
  GridFunction g = sample_bump(u, 8);
  CHECK(g.mode() == InterpMode::PiecewiseLinear);
  CHECK(lp_norm(g, kInfE).value == 1.0);
}

TEST_CASE("frequency index sets") {
  CHECK(chirp_freqs(12) == std::vector<int>{3, 4, 5, 6});
  CHECK(chirp_freqs(13) == std::vector<int>{4, 5, 6});
  CHECK(rademacher_freqs(16) == std::vector<int>{5, 6, 7});
  CHECK(rademacher_freqs(12) == std::vector<int>{4, 5});
}

TEST_CASE("chirp family: windows, plateau values, sup bound") {
  int n = 8, level = 12;
  GridFunction f = chirp_family(n, level);
  CHECK(f.size() == (2u << level) + 1);
  // on the plateau of window j the function equals 2^{-j} e^{2 pi i 2^j x}
  for (int j : chirp_freqs(n)) {
    auto [lo, hi] = chirp_plateau(n, j);
    double x = 0.5 * (to_double(lo) + to_double(hi));
    // snap to the sample grid so interpolation does not enter
    x = std::ldexp(std::round(std::ldexp(x, level)), -level);
    Complex expect = std::exp2(-j) * Complex{std::cos(kTau * std::exp2(j) * x),
                                             std::sin(kTau * std::exp2(j) * x)};
    CHECK(std::abs(f(x) - expect) < 1e-14);
  }
  CHECK(lp_norm(f, kInfE).value <= 2 * std::exp2(-n / 4.0));
  CHECK_THROWS_AS(chirp_family(4, 12), std::invalid_argument);
  CHECK_THROWS_AS(chirp_family(12, 12), std::invalid_argument);  // undersampled
}

TEST_CASE("chirp coefficients match the derivative prediction on interior cells") {
  int n = 10;
  GridFunction f = chirp_family(n, n + 4);
  auto coeffs = analyze(f, n);
  double worst = 0;
  size_t counted = 0;
  for (int j : chirp_freqs(n)) {
    for (long long mu : chirp_interior_cells(n, j)) {
      Complex meas = coeffs.at(n, mu);
      Complex pred = chirp_taylor_prediction(n, j, mu);
      worst = std::max(worst, std::abs(meas - pred) / std::abs(pred));
      ++counted;
    }
  }
  CHECK(counted > 0);
  CHECK(worst < 0.10);
  // the prediction magnitude is the universal 2 pi 2^{-2N-2}
  CHECK(std::abs(chirp_taylor_prediction(n, 3, 7)) ==
        doctest::Approx(kTau * std::exp2(-2.0 * n - 2.0)).epsilon(1e-12));
}

TEST_CASE("closed-form oscillation coefficient matches the sampled pairing") {
  int n = 6, j = 2;
  // dense complex exponential restricted to [0, 2], sampled far above the frequency
  int level = 14;
  long long count = (2LL << level) + 1;
  std::vector<Complex> vals(static_cast<size_t>(count));
  for (long long i = 0; i < count; ++i) {
    double x = std::ldexp(static_cast<double>(i), -level);
    vals[static_cast<size_t>(i)] = Complex{std::cos(kTau * std::exp2(j) * x),
                                           std::sin(kTau * std::exp2(j) * x)};
  }
  GridFunction g(level, 0, std::move(vals), InterpMode::PiecewiseLinear);
  for (long long mu : {3LL, 17LL, 40LL}) {
    Complex direct = inner_product(g, haar_atom({n, mu, Parity::Even}));
    Complex closed = oscillation_haar_coeff(j, n, mu);
    CHECK(std::abs(direct - closed) < 1e-9);
  }
}

TEST_CASE("rademacher family: sign flips negate, length enforced, deterministic") {
  int n = 10;
  auto freqs = rademacher_freqs(n);
  SignVector plus = SignVector::all_plus(freqs.size());
  SignVector minus = plus;
  for (auto& s : minus.signs) s = -1;
  GridFunction fp = rademacher_family(n, plus, n + 4);
  GridFunction fm = rademacher_family(n, minus, n + 4);
  REQUIRE(fp.size() == fm.size());
  for (size_t i = 0; i < fp.size(); ++i) CHECK(fp.values()[i] == -fm.values()[i]);
  SignVector bad = SignVector::all_plus(freqs.size() + 1);
  CHECK_THROWS_AS(rademacher_family(n, bad, n + 4), std::invalid_argument);
  // seeded generation is reproducible
  SignVector a = SignVector::random(freqs.size(), 42), b = SignVector::random(freqs.size(), 42);
  CHECK(a.signs == b.signs);
}

TEST_CASE("coherent sum concentrates the central coefficient") {
  int n = 10;
  GridFunction f = coherent_sum(n, n + 4);
  auto coeffs = analyze(f, n);
  double central = std::ldexp(std::abs(coeffs.at(n, 0)), 2 * n);
  double card = static_cast<double>(rademacher_freqs(n).size());
  CHECK(central >= 0.5 * kTau * card / 4.0);
  CHECK(central <= 2.0 * kTau * card / 4.0);
}

TEST_CASE("random-sign ensemble reproduces the root-N energy growth") {
  // Monte-Carlo over seeded sign vectors with the closed-form coefficients;
  // at p = 2 the expected per-cell energy is exactly the frequency count
  const int trials = 64;
  const long long sample_cells = 512;
  for (int n : {16, 24, 32}) {
    auto freqs = rademacher_freqs(n);
    double card = static_cast<double>(freqs.size());
    // cells well inside the plateau (1/4, 3/4): start at 3/8
    long long mu0 = 3LL << (n - 3);
    double acc = 0;
    for (int t = 0; t < trials; ++t) {
      SignVector sv = SignVector::random(freqs.size(), 1000 + static_cast<uint64_t>(t));
      for (long long c = 0; c < sample_cells; ++c) {
        Complex sum{};
        for (size_t k = 0; k < freqs.size(); ++k) {
          Complex coeff = oscillation_haar_coeff(freqs[k], n, mu0 + c);
          sum += std::exp2(-freqs[k]) * static_cast<double>(sv.signs[k]) * coeff;
        }
        double v = std::ldexp(std::abs(sum), n);  // |<f_t, 2^N h_{N,mu}>|
        acc += v * v;
      }
    }
    double mean_sq = acc / (trials * sample_cells);
    double predicted = kTau * std::exp2(-n - 2.0) * std::sqrt(card);
    double ratio = std::sqrt(mean_sq) / predicted;
    CHECK(ratio >= 0.5);
    CHECK(ratio <= 2.0);
  }
}

TEST_CASE("corpus generators are deterministic and well-formed") {
  ExactPiecewise a = random_pwlinear(7), b = random_pwlinear(7);
  CHECK(a == b);
  CHECK(derivative(a).jumps.empty());
  ExactPiecewise s = random_smooth_piecewise(9);
  CHECK(derivative(s).jumps.empty());
  CHECK(integrate(random_pwconst(3)) == integrate(random_pwconst(3)));
}
