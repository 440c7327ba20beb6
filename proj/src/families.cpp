#include "dyadlab/families.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace dyadlab {

ExactPiecewise staircase(int n) {
  if (n < 1) throw std::invalid_argument("staircase: N must be >= 1");
  ExactPiecewise f;
  for (int j = 0; j < n; ++j) f += haar_atom({j, 0, Parity::Even});
  return f;
}

ExactPiecewise geometric_staircase(int n) {
  if (n < 0) throw std::invalid_argument("geometric_staircase: N must be >= 0");
  return pow2r(n) * ExactPiecewise::indicator(Rational(0), pow2r(-n));
}

ExactPiecewise geometric_staircase_synthesis(int n) {
  if (n < 0) throw std::invalid_argument("geometric_staircase: N must be >= 0");
  CoeffArray<Rational> beta(std::max(n - 1, -1));
  beta.set(-1, 0, Rational(1));
  for (int j = 0; j < n; ++j) beta.set(j, 0, pow2r(j));
  return synthesize(beta);
}

ExactPiecewise odd_extension(const ExactPiecewise& f) {
  if (!f.is_zero() && f.support_left() < 0)
    throw std::invalid_argument("odd_extension: support must lie in [0, inf)");
  return f - f.reflected();
}

namespace {

// e^{-1/t} / (e^{-1/t} + e^{-1/(1-t)}) on (0,1), clamped outside.
double smooth_step(double t) {
  if (t <= 0) return 0.0;
  if (t >= 1) return 1.0;
  double a = std::exp(-1.0 / t);
  double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

}  // namespace

double BumpProfile::operator()(double x) const {
  if (x <= support_lo || x >= support_hi) return 0.0;
  if (x >= plateau_lo && x <= plateau_hi) return 1.0;
  if (x < plateau_lo) return smooth_step((x - support_lo) / (plateau_lo - support_lo));
  return smooth_step((support_hi - x) / (support_hi - plateau_hi));
}

GridFunction sample_bump(const BumpProfile& profile, int level) {
  if (level < 1) throw std::invalid_argument("sample_bump: level must be >= 1");
  double h = std::exp2(-level);
  long long lo = static_cast<long long>(std::floor(profile.support_lo / h));
  long long hi = static_cast<long long>(std::ceil(profile.support_hi / h));
  std::vector<Complex> vals(static_cast<size_t>(hi - lo + 1));
  for (long long i = lo; i <= hi; ++i)
    vals[static_cast<size_t>(i - lo)] = profile(static_cast<double>(i) * h);
  return GridFunction(level, lo, std::move(vals), InterpMode::PiecewiseLinear);
}

std::vector<int> chirp_freqs(int n) {
  std::vector<int> out;
  for (int j = (n + 3) / 4; 4 * j >= n && 2 * j <= n; ++j) out.push_back(j);
  return out;
}

std::vector<int> rademacher_freqs(int n) {
  std::vector<int> out;
  for (int j = n / 4 + 1; 2 * j < n; ++j)
    if (4 * j > n) out.push_back(j);
  return out;
}

GridFunction chirp_family(int n, int level, const BumpProfile& window) {
  if (n < 8) throw std::invalid_argument("chirp_family: N must be >= 8");
  if (level < n + 4)
    throw std::invalid_argument("chirp_family: sample level must be >= N + 4");
  const double tau = 2 * std::numbers::pi;
  auto freqs = chirp_freqs(n);
  // window j occupies (2j/N + support_lo/N, 2j/N + support_hi/N); consecutive
  // centers differ by 2/N, so the windows are disjoint
  for (size_t i = 0; i + 1 < freqs.size(); ++i) {
    double right = 2.0 * freqs[i] / n + window.support_hi / n;
    double left = 2.0 * freqs[i + 1] / n + window.support_lo / n;
    if (!(right <= left)) throw std::logic_error("chirp_family: windows overlap");
  }
  long long count = (2LL << level) + 1;  // nodes on [0, 2]
  std::vector<Complex> vals(static_cast<size_t>(count), Complex{});
  double h = std::exp2(-level);
  for (int j : freqs) {
    double base = 2.0 * j / n;
    long long i_lo = static_cast<long long>(std::floor((base + window.support_lo / n) / h));
    long long i_hi = static_cast<long long>(std::ceil((base + window.support_hi / n) / h));
    double amp = std::exp2(-j);
    double omega = tau * std::exp2(j);
    for (long long i = std::max(0LL, i_lo); i <= std::min(count - 1, i_hi); ++i) {
      double x = static_cast<double>(i) * h;
      double u = window(n * (x - base));
      if (u == 0.0) continue;
      vals[static_cast<size_t>(i)] += amp * u * Complex{std::cos(omega * x), std::sin(omega * x)};
    }
  }
  return GridFunction(level, 0, std::move(vals), InterpMode::PiecewiseLinear);
}

SignVector SignVector::random(size_t count, uint64_t seed) {
  SignVector out;
  out.seed = seed;
  out.signs.resize(count);
  std::mt19937_64 rng(seed);
  for (auto& s : out.signs) s = (rng() & 1) ? 1 : -1;
  return out;
}

SignVector SignVector::all_plus(size_t count) {
  SignVector out;
  out.signs.assign(count, 1);
  return out;
}

namespace {

GridFunction oscillating_sum(const std::vector<int>& freqs, const std::vector<int>& signs,
                             int level, const BumpProfile& psi) {
  const double tau = 2 * std::numbers::pi;
  double h = std::exp2(-level);
  long long lo = static_cast<long long>(std::floor(psi.support_lo / h));
  long long hi = static_cast<long long>(std::ceil(psi.support_hi / h));
  std::vector<Complex> vals(static_cast<size_t>(hi - lo + 1), Complex{});
  for (long long i = lo; i <= hi; ++i) {
    double x = static_cast<double>(i) * h;
    double u = psi(x);
    if (u == 0.0) continue;
    Complex acc{};
    for (size_t k = 0; k < freqs.size(); ++k) {
      double omega = tau * std::exp2(freqs[k]);
      double amp = std::exp2(-freqs[k]) * signs[k];
      acc += amp * Complex{std::cos(omega * x), std::sin(omega * x)};
    }
    vals[static_cast<size_t>(i - lo)] = u * acc;
  }
  return GridFunction(level, lo, std::move(vals), InterpMode::PiecewiseLinear);
}

}  // namespace

GridFunction rademacher_family(int n, const SignVector& signs, int level) {
  if (n < 8) throw std::invalid_argument("rademacher_family: N must be >= 8");
  if (level < n + 4)
    throw std::invalid_argument("rademacher_family: sample level must be >= N + 4");
  auto freqs = rademacher_freqs(n);
  if (signs.signs.size() != freqs.size())
    throw std::invalid_argument("rademacher_family: sign vector length must match |Z_N|");
  BumpProfile psi{0.0, 0.25, 0.75, 1.0};
  return oscillating_sum(freqs, signs.signs, level, psi);
}

GridFunction coherent_sum(int n, int level) {
  if (n < 8) throw std::invalid_argument("coherent_sum: N must be >= 8");
  if (level < n + 4)
    throw std::invalid_argument("coherent_sum: sample level must be >= N + 4");
  auto freqs = rademacher_freqs(n);
  std::vector<int> plus(freqs.size(), 1);
  BumpProfile psi{-0.5, -0.25, 0.25, 0.5};
  return oscillating_sum(freqs, plus, level, psi);
}

std::pair<Rational, Rational> chirp_plateau(int n, int j) {
  Rational base = Rational(2 * j, n);
  return {base + Rational(1, 4 * n), base + Rational(3, 4 * n)};
}

std::vector<long long> chirp_interior_cells(int n, int j) {
  auto [lo, hi] = chirp_plateau(n, j);
  Rational scale = pow2r(n);
  long long first = rational_floor_ll(lo * scale) + 1;  // 2^{-N} mu > lo
  long long last = rational_ceil_ll(hi * scale) - 2;    // 2^{-N}(mu+1) < hi
  std::vector<long long> out;
  for (long long mu = first; mu <= last; ++mu) out.push_back(mu);
  return out;
}

Complex oscillation_haar_coeff(int freq_level, int n, long long mu) {
  // <e^{i omega x}, h_{N,mu}> = -(1/(i omega)) e^{i omega a} (e^{i omega d} - 1)^2,
  // a = 2^{-N} mu, d = 2^{-N-1}
  const double tau = 2 * std::numbers::pi;
  double omega = tau * std::exp2(freq_level);
  double a = std::ldexp(static_cast<double>(mu), -n);
  double d = std::exp2(-n - 1);
  Complex iw{0.0, omega};
  Complex ea{std::cos(omega * a), std::sin(omega * a)};
  Complex ed{std::cos(omega * d), std::sin(omega * d)};
  Complex w = ed - 1.0;
  return -(ea * w * w) / iw;
}

Complex chirp_taylor_prediction(int n, int j, long long mu) {
  const double tau = 2 * std::numbers::pi;
  double omega = tau * std::exp2(j);
  double xc = std::ldexp(static_cast<double>(mu) + 0.5, -n);
  // f' = 2 pi i e^{2 pi i 2^j x} on the plateau (amplitude 2^{-j} cancels the
  // frequency factor). Pairing the linearization with the up-down atom leaves
  // -f'(center) 2^{-2N-2}.
  Complex fp = Complex{0.0, tau} * Complex{std::cos(omega * xc), std::sin(omega * xc)};
  return -fp * std::exp2(-2.0 * n - 2.0);
}

ExactPiecewise random_pwlinear(uint64_t seed, int knots, int level) {
  if (knots < 3) throw std::invalid_argument("random_pwlinear: need at least 3 knots");
  std::mt19937_64 rng(seed);
  Rational h = pow2r(-level);
  std::vector<Rational> vals(static_cast<size_t>(knots), Rational(0));
  for (int i = 1; i + 1 < knots; ++i)
    vals[static_cast<size_t>(i)] =
        Rational(static_cast<long long>(rng() % 65) - 32, 16);  // in [-2, 2]
  std::vector<Rational> nb;
  std::vector<Poly> np;
  nb.push_back(Rational(0));
  Rational scale = pow2r(level);
  for (int i = 0; i + 1 < knots; ++i) {
    Rational xi = Rational(Integer(i)) * h;
    Rational slope = (vals[static_cast<size_t>(i + 1)] - vals[static_cast<size_t>(i)]) * scale;
    // v_i + slope (x - x_i)
    np.push_back(Poly({vals[static_cast<size_t>(i)] - slope * xi, slope}));
    nb.push_back(Rational(Integer(i) + 1) * h);
  }
  return ExactPiecewise(std::move(nb), std::move(np));
}

ExactPiecewise random_pwconst(uint64_t seed, int cells, int level) {
  if (cells < 1) throw std::invalid_argument("random_pwconst: need at least one cell");
  std::mt19937_64 rng(seed);
  Rational h = pow2r(-level);
  std::vector<Rational> nb;
  std::vector<Poly> np;
  nb.push_back(Rational(0));
  for (int i = 0; i < cells; ++i) {
    np.push_back(Poly::constant(Rational(static_cast<long long>(rng() % 33) - 16, 8)));
    nb.push_back(Rational(Integer(i) + 1) * h);
  }
  return ExactPiecewise(std::move(nb), std::move(np));
}

ExactPiecewise random_smooth_piecewise(uint64_t seed, int cells, int level) {
  if (cells < 2) throw std::invalid_argument("random_smooth_piecewise: need at least 2 cells");
  std::mt19937_64 rng(seed);
  Rational h = pow2r(-level);
  std::vector<Rational> nb;
  std::vector<Poly> np;
  nb.push_back(Rational(0));
  auto coin = [&](long long range, long long den) {
    return Rational(static_cast<long long>(rng() % static_cast<uint64_t>(2 * range + 1)) - range,
                    den);
  };
  for (int i = 0; i < cells; ++i) {
    np.push_back(Poly({coin(8, 4), coin(8, 4), coin(8, 4)}));
    nb.push_back(Rational(Integer(i) + 1) * h);
  }
  ExactPiecewise g(std::move(nb), std::move(np));
  // remove the mean so the antiderivative is compactly supported
  Rational mass = integrate(g);
  Rational len = g.support_right() - g.support_left();
  g -= (mass / len) * ExactPiecewise::indicator(g.support_left(), g.support_right());
  return antiderivative(g);
}

}  // namespace dyadlab
