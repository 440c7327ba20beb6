#include "dyadlab/chui_wang.hpp"

#include "dyadlab/haar.hpp"

#include <cmath>
#include <stdexcept>

namespace dyadlab {

namespace {

// Solves the symmetric positive definite pentadiagonal system A x = e_center,
// A[i][j] = band(|i-j|), by banded Cholesky (bandwidth 2).
std::vector<double> solve_toeplitz_pentadiagonal(const std::array<double, 3>& band, int n) {
  // L stored as three diagonals: d (main), e (first sub), f (second sub)
  std::vector<double> d(n), e(n, 0.0), f(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double aii = band[0];
    if (i >= 1) aii -= e[i - 1] * e[i - 1];
    if (i >= 2) aii -= f[i - 2] * f[i - 2];
    if (aii <= 0.0) throw std::runtime_error("dual solve: matrix not positive definite");
    d[i] = std::sqrt(aii);
    if (i + 1 < n) {
      double v = band[1];
      if (i >= 1) v -= e[i - 1] * f[i - 1];
      e[i] = v / d[i];
    }
    if (i + 2 < n) f[i] = band[2] / d[i];
  }
  // forward solve L y = e_center
  int center = n / 2;
  std::vector<double> y(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double v = (i == center) ? 1.0 : 0.0;
    if (i >= 1) v -= e[i - 1] * y[i - 1];
    if (i >= 2) v -= f[i - 2] * y[i - 2];
    y[i] = v / d[i];
  }
  // backward solve L^T x = y
  std::vector<double> x(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double v = y[i];
    if (i + 1 < n) v -= e[i] * x[i + 1];
    if (i + 2 < n) v -= f[i] * x[i + 2];
    x[i] = v / d[i];
  }
  return x;
}

}  // namespace

ChuiWangSystem chui_wang_mother() {
  ChuiWangSystem sys;
  BSpline n4 = bspline(4);
  auto value = [&](long long k) { return n4.realization(Rational(Integer(k))); };
  // psi(x) = (1/2) sum_{l=0..2} (-1)^l N4(l+1) N4''(2x-l), with
  // N4'' expanded over hats: N4''(y) = sum_{i=0..2} (-1)^i C(2,i) N2(y-i).
  const long long choose2[3] = {1, 2, 1};
  for (int k = 0; k <= 4; ++k) {
    Rational sum(0);
    for (int i = 0; i <= 2; ++i) {
      int l = k - i;
      if (l < 0 || l > 2) continue;
      sum += Rational(Integer(choose2[i])) * value(l + 1);
    }
    sys.b[static_cast<size_t>(k)] = Rational(k % 2 == 0 ? 1 : -1, 2) * sum;
  }
  ExactPiecewise psi;
  for (int k = 0; k <= 4; ++k) psi += sys.b[static_cast<size_t>(k)] * hat(1, k);
  sys.mother = std::move(psi);
  for (long long k = 0; k <= 4; ++k)
    sys.gram[static_cast<size_t>(k)] =
        inner_product(sys.mother, sys.mother.shifted_arg(Rational(-Integer(k))));
  return sys;
}

ChuiWangSystem chui_wang_with_dual(double tolerance) {
  if (!(tolerance > 0)) throw std::invalid_argument("dual solve: tolerance must be positive");
  ChuiWangSystem sys = chui_wang_mother();
  sys.tolerance = tolerance;
  std::array<double, 3> band = {to_double(sys.gram[0]), to_double(sys.gram[1]),
                                to_double(sys.gram[2])};
  int K = 20;
  const int cap = 200;
  for (;;) {
    int n = 2 * K + 1;
    auto a = solve_toeplitz_pentadiagonal(band, n);
    double boundary = std::max(std::abs(a.front()), std::abs(a.back()));
    if (boundary < tolerance || K >= cap) {
      if (boundary >= tolerance)
        throw std::runtime_error("dual solve: window cap reached without convergence");
      sys.a = std::move(a);
      sys.half_window = K;
      break;
    }
    K = std::min(2 * K, cap);
  }
  // residual of the biorthogonality relations over the interior window
  double res = 0.0;
  for (long long n = -(sys.half_window - 4); n <= sys.half_window - 4; ++n) {
    double s = 0.0;
    for (long long k = n - 2; k <= n + 2; ++k)
      s += sys.dual_coeff(k) * to_double(sys.gram_at(n - k));
    s -= (n == 0) ? 1.0 : 0.0;
    res = std::max(res, std::abs(s));
  }
  sys.residual = res;
  return sys;
}

ExactPiecewise cw_atom(const ChuiWangSystem& sys, int level, long long mu) {
  if (level < -1) throw std::invalid_argument("cw_atom: level must be >= -1");
  if (level == -1) return hat(0, mu);
  return sys.mother.scaled_arg(pow2r(level)).shifted_arg(-Rational(Integer(mu)) * pow2r(-level));
}

GridFunction cw_dual_realization(const ChuiWangSystem& sys, int grid_level) {
  if (sys.a.empty()) throw std::invalid_argument("cw_dual_realization: dual not solved");
  long long K = sys.half_window;
  // support of the truncated dual: [-K, K+3]
  Rational h = pow2r(-grid_level);
  long long lo = -K * (1LL << grid_level);
  long long n = (2 * K + 3) * (1LL << grid_level) + 1;
  std::vector<Complex> vals(static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i) {
    Rational x = Rational(Integer(lo + i)) * h;
    double v = 0.0;
    long long kmin = rational_floor_ll(x) - 3, kmax = rational_floor_ll(x) + 1;
    for (long long k = std::max(-K, kmin); k <= std::min(K, kmax); ++k)
      v += sys.dual_coeff(k) * to_double(sys.mother(x - Rational(Integer(k))));
    vals[static_cast<size_t>(i)] = v;
  }
  return GridFunction(grid_level, lo, std::move(vals), InterpMode::PiecewiseLinear);
}

namespace {

template <class F, class V>
CoeffArray<V> cw_analyze_impl(const ChuiWangSystem& sys, const F& f, int max_level) {
  CoeffArray<V> out(max_level, CoeffConvention::Scaled);
  if (f.is_zero()) return out;
  Rational lo = f.support_left(), hi = f.support_right();
  for (int j = -1; j <= max_level; ++j) {
    Rational scale = pow2r(std::max(j, 0));
    long long width = j < 0 ? 2 : 3;  // support length of the atom in scaled units
    long long m_lo = rational_floor_ll(lo * scale) - width;
    long long m_hi = rational_ceil_ll(hi * scale) + 1;
    for (long long mu = m_lo; mu < m_hi; ++mu) {
      V c = inner_product(f, cw_atom(sys, j, mu));
      if (j >= 0) c = detail::scale_pow2(c, j);
      if (c != V{}) out.set(j, mu, c);
    }
  }
  return out;
}

}  // namespace

CoeffArray<Rational> cw_analyze(const ChuiWangSystem& sys, const ExactPiecewise& f,
                                int max_level) {
  return cw_analyze_impl<ExactPiecewise, Rational>(sys, f, max_level);
}
CoeffArray<Complex> cw_analyze(const ChuiWangSystem& sys, const GridFunction& f, int max_level) {
  return cw_analyze_impl<GridFunction, Complex>(sys, f, max_level);
}

IdentityCheck derivative_identity_check(const ExactPiecewise& f, int level, long long nu) {
  if (level < 0) throw std::invalid_argument("derivative identity: level must be >= 0");
  DerivativeParts d = derivative(f);
  if (!d.jumps.empty())
    throw std::invalid_argument("derivative identity: input must have no jump discontinuities");
  IdentityCheck out;
  out.lhs = inner_product(d.ac, hat(level, nu));
  if (level >= 1) {
    out.rhs = -pow2r(level) * inner_product(f, extended_haar_atom(level - 1, nu));
  } else {
    out.rhs = -inner_product(f, extended_haar_atom(-1, nu)) +
              inner_product(f, extended_haar_atom(-1, nu + 1));
  }
  return out;
}

}  // namespace dyadlab
