#pragma once

#include "dyadlab/bspline.hpp"
#include "dyadlab/coeffs.hpp"
#include "dyadlab/grid.hpp"

#include <array>
#include <vector>

namespace dyadlab {

/// The piecewise-linear semi-orthogonal spline wavelet psi with two vanishing
/// moments, its exact expansion coefficients b_k over half-scale hats, the
/// exact single-scale Gram g_k = <psi, psi(.-k)>, and the truncated dual
/// expansion coefficients a_k with psi* = sum_k a_k psi(.-k).
struct ChuiWangSystem {
  ExactPiecewise mother;                 // psi, supported in [0,3]
  std::array<Rational, 5> b;             // b_0..b_4
  std::array<Rational, 5> gram;          // g_0..g_4 (g_k = g_{-k}, zero for |k| > 2)
  std::vector<double> a;                 // a_{-K}..a_K
  int half_window = 0;                   // K
  double residual = 0.0;                 // max_n |sum_k a_k g_{n-k} - delta_{n0}|, |n| <= K-4
  double tolerance = 0.0;

  Rational gram_at(long long k) const {
    long long m = k < 0 ? -k : k;
    return m <= 4 ? gram[static_cast<size_t>(m)] : Rational(0);
  }
  double dual_coeff(long long k) const {
    long long m = k < 0 ? -k : k;
    return m <= half_window ? a[static_cast<size_t>(k + half_window)] : 0.0;
  }
};

/// psi and its exact data (b_k, gram); no dual solve.
ChuiWangSystem chui_wang_mother();

/// Solves the banded Toeplitz biorthogonality system sum_k a_k g_{n-k} = delta_{n0},
/// growing the window until the boundary coefficient drops below `tolerance`.
ChuiWangSystem chui_wang_with_dual(double tolerance = 1e-10);

/// psi_{j,mu}(x) = psi(2^j x - mu) for j >= 0; psi_{-1,mu} = N_2(x - mu).
ExactPiecewise cw_atom(const ChuiWangSystem& sys, int level, long long mu);

/// Materialized truncated dual sum_{|k|<=K} a_k psi(x-k) sampled on a grid.
GridFunction cw_dual_realization(const ChuiWangSystem& sys, int grid_level);

/// Coefficients 2^j <f, psi_{j,mu}> for j = 0..J and <f, N_2(.-mu)> at level -1.
CoeffArray<Rational> cw_analyze(const ChuiWangSystem& sys, const ExactPiecewise& f,
                                int max_level);
CoeffArray<Complex> cw_analyze(const ChuiWangSystem& sys, const GridFunction& f, int max_level);

struct IdentityCheck {
  Rational lhs;
  Rational rhs;
};

/// <f', N_{2;j,nu}> against -2^j <f, h-tilde_{j-1,nu}> (j >= 1), or the j = 0
/// variant -<f,h_{-1,nu}> + <f,h_{-1,nu+1}>. Requires f without jump atoms.
IdentityCheck derivative_identity_check(const ExactPiecewise& f, int level, long long nu);

}  // namespace dyadlab
