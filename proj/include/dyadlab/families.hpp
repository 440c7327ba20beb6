#pragma once

#include "dyadlab/grid.hpp"
#include "dyadlab/haar.hpp"
#include "dyadlab/piecewise.hpp"

#include <cstdint>
#include <vector>

namespace dyadlab {

/// Staircase sum of the first N Haar atoms at translation 0; piecewise
/// constant at level N on [0,1).
ExactPiecewise staircase(int n);

/// 2^N 1_{[0,2^{-N})}, built directly.
ExactPiecewise geometric_staircase(int n);
/// The same function via the synthesis route 1_{[0,1)} + sum_{j<N} 2^j h_{j,0}.
ExactPiecewise geometric_staircase_synthesis(int n);

/// g(x) = f(x) - f(-x); requires supp f inside [0, inf).
ExactPiecewise odd_extension(const ExactPiecewise& f);

/// Smooth compactly supported window: 0 outside (support_lo, support_hi),
/// 1 on [plateau_lo, plateau_hi], glued with the standard exp(-1/x) ramp.
struct BumpProfile {
  double support_lo = 0.125;
  double plateau_lo = 0.25;
  double plateau_hi = 0.75;
  double support_hi = 0.875;

  double operator()(double x) const;
};

/// Real samples of the bump at dyadic level `level` (linear interpolation).
GridFunction sample_bump(const BumpProfile& profile, int level);

/// Integers j with N/4 <= j <= N/2 (the windowed-chirp frequencies).
std::vector<int> chirp_freqs(int n);
/// Integers j with N/4 < j < N/2 (the random-sign frequencies).
std::vector<int> rademacher_freqs(int n);

/// Windowed chirp sum_{N/4<=j<=N/2} 2^{-j} u(N(x-2j/N)) e^{2 pi i 2^j x},
/// sampled on [0,2] at `level` >= N+4. The windows are pairwise disjoint.
GridFunction chirp_family(int n, int level, const BumpProfile& window = BumpProfile{});

/// Seeded +-1 vector.
struct SignVector {
  std::vector<int> signs;
  uint64_t seed = 0;
  static SignVector random(size_t count, uint64_t seed);
  static SignVector all_plus(size_t count);
};

/// sum_{j in Z_N} (r_j / 2^j) e^{2 pi i 2^j x} psi(x) with psi supported in
/// (0,1), equal to 1 on [1/4,3/4]; sampled on [0,1] at `level` >= N+4.
GridFunction rademacher_family(int n, const SignVector& signs, int level);

/// The all-plus instance with the symmetric window supported in (-1/2,1/2),
/// equal to 1 on (-1/4,1/4); sampled at `level` >= N+4.
GridFunction coherent_sum(int n, int level);

/// Interval J^{N,j} on which the chirp equals 2^{-j} e^{2 pi i 2^j x} exactly.
std::pair<Rational, Rational> chirp_plateau(int n, int j);

/// Cells mu at level N whose closed cell lies inside J^{N,j}.
std::vector<long long> chirp_interior_cells(int n, int j);

/// Closed form <e^{2 pi i 2^f x}, h_{N,mu}> (no sampling).
Complex oscillation_haar_coeff(int freq_level, int n, long long mu);

/// Derivative-based prediction of <chirp, h_{N,mu}> on interior cells:
/// 2 pi i e^{2 pi i 2^j x_c} 2^{-2N-2} at the cell center x_c.
Complex chirp_taylor_prediction(int n, int j, long long mu);

/// Deterministic continuous piecewise-linear test function: `knots` values on
/// the 2^{-level} grid starting at 0, zero at both ends, slopes rational.
ExactPiecewise random_pwlinear(uint64_t seed, int knots = 9, int level = 2);

/// Deterministic piecewise-constant function on `cells` level-`level` cells.
ExactPiecewise random_pwconst(uint64_t seed, int cells = 16, int level = 4);

/// Deterministic continuous piecewise polynomial (degree <= 3) without jumps,
/// built as the antiderivative of a mean-zero random piecewise quadratic.
ExactPiecewise random_smooth_piecewise(uint64_t seed, int cells = 6, int level = 1);

}  // namespace dyadlab
