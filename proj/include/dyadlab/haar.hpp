#pragma once

#include "dyadlab/coeffs.hpp"
#include "dyadlab/grid.hpp"
#include "dyadlab/piecewise.hpp"

namespace dyadlab {

enum class Parity { Even, Odd };

/// Index into the extended Haar system. (j, 2*mu + parity) identifies the
/// half-shifted atom; Even recovers the plain Haar function h_{j,mu}.
/// Level -1 atoms are the unit indicators (Even only).
struct HaarIndex {
  int level = 0;        // >= -1
  long long translation = 0;
  Parity parity = Parity::Even;
};

/// The atom for `idx`: +1/-1 on two half-cells (levels >= 0) or a unit
/// indicator (level -1).
ExactPiecewise haar_atom(const HaarIndex& idx);

/// Shifted-system atom by raw index nu (even nu = plain Haar at mu = nu/2).
ExactPiecewise extended_haar_atom(int j, long long nu);

/// Haar coefficients <f, h_{j,mu}> for j = -1..J via the averaging pyramid;
/// exact for ExactPiecewise, interpolant-exact for GridFunction.
CoeffArray<Rational> analyze(const ExactPiecewise& f, int max_level);
CoeffArray<Complex> analyze(const GridFunction& f, int max_level);

/// Half-shift coefficients <f, h-tilde_{j,2mu+1}>, stored at (j, mu), j >= 0.
CoeffArray<Rational> analyze_shifted(const ExactPiecewise& f, int max_level);
CoeffArray<Complex> analyze_shifted(const GridFunction& f, int max_level);

/// Frame data c_{j,mu}(f) = 2^j |<f,h-tilde_{j,2mu}>| + 2^j |<f,h-tilde_{j,2mu+1}>|,
/// with |<f, 1_{[mu,mu+1)}>| at level -1. Entries carry their own scaling.
CoeffArray<Rational> frame_coeffs(const ExactPiecewise& f, int max_level);
CoeffArray<double> frame_coeffs(const GridFunction& f, int max_level);

/// Direct inner-product paths (reference implementations for tests).
CoeffArray<Rational> analyze_direct(const ExactPiecewise& f, int max_level);
CoeffArray<Rational> analyze_shifted_direct(const ExactPiecewise& f, int max_level);

/// Finite synthesis sum_{j,mu} beta_{j,mu} h_{j,mu}; exact piecewise constant.
ExactPiecewise synthesize(const CoeffArray<Rational>& beta);

}  // namespace dyadlab
