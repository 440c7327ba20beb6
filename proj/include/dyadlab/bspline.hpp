#pragma once

#include "dyadlab/piecewise.hpp"

namespace dyadlab {

/// Cardinal B-spline of order m (1 <= m <= 4): the m-fold convolution of the
/// unit indicator. Support [0, m], degree m-1 pieces, unit integral.
struct BSpline {
  int order = 1;
  ExactPiecewise realization;
};

BSpline bspline(int order);

/// Hat function at scale j and translation mu: N_2(2^j x - mu).
ExactPiecewise hat(int level, long long mu);

struct RefinementExpansion {
  ExactPiecewise expansion;  // (1/2) N_{j+1,2mu} + N_{j+1,2mu+1} + (1/2) N_{j+1,2mu+2}
  ExactPiecewise residual;   // expansion - N_{j,mu}; exactly zero
};

/// Two-scale expansion of the hat N_{j,mu} into three finer hats.
RefinementExpansion refine_hat(int level, long long mu);

}  // namespace dyadlab
