#include "dyadlab/bspline.hpp"

#include <stdexcept>

namespace dyadlab {

BSpline bspline(int order) {
  if (order < 1 || order > 4)
    throw std::invalid_argument("bspline: order must be between 1 and 4");
  ExactPiecewise f = ExactPiecewise::indicator(Rational(0), Rational(1));
  for (int m = 2; m <= order; ++m) f = convolve_unit(f);
  return BSpline{order, std::move(f)};
}

ExactPiecewise hat(int level, long long mu) {
  // N_2(2^j x - mu), supported on [2^{-j} mu, 2^{-j}(mu+2)]
  Rational h = pow2r(-level);
  Rational a = Rational(Integer(mu)) * h;
  Rational scale = pow2r(level);
  // rising piece: 2^j x - mu on [a, a+h); falling: mu + 2 - 2^j x on [a+h, a+2h)
  Poly up({Rational(-Integer(mu)), scale});
  Poly down({Rational(Integer(mu) + 2), -scale});
  return ExactPiecewise({a, a + h, a + 2 * h}, {up, down});
}

RefinementExpansion refine_hat(int level, long long mu) {
  RefinementExpansion out;
  Rational half(1, 2);
  out.expansion = half * hat(level + 1, 2 * mu);
  out.expansion += hat(level + 1, 2 * mu + 1);
  out.expansion += half * hat(level + 1, 2 * mu + 2);
  out.residual = out.expansion - hat(level, mu);
  return out;
}

}  // namespace dyadlab
