#pragma once

#include <array>
#include <cmath>
#include <limits>

namespace dyadlab {

/// Smoothness / integrability / fine-index triple (s, p, q), with p, q in
/// (0, inf]. Region predicates for the various characterizations; 1/inf = 0.
struct SmoothnessParams {
  double s = 0.0;
  double p = 2.0;
  double q = 2.0;

  static constexpr double inf = std::numeric_limits<double>::infinity();

  double inv_p() const { return 1.0 / p; }
  double inv_q() const { return 1.0 / q; }

  bool valid() const { return p > 0 && q > 0 && std::isfinite(s); }

  /// max{1/p-1, 1/q-1} < s < min{1/p, 1/q, 1}
  bool unconditional_F() const {
    return valid() && std::max(inv_p() - 1, inv_q() - 1) < s &&
           s < std::min({inv_p(), inv_q(), 1.0});
  }
  /// 1/p-1 < s < min{1/p, 1}
  bool schauder_F() const { return valid() && inv_p() - 1 < s && s < std::min(inv_p(), 1.0); }
  /// 1/2 < p < inf, 1/2 < q <= inf, max{1/p-1, 1/q-1} < s < 1
  bool frame_F() const {
    return valid() && p > 0.5 && std::isfinite(p) && q > 0.5 &&
           std::max(inv_p() - 1, inv_q() - 1) < s && s < 1;
  }
  /// 1/2 < p <= inf, 1/p-1 < s < 1
  bool frame_B() const { return valid() && p > 0.5 && inv_p() - 1 < s && s < 1; }
  /// p < inf, max{1/p, 1/q, 1} - 2 < s < min{1/p, 1/q}
  bool synthesis_F() const {
    return valid() && std::isfinite(p) && std::max({inv_p(), inv_q(), 1.0}) - 2 < s &&
           s < std::min(inv_p(), inv_q());
  }
  /// max{1/p, 1} - 2 < s < 1/p
  bool synthesis_B() const {
    return valid() && std::max(inv_p(), 1.0) - 2 < s && s < inv_p();
  }
  /// 1 < p <= inf, 0 < q <= inf, 1/p < s < 1
  bool equiv_B() const { return valid() && p > 1 && inv_p() < s && s < 1; }
  /// p < inf, max{1/p, 1/q} - 2 < s < 1 + min{1/p, 1/q, 1}
  bool spline_F() const {
    return valid() && std::isfinite(p) && std::max(inv_p(), inv_q()) - 2 < s &&
           s < 1 + std::min({inv_p(), inv_q(), 1.0});
  }
  /// 1/p - 2 < s < max{1 + 1/p, 2}
  bool spline_B() const { return valid() && inv_p() - 2 < s && s < std::max(1 + inv_p(), 2.0); }
};

/// Weights of the even/center/odd neighbor bound in the two-scale coefficient
/// inequality, with rho = min{1,p,q} and sigma = s - 1/p.
struct BootstrapParams {
  std::array<double, 3> lambda{0.5, 1.0, 0.5};

  double rho(const SmoothnessParams& prm) const { return std::min({1.0, prm.p, prm.q}); }
  double sigma(const SmoothnessParams& prm) const { return prm.s - prm.inv_p(); }
  bool admissible(const SmoothnessParams& prm) const {
    return std::abs(lambda[1]) < std::exp2(sigma(prm));
  }
};

}  // namespace dyadlab
