#pragma once

#include "dyadlab/coeffs.hpp"
#include "dyadlab/grid.hpp"
#include "dyadlab/haar.hpp"
#include "dyadlab/params.hpp"
#include "dyadlab/piecewise.hpp"

#include <string>

namespace dyadlab {

/// Computed quasi-norm with its truncation level and method audit trail.
struct NormReport {
  double value = 0.0;
  int max_level = 0;         // truncation level J actually used
  bool tail_at_max = false;  // q = inf: the sup was attained at level J
  bool out_of_region = false;
  std::string method;        // "rational", "rational+sqrt", "float64", ...
  SmoothnessParams params{};
};

/// Sequence-space quasi-norm over levels j = -1..J:
/// ( sum_j [ 2^{j(s-1/p)} ( sum_mu |beta_{j,mu}|^p )^{1/p} ]^q )^{1/q}.
NormReport b_norm(const CoeffArray<Rational>& beta, const SmoothnessParams& prm);
NormReport b_norm(const CoeffArray<double>& beta, const SmoothnessParams& prm);
NormReport b_norm(const CoeffArray<Complex>& beta, const SmoothnessParams& prm);

/// Pointwise variant || ( sum_j |2^{js} sum_mu beta_{j,mu} 1_{I_{j,mu}}|^q )^{1/q} ||_p,
/// p < inf. The integrand is piecewise constant at the finest level.
NormReport f_norm(const CoeffArray<Rational>& beta, const SmoothnessParams& prm);
NormReport f_norm(const CoeffArray<double>& beta, const SmoothnessParams& prm);
NormReport f_norm(const CoeffArray<Complex>& beta, const SmoothnessParams& prm);

/// b-norm of the scaled Haar data {2^j <f, h_{j,mu}>}.
NormReport dyadic_besov_norm(const ExactPiecewise& f, const SmoothnessParams& prm, int max_level);
NormReport dyadic_besov_norm(const GridFunction& f, const SmoothnessParams& prm, int max_level);

/// b-norm (resp. f-norm) of the oversampled frame data c_{j,mu}(f). Computation
/// outside the frame region is allowed but flagged in the report.
NormReport frame_besov_norm(const ExactPiecewise& f, const SmoothnessParams& prm, int max_level);
NormReport frame_besov_norm(const GridFunction& f, const SmoothnessParams& prm, int max_level);
NormReport frame_tl_norm(const ExactPiecewise& f, const SmoothnessParams& prm, int max_level);
NormReport frame_tl_norm(const GridFunction& f, const SmoothnessParams& prm, int max_level);

/// Reference norm by second differences:
/// ||f||_p + ( sum_{j<=J} [2^{js} omega_2(f, 2^{-j})_p]^q )^{1/q}, 0 < s < 2,
/// where omega_2 is maximized over a delta-grid with `subdivisions` points per scale.
NormReport ref_besov_norm(const ExactPiecewise& f, const SmoothnessParams& prm, int max_level,
                          int subdivisions = 8);
NormReport ref_besov_norm(const GridFunction& f, const SmoothnessParams& prm, int max_level,
                          int subdivisions = 8);

/// sup over delta in the grid {t i / n : i = 1..n} of ||second difference||_p.
double modulus2(const ExactPiecewise& f, const Rational& t, double p, int subdivisions = 8);
double modulus2(const GridFunction& f, const Rational& t, double p, int subdivisions = 8);

/// Assembles the reference norm from a precomputed moduli table
/// (omega[j] = omega_2(f, 2^{-j})_p for j = 0..J).
NormReport ref_besov_from_moduli(double lp_value, const std::vector<double>& omega,
                                 const SmoothnessParams& prm);

/// ||f||_p + ||f'||_p; rejects functions with jump discontinuities.
NormReport w1p_norm(const ExactPiecewise& f, double p);
/// ||f||_1 + total variation of f'.
NormReport bv_norm(const ExactPiecewise& f);

/// sup_{j >= -1} 2^{j(1-1/p)} ( sum_mu |c_{j,mu}(f)|^p )^{1/p}; p = 1 gives the
/// bounded-variation variant sup_j sum_mu |c_{j,mu}(f)|.
NormReport frame_sobolev_norm(const ExactPiecewise& f, double p, int max_level);
NormReport frame_sobolev_norm(const GridFunction& f, double p, int max_level);

/// Constant ((|l0|^rho + |l2|^rho) / (2^{sigma rho} - |l1|^rho) + 1)^{1/rho}
/// controlling the full sequence norm by its even part.
double bootstrap_constant(const SmoothnessParams& prm, const BootstrapParams& bp);

struct BootstrapReport {
  bool relation_holds = true;     // the two-scale neighbor bound, entrywise
  int violation_level = 0;
  long long violation_index = 0;
  double norm_all = 0.0;
  double norm_even = 0.0;
  double constant = 0.0;
  double ratio = 0.0;             // norm_all / norm_even
  bool bounded = false;           // ratio <= constant
};

/// Verifies the neighbor bound entrywise, then checks ||a|| <= C ||a_even||.
BootstrapReport bootstrap_verify(const CoeffArray<double>& a, const SmoothnessParams& prm,
                                 const BootstrapParams& bp);

/// Even-index part of a sequence (odd-translation entries zeroed).
CoeffArray<double> even_part(const CoeffArray<double>& a);

}  // namespace dyadlab
