#pragma once

#include "dyadlab/piecewise.hpp"

#include <complex>
#include <vector>

namespace dyadlab {

using Complex = std::complex<double>;

enum class InterpMode { PiecewiseConstant, PiecewiseLinear };

/// Uniform dyadic-grid samples with complex values, interpreted as the
/// piecewise-constant or piecewise-linear interpolant. Sample i sits at
/// x_i = 2^{-L}(offset + i). Finite support; zero outside the sampled range.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(int level, long long offset, std::vector<Complex> values, InterpMode mode);

  int level() const { return level_; }
  long long offset() const { return offset_; }
  InterpMode mode() const { return mode_; }
  const std::vector<Complex>& values() const { return values_; }
  size_t size() const { return values_.size(); }
  bool is_zero() const { return values_.empty(); }

  Rational node(size_t i) const {
    return Rational(Integer(offset_) + Integer(i)) * pow2r(-level_);
  }
  double node_d(size_t i) const {
    return std::ldexp(static_cast<double>(offset_) + static_cast<double>(i), -level_);
  }
  Rational support_left() const { return node(0); }
  Rational support_right() const {
    return mode_ == InterpMode::PiecewiseConstant ? node(values_.size()) : node(values_.size() - 1);
  }

  Complex operator()(double x) const;

  GridFunction& operator*=(Complex s);

  /// Shift the argument by an integer number of grid steps: g(x) = f(x + k 2^{-L}).
  GridFunction shifted_cells(long long k) const;

 private:
  int level_ = 0;
  long long offset_ = 0;
  std::vector<Complex> values_;
  InterpMode mode_ = InterpMode::PiecewiseLinear;
};

/// Exact integral of the interpolant over [a, b].
Complex integrate(const GridFunction& f, const Rational& a, const Rational& b);
Complex integrate(const GridFunction& f);

/// <f, g> = integral f * g for real-valued exact g (atoms are real); the
/// integral of the interpolant is evaluated in closed form per cell.
Complex inner_product(const GridFunction& f, const ExactPiecewise& g);

/// Second difference with delta an exact multiple of the grid step.
GridFunction second_difference(const GridFunction& f, const Rational& delta);

/// Average of the interpolant over the level-`level` cells mu_lo .. mu_hi-1,
/// exact for the interpolant; requires level >= grid level for the fast path
/// and evaluates midpoints when level exceeds the grid resolution.
std::vector<Complex> cell_averages(const GridFunction& f, int level, long long mu_lo,
                                   long long mu_hi);

LpValue lp_norm(const GridFunction& f, double p);

}  // namespace dyadlab
