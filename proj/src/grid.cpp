#include "dyadlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dyadlab {

GridFunction::GridFunction(int level, long long offset, std::vector<Complex> values,
                           InterpMode mode)
    : level_(level), offset_(offset), values_(std::move(values)), mode_(mode) {
  for (const auto& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("GridFunction: values must be finite");
  if (mode_ == InterpMode::PiecewiseLinear && values_.size() == 1)
    throw std::invalid_argument("GridFunction: linear mode needs at least 2 samples");
}

Complex GridFunction::operator()(double x) const {
  if (values_.empty()) return {};
  double t = std::ldexp(x, level_) - static_cast<double>(offset_);  // grid coordinate
  if (mode_ == InterpMode::PiecewiseConstant) {
    if (t < 0 || t >= static_cast<double>(values_.size())) return {};
    return values_[static_cast<size_t>(t)];
  }
  if (t < 0 || t > static_cast<double>(values_.size() - 1)) return {};
  size_t i = std::min(static_cast<size_t>(t), values_.size() - 2);
  double u = t - static_cast<double>(i);
  return values_[i] * (1.0 - u) + values_[i + 1] * u;
}

GridFunction& GridFunction::operator*=(Complex s) {
  for (auto& v : values_) v *= s;
  return *this;
}

GridFunction GridFunction::shifted_cells(long long k) const {
  GridFunction out = *this;
  out.offset_ -= k;
  return out;
}

Complex integrate(const GridFunction& f, const Rational& a, const Rational& b) {
  if (f.is_zero() || !(a < b)) return {};
  size_t cells = f.mode() == InterpMode::PiecewiseConstant ? f.size() : f.size() - 1;
  double h = std::ldexp(1.0, -f.level());
  Complex total = 0;
  Rational step = pow2r(-f.level());
  for (size_t i = 0; i < cells; ++i) {
    Rational l = std::max(a, f.node(i));
    Rational r = std::min(b, f.node(i + 1));
    if (!(l < r)) continue;
    if (f.mode() == InterpMode::PiecewiseConstant) {
      total += f.values()[i] * to_double(r - l);
    } else {
      // linear on [x_i, x_{i+1}]: v_i + (v_{i+1}-v_i) * (x-x_i)/h
      double u0 = to_double((l - f.node(i)) / step);
      double u1 = to_double((r - f.node(i)) / step);
      Complex v0 = f.values()[i], dv = f.values()[i + 1] - f.values()[i];
      total += h * (v0 * (u1 - u0) + dv * 0.5 * (u1 * u1 - u0 * u0));
    }
  }
  return total;
}

Complex integrate(const GridFunction& f) {
  if (f.is_zero()) return {};
  return integrate(f, f.support_left(), f.support_right());
}

Complex inner_product(const GridFunction& f, const ExactPiecewise& g) {
  if (f.is_zero() || g.is_zero()) return {};
  size_t cells = f.mode() == InterpMode::PiecewiseConstant ? f.size() : f.size() - 1;
  Rational step = pow2r(-f.level());
  Complex total = 0;
  // iterate exact pieces of g; within each, iterate overlapping grid cells
  const auto& br = g.breakpoints();
  Rational flo = f.support_left(), fhi = f.support_right();
  for (size_t pi = 0; pi < g.pieces().size(); ++pi) {
    Rational l = std::max(br[pi], flo);
    Rational r = std::min(br[pi + 1], fhi);
    if (!(l < r)) continue;
    const Poly& P = g.pieces()[pi];
    Poly A = P.antiderivative();
    Poly xP = Poly({Rational(0), Rational(1)}) * P;
    Poly Ax = xP.antiderivative();
    long long i0 = rational_floor_ll((l - f.node(0)) / step);
    for (long long i = std::max<long long>(0, i0); i < static_cast<long long>(cells); ++i) {
      Rational cl = std::max(l, f.node(static_cast<size_t>(i)));
      Rational cr = std::min(r, f.node(static_cast<size_t>(i + 1)));
      if (!(cl < cr)) {
        if (f.node(static_cast<size_t>(i)) >= r) break;
        continue;
      }
      double intP = to_double(A.eval(cr) - A.eval(cl));
      if (f.mode() == InterpMode::PiecewiseConstant) {
        total += f.values()[static_cast<size_t>(i)] * intP;
      } else {
        double intXP = to_double(Ax.eval(cr) - Ax.eval(cl));
        double xi = to_double(f.node(static_cast<size_t>(i)));
        double hinv = std::ldexp(1.0, f.level());
        Complex v0 = f.values()[static_cast<size_t>(i)];
        Complex dv = f.values()[static_cast<size_t>(i) + 1] - v0;
        // v0 * intP + dv * (intXP - xi*intP) / h
        total += v0 * intP + dv * (intXP - xi * intP) * hinv;
      }
    }
  }
  return total;
}

GridFunction second_difference(const GridFunction& f, const Rational& delta) {
  if (!(delta > 0)) throw std::invalid_argument("second_difference: delta must be positive");
  Rational steps = delta * pow2r(f.level());
  if (denominator(steps) != 1)
    throw std::invalid_argument("second_difference: delta must be a multiple of the grid step");
  long long k = numerator(steps).convert_to<long long>();
  // g(x) = f(x + 2k h) - 2 f(x + k h) + f(x); samples combine directly.
  size_t n = f.size();
  std::vector<Complex> out(n + 2 * static_cast<size_t>(k), Complex{});
  // output grid starts at offset - 2k so every shifted copy is covered
  for (size_t i = 0; i < n; ++i) {
    out[i] += f.values()[i];                       // f(x + 2k h) at offset - 2k
    out[i + static_cast<size_t>(k)] -= 2.0 * f.values()[i];
    out[i + 2 * static_cast<size_t>(k)] += f.values()[i];
  }
  return GridFunction(f.level(), f.offset() - 2 * k, std::move(out), f.mode());
}

std::vector<Complex> cell_averages(const GridFunction& f, int level, long long mu_lo,
                                   long long mu_hi) {
  std::vector<Complex> out(static_cast<size_t>(std::max<long long>(0, mu_hi - mu_lo)),
                           Complex{});
  if (f.is_zero() || out.empty()) return out;
  if (level >= f.level()) {
    // cells at or below grid resolution: the interpolant is a single polynomial
    // per cell, so averages come from midpoints (linear) or sample values (constant)
    double h = std::ldexp(1.0, -level);
    for (long long mu = mu_lo; mu < mu_hi; ++mu) {
      double a = static_cast<double>(mu) * h;
      if (f.mode() == InterpMode::PiecewiseConstant)
        out[static_cast<size_t>(mu - mu_lo)] = f(a + 0.5 * h);
      else
        out[static_cast<size_t>(mu - mu_lo)] =
            0.5 * (f(a) + f(a + h));  // trapezoid, exact for a linear piece
    }
    return out;
  }
  // coarser than the grid: integrate exactly
  Rational h = pow2r(-level);
  for (long long mu = mu_lo; mu < mu_hi; ++mu) {
    Rational a = Rational(Integer(mu)) * h;
    out[static_cast<size_t>(mu - mu_lo)] = integrate(f, a, a + h) * to_double(pow2r(level));
  }
  return out;
}

LpValue lp_norm(const GridFunction& f, double p) {
  if (!(p > 0)) throw std::invalid_argument("lp_norm: p must be positive");
  LpValue out;
  if (f.is_zero()) return out;
  size_t cells = f.mode() == InterpMode::PiecewiseConstant ? f.size() : f.size() - 1;
  double h = std::ldexp(1.0, -f.level());
  if (std::isinf(p)) {
    double m = 0;
    for (const auto& v : f.values()) m = std::max(m, std::abs(v));
    out.value = m;  // |linear| on a cell is maximized at the endpoints
    return out;
  }
  if (f.mode() == InterpMode::PiecewiseConstant) {
    double total = 0;
    for (size_t i = 0; i < cells; ++i) total += std::pow(std::abs(f.values()[i]), p) * h;
    out.value = std::pow(total, 1.0 / p);
    return out;
  }
  if (p == 2.0) {
    double total = 0;
    for (size_t i = 0; i < cells; ++i) {
      Complex a = f.values()[i], b = f.values()[i + 1];
      // integral over the cell of |a + (b-a)u|^2 du, u in [0,1]
      double na = std::norm(a), nb = std::norm(b);
      double cross = (a * std::conj(b)).real();
      total += h * (na + nb + cross) / 3.0;
    }
    out.value = std::sqrt(total);
    return out;
  }
  // general p on linear cells: 16-point Gauss-Legendre per cell
  static const double gx[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                               0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                               0.9445750230732326, 0.9894009349916499};
  static const double gw[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                               0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                               0.0622535239386479, 0.0271524594117541};
  double total = 0;
  for (size_t i = 0; i < cells; ++i) {
    Complex a = f.values()[i], b = f.values()[i + 1];
    double cell = 0;
    for (int k = 0; k < 8; ++k) {
      double u1 = 0.5 * (1 + gx[k]), u2 = 0.5 * (1 - gx[k]);
      cell += gw[k] * 0.5 *
              (std::pow(std::abs(a + (b - a) * u1), p) + std::pow(std::abs(a + (b - a) * u2), p));
    }
    total += cell * h;
  }
  out.value = std::pow(total, 1.0 / p);
  out.exact = false;
  out.tol = 1e-10;
  return out;
}

}  // namespace dyadlab
