#pragma once

#include "dyadlab/dyadic.hpp"
#include "dyadlab/polynomial.hpp"

#include <limits>
#include <optional>
#include <vector>

namespace dyadlab {

inline constexpr int kMaxPieceDegree = 3;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Atomic part of a distributional derivative: (location, jump height).
struct JumpList {
  std::vector<std::pair<Rational, Rational>> jumps;  // strictly increasing locations
  bool empty() const { return jumps.empty(); }
};

/// Compactly supported piecewise polynomial with exact rational breakpoints
/// and coefficients; identically zero outside [breaks.front(), breaks.back()).
/// Pieces have degree <= 3. The zero function has no breakpoints.
class ExactPiecewise {
 public:
  ExactPiecewise() = default;
  ExactPiecewise(std::vector<Rational> breaks, std::vector<Poly> pieces);

  static ExactPiecewise zero() { return {}; }
  static ExactPiecewise indicator(const Rational& a, const Rational& b);
  /// p restricted to [a, b).
  static ExactPiecewise restriction(const Poly& p, const Rational& a, const Rational& b);

  bool is_zero() const { return pieces_.empty(); }
  size_t piece_count() const { return pieces_.size(); }
  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Poly>& pieces() const { return pieces_; }

  Rational support_left() const;
  Rational support_right() const;

  /// Right-continuous evaluation (pieces live on half-open cells).
  Rational operator()(const Rational& x) const;
  /// Limit from the left.
  Rational left_limit(const Rational& x) const;

  friend bool operator==(const ExactPiecewise& a, const ExactPiecewise& b) {
    return a.breaks_ == b.breaks_ && a.pieces_ == b.pieces_;
  }

  ExactPiecewise& operator+=(const ExactPiecewise& o);
  ExactPiecewise& operator-=(const ExactPiecewise& o);
  friend ExactPiecewise operator+(ExactPiecewise a, const ExactPiecewise& b) { return a += b; }
  friend ExactPiecewise operator-(ExactPiecewise a, const ExactPiecewise& b) { return a -= b; }
  friend ExactPiecewise operator*(const Rational& s, ExactPiecewise f);

  /// f(. + delta). Negative delta shifts right.
  ExactPiecewise shifted_arg(const Rational& delta) const;
  /// f(s .), s > 0.
  ExactPiecewise scaled_arg(const Rational& s) const;
  /// f(-.).
  ExactPiecewise reflected() const;
  /// f restricted to [a, b).
  ExactPiecewise restricted(const Rational& a, const Rational& b) const;

 private:
  void canonicalize();
  std::vector<Rational> breaks_;  // strictly increasing; size = pieces_.size() + 1
  std::vector<Poly> pieces_;
};

/// Exact integral of f over [a, b] (b >= a; empty intersection gives 0).
Rational integrate(const ExactPiecewise& f, const Rational& a, const Rational& b);
Rational integrate(const ExactPiecewise& f);

/// Exact pairing <f, g> = integral of f * g (real case).
Rational inner_product(const ExactPiecewise& f, const ExactPiecewise& g);

/// x -> f(x + 2 delta) - 2 f(x + delta) + f(x), exact; delta > 0.
ExactPiecewise second_difference(const ExactPiecewise& f, const Rational& delta);

struct DerivativeParts {
  ExactPiecewise ac;   // absolutely continuous part (piecewise polynomial)
  JumpList jumps;      // atoms at discontinuity points
};
DerivativeParts derivative(const ExactPiecewise& f);

/// Antiderivative x -> integral of f over (-inf, x]. Requires total integral 0
/// so the result is again compactly supported.
ExactPiecewise antiderivative(const ExactPiecewise& f);

/// Convolution with the unit indicator: x -> integral of f over [x-1, x].
ExactPiecewise convolve_unit(const ExactPiecewise& f);

/// Conditional expectation onto level-N piecewise constants (N >= 0).
ExactPiecewise expectation_operator(const ExactPiecewise& f, int level);

/// Exact cell integrals of f over the level-`level` cells mu = mu_lo .. mu_hi-1
/// (single sweep; O(pieces + cells)).
std::vector<Rational> cell_integrals(const ExactPiecewise& f, int level, long long mu_lo,
                                     long long mu_hi);

/// Total variation of f as a measure derivative: integral |ac| + sum |jumps|.
double total_variation(const ExactPiecewise& f);

struct LpValue {
  double value = 0.0;
  bool exact = true;   // true if computed via closed forms / exact rationals
  double tol = 0.0;    // absolute quadrature tolerance when inexact
};

/// L_p norm over `domain` (default the whole line), p in (0, inf].
LpValue lp_norm(const ExactPiecewise& f, double p,
                std::optional<std::pair<Rational, Rational>> domain = std::nullopt);

/// Exact L1 norm of a polynomial over [a, b]; splits at real roots.
/// Used by lp_norm and total_variation.
LpValue poly_abs_integral(const Poly& p, const Rational& a, const Rational& b);

}  // namespace dyadlab
