#include "dyadlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dyadlab {

namespace {

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

// Per-level l_p aggregate. Exact rational bookkeeping where possible:
// `r` holds the value (squared if `squared`) when `exact` is set.
struct LevelAgg {
  bool exact = false;
  bool squared = false;
  Rational r;
  double d = 0.0;
  bool zero = true;

  double as_double() const {
    if (!exact) return d;
    double v = to_double(r);
    return squared ? std::sqrt(v) : v;
  }
};

double abs_of(const Rational& x) { return std::abs(to_double(x)); }
double abs_of(double x) { return std::abs(x); }
double abs_of(const Complex& x) { return std::abs(x); }

LevelAgg level_lp(const LevelSeq<Rational>& L, double p) {
  LevelAgg a;
  bool any = false;
  for (const auto& x : L.v)
    if (x != 0) any = true;
  a.zero = !any;
  if (!any) {
    a.exact = true;
    a.r = Rational(0);
    return a;
  }
  if (std::isinf(p)) {
    Rational m(0);
    for (const auto& x : L.v) m = std::max(m, rat_abs(x));
    a.exact = true;
    a.r = m;
    return a;
  }
  if (p == 1.0) {
    Rational s(0);
    for (const auto& x : L.v) s += rat_abs(x);
    a.exact = true;
    a.r = s;
    return a;
  }
  if (p == 2.0) {
    Rational s(0);
    for (const auto& x : L.v) s += x * x;
    a.exact = true;
    a.squared = true;
    a.r = s;
    return a;
  }
  double s = 0;
  for (const auto& x : L.v) s += std::pow(abs_of(x), p);
  a.d = std::pow(s, 1.0 / p);
  return a;
}

template <class T>
LevelAgg level_lp(const LevelSeq<T>& L, double p) {
  LevelAgg a;
  bool any = false;
  for (const auto& x : L.v)
    if (x != T{}) any = true;
  a.zero = !any;
  if (!any) return a;
  if (std::isinf(p)) {
    double m = 0;
    for (const auto& x : L.v) m = std::max(m, abs_of(x));
    a.d = m;
    return a;
  }
  double s = 0;
  for (const auto& x : L.v) s += std::pow(abs_of(x), p);
  a.d = std::pow(s, 1.0 / p);
  return a;
}

template <class T>
NormReport b_norm_impl(const CoeffArray<T>& beta, const SmoothnessParams& prm) {
  if (!(prm.p > 0) || !(prm.q > 0))
    throw std::invalid_argument("b_norm: p and q must be positive");
  NormReport rep;
  rep.params = prm;
  rep.max_level = beta.max_level();
  const double sp = prm.s - prm.inv_p();
  const bool weights_integral = near_integer(sp);          // 2^{j sp} rational
  const bool weights_half_integral = near_integer(2 * sp); // 2^{2 j sp} rational

  std::vector<LevelAgg> agg(static_cast<size_t>(beta.max_level() + 2));
  std::vector<int> levels;
  for (int j = -1; j <= beta.max_level(); ++j) {
    agg[static_cast<size_t>(j + 1)] = level_lp(beta.level(j), prm.p);
    levels.push_back(j);
  }

  bool all_exact = true, any_squared = false;
  for (const auto& a : agg) {
    all_exact = all_exact && (a.exact || a.zero);
    any_squared = any_squared || (a.exact && a.squared && !a.zero);
  }

  auto weight_exp = [&](int j) { return static_cast<double>(j) * sp; };

  if (std::isinf(prm.q)) {
    // sup_j 2^{j sp} m_j; exact comparisons on squares when possible
    if (all_exact && weights_half_integral) {
      Rational best(0);
      int arg = -1;
      bool use_squares = any_squared || !weights_integral;
      for (int j : levels) {
        const auto& a = agg[static_cast<size_t>(j + 1)];
        if (a.zero) continue;
        Rational t;
        if (use_squares) {
          Rational m2 = a.squared ? a.r : a.r * a.r;
          t = m2 * pow2r(static_cast<long>(std::llround(2 * j * sp)));
        } else {
          t = a.r * pow2r(static_cast<long>(std::llround(j * sp)));
        }
        if (t > best) {
          best = t;
          arg = j;
        }
      }
      rep.value = use_squares ? std::sqrt(to_double(best)) : to_double(best);
      rep.tail_at_max = (arg == beta.max_level());
      rep.method = use_squares ? "rational+sqrt" : "rational";
      return rep;
    }
    double best = 0;
    int arg = -1;
    for (int j : levels) {
      const auto& a = agg[static_cast<size_t>(j + 1)];
      if (a.zero) continue;
      double t = std::exp2(weight_exp(j)) * a.as_double();
      if (t > best) {
        best = t;
        arg = j;
      }
    }
    rep.value = best;
    rep.tail_at_max = (arg == beta.max_level());
    rep.method = "float64";
    return rep;
  }

  if (prm.q == 1.0 && all_exact && !any_squared && weights_integral) {
    Rational s(0);
    for (int j : levels) {
      const auto& a = agg[static_cast<size_t>(j + 1)];
      if (a.zero) continue;
      s += a.r * pow2r(static_cast<long>(std::llround(j * sp)));
    }
    rep.value = to_double(s);
    rep.method = "rational";
    return rep;
  }
  if (prm.q == 2.0 && all_exact && weights_half_integral) {
    Rational s(0);
    for (int j : levels) {
      const auto& a = agg[static_cast<size_t>(j + 1)];
      if (a.zero) continue;
      Rational m2 = a.squared ? a.r : a.r * a.r;
      s += m2 * pow2r(static_cast<long>(std::llround(2 * j * sp)));
    }
    rep.value = std::sqrt(to_double(s));
    rep.method = "rational+sqrt";
    return rep;
  }

  double s = 0;
  for (int j : levels) {
    const auto& a = agg[static_cast<size_t>(j + 1)];
    if (a.zero) continue;
    s += std::pow(std::exp2(weight_exp(j)) * a.as_double(), prm.q);
  }
  rep.value = std::pow(s, 1.0 / prm.q);
  rep.method = "float64";
  return rep;
}

template <class T>
NormReport f_norm_impl(const CoeffArray<T>& beta, const SmoothnessParams& prm) {
  if (!(prm.p > 0) || !(prm.q > 0))
    throw std::invalid_argument("f_norm: p and q must be positive");
  if (std::isinf(prm.p)) throw std::invalid_argument("f_norm: p must be finite");
  NormReport rep;
  rep.params = prm;
  rep.max_level = beta.max_level();
  rep.method = "float64";
  const int G = std::max(beta.max_level(), 0);  // finest cell level
  // cell window at level G over the union of level supports
  long long lo = 0, hi = 0;
  bool any = false;
  for (int j = -1; j <= beta.max_level(); ++j) {
    const auto& L = beta.level(j);
    if (L.empty()) continue;
    int g = std::max(j, 0);
    long long l = L.mu_begin() * (1LL << (G - g)), h = L.mu_end() * (1LL << (G - g));
    if (!any) {
      lo = l;
      hi = h;
      any = true;
    } else {
      lo = std::min(lo, l);
      hi = std::max(hi, h);
    }
  }
  if (!any) return rep;
  const double cell = std::exp2(-G);
  double integral = 0;
  bool tail = false;
  for (long long nu = lo; nu < hi; ++nu) {
    double inner;
    if (std::isinf(prm.q)) {
      inner = 0;
      for (int j = -1; j <= beta.max_level(); ++j) {
        int g = std::max(j, 0);
        double v = std::exp2(j * prm.s) * abs_of(beta.at(j, nu >> (G - g)));
        if (v > inner) {
          inner = v;
          tail = tail || (v > 0 && j == beta.max_level());
        }
      }
    } else {
      double s = 0;
      for (int j = -1; j <= beta.max_level(); ++j) {
        int g = std::max(j, 0);
        double v = abs_of(beta.at(j, nu >> (G - g)));
        if (v != 0) s += std::pow(std::exp2(j * prm.s) * v, prm.q);
      }
      inner = std::pow(s, 1.0 / prm.q);
    }
    if (inner != 0) integral += std::pow(inner, prm.p) * cell;
  }
  rep.value = std::pow(integral, 1.0 / prm.p);
  rep.tail_at_max = std::isinf(prm.q) && tail;
  return rep;
}

}  // namespace

NormReport b_norm(const CoeffArray<Rational>& beta, const SmoothnessParams& prm) {
  return b_norm_impl(beta, prm);
}
NormReport b_norm(const CoeffArray<double>& beta, const SmoothnessParams& prm) {
  return b_norm_impl(beta, prm);
}
NormReport b_norm(const CoeffArray<Complex>& beta, const SmoothnessParams& prm) {
  return b_norm_impl(beta, prm);
}
NormReport f_norm(const CoeffArray<Rational>& beta, const SmoothnessParams& prm) {
  return f_norm_impl(beta, prm);
}
NormReport f_norm(const CoeffArray<double>& beta, const SmoothnessParams& prm) {
  return f_norm_impl(beta, prm);
}
NormReport f_norm(const CoeffArray<Complex>& beta, const SmoothnessParams& prm) {
  return f_norm_impl(beta, prm);
}

NormReport dyadic_besov_norm(const ExactPiecewise& f, const SmoothnessParams& prm,
                             int max_level) {
  NormReport rep = b_norm(scaled_by_level(analyze(f, max_level)), prm);
  rep.method += "|haar-pyramid";
  return rep;
}
NormReport dyadic_besov_norm(const GridFunction& f, const SmoothnessParams& prm, int max_level) {
  NormReport rep = b_norm(scaled_by_level(analyze(f, max_level)), prm);
  rep.method += "|haar-pyramid";
  return rep;
}

NormReport frame_besov_norm(const ExactPiecewise& f, const SmoothnessParams& prm,
                            int max_level) {
  NormReport rep = b_norm(frame_coeffs(f, max_level), prm);
  rep.out_of_region = !prm.frame_B();
  rep.method += "|haar-frame";
  return rep;
}
NormReport frame_besov_norm(const GridFunction& f, const SmoothnessParams& prm, int max_level) {
  NormReport rep = b_norm(frame_coeffs(f, max_level), prm);
  rep.out_of_region = !prm.frame_B();
  rep.method += "|haar-frame";
  return rep;
}
NormReport frame_tl_norm(const ExactPiecewise& f, const SmoothnessParams& prm, int max_level) {
  NormReport rep = f_norm(frame_coeffs(f, max_level), prm);
  rep.out_of_region = !prm.frame_F();
  rep.method += "|haar-frame";
  return rep;
}
NormReport frame_tl_norm(const GridFunction& f, const SmoothnessParams& prm, int max_level) {
  NormReport rep = f_norm(frame_coeffs(f, max_level), prm);
  rep.out_of_region = !prm.frame_F();
  rep.method += "|haar-frame";
  return rep;
}

namespace {

template <class F>
double modulus2_impl(const F& f, const Rational& t, double p, int subdivisions) {
  if (subdivisions < 1) throw std::invalid_argument("modulus2: need at least one subdivision");
  double best = 0;
  for (int i = 1; i <= subdivisions; ++i) {
    Rational delta = t * Rational(i, subdivisions);
    best = std::max(best, lp_norm(second_difference(f, delta), p).value);
  }
  return best;
}

template <class F>
NormReport ref_besov_impl(const F& f, const SmoothnessParams& prm, int max_level,
                          int subdivisions) {
  if (max_level < 0) throw std::invalid_argument("ref_besov_norm: max level must be >= 0");
  if (!(prm.s > 0) || !(prm.s < 2))
    throw std::invalid_argument("ref_besov_norm: s must lie in (0,2)");
  std::vector<double> omega(static_cast<size_t>(max_level) + 1);
  for (int j = 0; j <= max_level; ++j)
    omega[static_cast<size_t>(j)] = modulus2_impl(f, pow2r(-j), prm.p, subdivisions);
  return ref_besov_from_moduli(lp_norm(f, prm.p).value, omega, prm);
}

}  // namespace

NormReport ref_besov_from_moduli(double lp_value, const std::vector<double>& omega,
                                 const SmoothnessParams& prm) {
  if (!(prm.s > 0) || !(prm.s < 2))
    throw std::invalid_argument("ref_besov_norm: s must lie in (0,2)");
  if (!(prm.p > 0) || !(prm.q > 0))
    throw std::invalid_argument("ref_besov_norm: p and q must be positive");
  NormReport rep;
  rep.params = prm;
  rep.max_level = static_cast<int>(omega.size()) - 1;
  rep.method = "second-differences";
  if (std::isinf(prm.q)) {
    double best = 0;
    int arg = -1;
    for (int j = 0; j <= rep.max_level; ++j) {
      double w = std::exp2(j * prm.s) * omega[static_cast<size_t>(j)];
      if (w > best) {
        best = w;
        arg = j;
      }
    }
    rep.value = lp_value + best;
    rep.tail_at_max = (arg == rep.max_level);
    return rep;
  }
  double s = 0;
  for (int j = 0; j <= rep.max_level; ++j) {
    double w = omega[static_cast<size_t>(j)];
    if (w != 0) s += std::pow(std::exp2(j * prm.s) * w, prm.q);
  }
  rep.value = lp_value + std::pow(s, 1.0 / prm.q);
  return rep;
}

double modulus2(const ExactPiecewise& f, const Rational& t, double p, int subdivisions) {
  return modulus2_impl(f, t, p, subdivisions);
}
double modulus2(const GridFunction& f, const Rational& t, double p, int subdivisions) {
  return modulus2_impl(f, t, p, subdivisions);
}
NormReport ref_besov_norm(const ExactPiecewise& f, const SmoothnessParams& prm, int max_level,
                          int subdivisions) {
  return ref_besov_impl(f, prm, max_level, subdivisions);
}
NormReport ref_besov_norm(const GridFunction& f, const SmoothnessParams& prm, int max_level,
                          int subdivisions) {
  return ref_besov_impl(f, prm, max_level, subdivisions);
}

NormReport w1p_norm(const ExactPiecewise& f, double p) {
  if (!(p > 0)) throw std::invalid_argument("w1p_norm: p must be positive");
  DerivativeParts d = derivative(f);
  if (!d.jumps.empty())
    throw std::invalid_argument("w1p_norm: function has jump discontinuities");
  NormReport rep;
  rep.params = SmoothnessParams{1.0, p, SmoothnessParams::inf};
  LpValue a = lp_norm(f, p), b = lp_norm(d.ac, p);
  rep.value = a.value + b.value;
  rep.method = (a.exact && b.exact) ? "closed-form" : "quadrature";
  return rep;
}

NormReport bv_norm(const ExactPiecewise& f) {
  NormReport rep;
  rep.params = SmoothnessParams{1.0, 1.0, SmoothnessParams::inf};
  rep.value = lp_norm(f, 1.0).value + total_variation(f);
  rep.method = "closed-form";
  return rep;
}

NormReport frame_sobolev_norm(const ExactPiecewise& f, double p, int max_level) {
  SmoothnessParams prm{1.0, p, SmoothnessParams::inf};
  NormReport rep = b_norm(frame_coeffs(f, max_level), prm);
  rep.method += "|haar-frame";
  return rep;
}
NormReport frame_sobolev_norm(const GridFunction& f, double p, int max_level) {
  SmoothnessParams prm{1.0, p, SmoothnessParams::inf};
  NormReport rep = b_norm(frame_coeffs(f, max_level), prm);
  rep.method += "|haar-frame";
  return rep;
}

double bootstrap_constant(const SmoothnessParams& prm, const BootstrapParams& bp) {
  if (!bp.admissible(prm))
    throw std::invalid_argument("bootstrap_constant: |lambda_1| must be < 2^{s-1/p}");
  double rho = bp.rho(prm);
  double sigma = bp.sigma(prm);
  double num = std::pow(std::abs(bp.lambda[0]), rho) + std::pow(std::abs(bp.lambda[2]), rho);
  double den = std::exp2(sigma * rho) - std::pow(std::abs(bp.lambda[1]), rho);
  return std::pow(num / den + 1.0, 1.0 / rho);
}

CoeffArray<double> even_part(const CoeffArray<double>& a) {
  CoeffArray<double> out(a.max_level(), a.convention());
  a.for_each_nonzero([&](int j, long long mu, const double& v) {
    if (j < 0 || mu % 2 == 0) out.set(j, mu, v);
  });
  return out;
}

BootstrapReport bootstrap_verify(const CoeffArray<double>& a, const SmoothnessParams& prm,
                                 const BootstrapParams& bp) {
  BootstrapReport rep;
  rep.constant = bootstrap_constant(prm, bp);
  const double l0 = std::abs(bp.lambda[0]), l1 = std::abs(bp.lambda[1]),
               l2 = std::abs(bp.lambda[2]);
  static const LevelSeq<double> kEmpty{};
  for (int j = 0; j <= a.max_level() && rep.relation_holds; ++j) {
    const auto& L = a.level(j);
    long long lo = L.mu_begin() / 2 - 2, hi = L.mu_end() / 2 + 2;
    const auto& Lf = j + 1 <= a.max_level() ? a.level(j + 1) : kEmpty;
    lo = std::min(lo, Lf.mu_begin() / 4 - 2);
    hi = std::max(hi, Lf.mu_end() / 4 + 2);
    for (long long nu = lo; nu <= hi; ++nu) {
      double lhs = std::abs(a.at(j, 2 * nu + 1));
      double rhs = l0 * std::abs(a.at(j + 1, 4 * nu + 2)) +
                   l1 * std::abs(a.at(j + 1, 4 * nu + 3)) +
                   l2 * std::abs(a.at(j + 1, 4 * nu + 4));
      if (lhs > rhs * (1 + 1e-12) + 1e-300) {
        rep.relation_holds = false;
        rep.violation_level = j;
        rep.violation_index = nu;
        break;
      }
    }
  }
  if (!rep.relation_holds) return rep;
  rep.norm_all = b_norm(a, prm).value;
  rep.norm_even = b_norm(even_part(a), prm).value;
  rep.ratio = rep.norm_even > 0 ? rep.norm_all / rep.norm_even
                                : (rep.norm_all > 0 ? kInf : 1.0);
  rep.bounded = rep.ratio <= rep.constant * (1 + 1e-9);
  return rep;
}

}  // namespace dyadlab
