#include "dyadlab/haar.hpp"

#include <stdexcept>

namespace dyadlab {

ExactPiecewise extended_haar_atom(int j, long long nu) {
  if (j < -1) throw std::invalid_argument("haar atom: level must be >= -1");
  if (j == -1)
    return ExactPiecewise::indicator(Rational(Integer(nu)), Rational(Integer(nu) + 1));
  // h(2^j x - nu/2): +1 on [2^{-j} nu/2, 2^{-j}(nu+1)/2), -1 on the next half
  Rational h = pow2r(-j - 1);
  Rational a = Rational(Integer(nu)) * h;
  return ExactPiecewise({a, a + h, a + 2 * h},
                        {Poly::constant(Rational(1)), Poly::constant(Rational(-1))});
}

ExactPiecewise haar_atom(const HaarIndex& idx) {
  if (idx.level == -1) {
    if (idx.parity == Parity::Odd)
      throw std::invalid_argument("haar atom: no odd-parity atoms at level -1");
    return extended_haar_atom(-1, idx.translation);
  }
  long long nu = 2 * idx.translation + (idx.parity == Parity::Odd ? 1 : 0);
  return extended_haar_atom(idx.level, nu);
}

namespace {

template <class V>
struct Pyramid {
  // averages per level j = 0..J+1 over windows [mu0[j], mu0[j] + avg[j].size())
  std::vector<LevelSeq<V>> avg;  // index j
  int top;                       // J+1

  V get(int j, long long mu) const { return avg[static_cast<size_t>(j)].at(mu); }
};

Rational halve(const Rational& x) { return x / 2; }
Complex halve(const Complex& x) { return 0.5 * x; }

// Coarsens base averages (at level top_level >= 1) down to level 0.
template <class V>
Pyramid<V> build_pyramid(LevelSeq<V> base, int top_level) {
  Pyramid<V> out;
  out.top = top_level;
  out.avg.resize(static_cast<size_t>(out.top + 1));
  out.avg[static_cast<size_t>(out.top)] = std::move(base);
  for (int j = out.top - 1; j >= 0; --j) {
    const auto& fine = out.avg[static_cast<size_t>(j + 1)];
    LevelSeq<V> coarse;
    if (!fine.empty()) {
      long long lo = fine.mu_begin() >= 0 ? fine.mu_begin() / 2 : (fine.mu_begin() - 1) / 2;
      long long hi = (fine.mu_end() + 1) / 2;
      coarse.mu0 = lo;
      coarse.v.resize(static_cast<size_t>(hi - lo));
      for (long long mu = lo; mu < hi; ++mu)
        coarse.v[static_cast<size_t>(mu - lo)] = halve(fine.at(2 * mu) + fine.at(2 * mu + 1));
    }
    out.avg[static_cast<size_t>(j)] = std::move(coarse);
  }
  return out;
}

// <f, h_{j,mu}> = 2^{-j-1} (A_{j+1,2mu} - A_{j+1,2mu+1})
template <class V>
CoeffArray<V> coeffs_from_pyramid(const Pyramid<V>& pyr, int max_level, bool shifted) {
  CoeffArray<V> out(max_level, CoeffConvention::Inner);
  for (int j = 0; j <= max_level; ++j) {
    const auto& fine = pyr.avg[static_cast<size_t>(j + 1)];
    if (fine.empty()) continue;
    // even: children (2mu, 2mu+1); odd: children (2mu+1, 2mu+2)
    long long shift = shifted ? 1 : 0;
    long long lo = (fine.mu_begin() - 1 - shift) / 2 - 1;
    long long hi = (fine.mu_end() + 1) / 2 + 1;
    LevelSeq<V> row;
    row.mu0 = lo;
    row.v.resize(static_cast<size_t>(hi - lo));
    for (long long mu = lo; mu < hi; ++mu) {
      V d = fine.at(2 * mu + shift) - fine.at(2 * mu + 1 + shift);
      row.v[static_cast<size_t>(mu - lo)] = detail::scale_pow2(halve(d), -j);
    }
    out.level(j) = std::move(row);
  }
  if (!shifted && max_level >= -1) {
    // level -1: plain integrals over unit cells
    const auto& unit = pyr.avg[0];
    LevelSeq<V> row;
    row.mu0 = unit.mu_begin();
    row.v = unit.v;
    out.level(-1) = std::move(row);
  }
  return out;
}

LevelSeq<Rational> base_averages(const ExactPiecewise& f, int level) {
  LevelSeq<Rational> base;
  if (f.is_zero()) return base;
  Rational scale = pow2r(level);
  long long lo = rational_floor_ll(f.support_left() * scale);
  long long hi = rational_ceil_ll(f.support_right() * scale);
  auto cells = cell_integrals(f, level, lo, hi);
  base.mu0 = lo;
  base.v.resize(cells.size());
  for (size_t i = 0; i < cells.size(); ++i) base.v[i] = cells[i] * scale;
  return base;
}

LevelSeq<Complex> base_averages(const GridFunction& f, int level) {
  LevelSeq<Complex> base;
  if (f.is_zero()) return base;
  Rational scale = pow2r(level);
  long long lo = rational_floor_ll(f.support_left() * scale);
  long long hi = rational_ceil_ll(f.support_right() * scale);
  base.mu0 = lo;
  base.v = cell_averages(f, level, lo, hi);
  return base;
}

int natural_level(const ExactPiecewise&) { return 0; }
int natural_level(const GridFunction& f) { return f.level(); }

template <class F, class V>
CoeffArray<V> analyze_impl(const F& f, int max_level, bool shifted) {
  if (max_level < -1) throw std::invalid_argument("analyze: max level must be >= -1");
  // base at the finer of (requested level + 1) and the input's own grid so
  // the base averages stay a linear-cost sweep
  int top = std::max(std::max(max_level, 0) + 1, natural_level(f));
  auto pyr = build_pyramid<V>(base_averages(f, top), top);
  auto out = coeffs_from_pyramid<V>(pyr, std::max(max_level, 0), shifted);
  if (max_level == -1) {
    CoeffArray<V> trimmed(-1, CoeffConvention::Inner);
    trimmed.level(-1) = out.level(-1);
    return trimmed;
  }
  return out;
}

}  // namespace

CoeffArray<Rational> analyze(const ExactPiecewise& f, int max_level) {
  return analyze_impl<ExactPiecewise, Rational>(f, max_level, false);
}
CoeffArray<Complex> analyze(const GridFunction& f, int max_level) {
  return analyze_impl<GridFunction, Complex>(f, max_level, false);
}
CoeffArray<Rational> analyze_shifted(const ExactPiecewise& f, int max_level) {
  return analyze_impl<ExactPiecewise, Rational>(f, max_level, true);
}
CoeffArray<Complex> analyze_shifted(const GridFunction& f, int max_level) {
  return analyze_impl<GridFunction, Complex>(f, max_level, true);
}

CoeffArray<Rational> frame_coeffs(const ExactPiecewise& f, int max_level) {
  auto even = analyze(f, max_level);
  auto odd = analyze_shifted(f, max_level);
  CoeffArray<Rational> out(max_level, CoeffConvention::Scaled);
  for (int j = -1; j <= max_level; ++j) {
    if (even.level(j).empty() && odd.level(j).empty()) continue;
    long long lo = std::min(even.level(j).mu_begin(), odd.level(j).mu_begin());
    long long hi = std::max(even.level(j).mu_end(), odd.level(j).mu_end());
    LevelSeq<Rational> row;
    row.mu0 = lo;
    row.v.resize(static_cast<size_t>(hi - lo));
    for (long long mu = lo; mu < hi; ++mu) {
      Rational c = j < 0 ? rat_abs(even.at(j, mu))
                         : (rat_abs(even.at(j, mu)) + rat_abs(odd.at(j, mu))) * pow2r(j);
      row.v[static_cast<size_t>(mu - lo)] = c;
    }
    out.level(j) = std::move(row);
  }
  return out;
}

CoeffArray<double> frame_coeffs(const GridFunction& f, int max_level) {
  auto even = analyze(f, max_level);
  auto odd = analyze_shifted(f, max_level);
  CoeffArray<double> out(max_level, CoeffConvention::Scaled);
  for (int j = -1; j <= max_level; ++j) {
    if (even.level(j).empty() && odd.level(j).empty()) continue;
    long long lo = std::min(even.level(j).mu_begin(), odd.level(j).mu_begin());
    long long hi = std::max(even.level(j).mu_end(), odd.level(j).mu_end());
    LevelSeq<double> row;
    row.mu0 = lo;
    row.v.resize(static_cast<size_t>(hi - lo));
    for (long long mu = lo; mu < hi; ++mu) {
      double c = j < 0 ? std::abs(even.at(j, mu))
                       : std::ldexp(std::abs(even.at(j, mu)) + std::abs(odd.at(j, mu)), j);
      row.v[static_cast<size_t>(mu - lo)] = c;
    }
    out.level(j) = std::move(row);
  }
  return out;
}

CoeffArray<Rational> analyze_direct(const ExactPiecewise& f, int max_level) {
  CoeffArray<Rational> out(max_level, CoeffConvention::Inner);
  if (f.is_zero()) return out;
  for (int j = -1; j <= max_level; ++j) {
    Rational scale = pow2r(std::max(j, 0));
    long long lo = rational_floor_ll(f.support_left() * scale) - 1;
    long long hi = rational_ceil_ll(f.support_right() * scale) + 1;
    for (long long mu = lo; mu < hi; ++mu)
      out.set(j, mu, inner_product(f, haar_atom({j, mu, Parity::Even})));
  }
  return out;
}

CoeffArray<Rational> analyze_shifted_direct(const ExactPiecewise& f, int max_level) {
  CoeffArray<Rational> out(max_level, CoeffConvention::Inner);
  if (f.is_zero()) return out;
  for (int j = 0; j <= max_level; ++j) {
    Rational scale = pow2r(j);
    long long lo = rational_floor_ll(f.support_left() * scale) - 2;
    long long hi = rational_ceil_ll(f.support_right() * scale) + 2;
    for (long long mu = lo; mu < hi; ++mu)
      out.set(j, mu, inner_product(f, extended_haar_atom(j, 2 * mu + 1)));
  }
  return out;
}

ExactPiecewise synthesize(const CoeffArray<Rational>& beta) {
  int J = beta.max_level();
  int M = std::max(J, 0) + 1;  // finest dyadic level of the result
  // Support bounds over all entries.
  bool any = false;
  long long c_lo = 0, c_hi = 0;  // cell window at level M
  beta.for_each_nonzero([&](int j, long long mu, const Rational&) {
    int g = j < 0 ? 0 : j;
    long long span = 1LL << (M - g);
    long long lo = mu * span, hi = (mu + 1) * span;
    if (!any) {
      c_lo = lo;
      c_hi = hi;
      any = true;
    } else {
      c_lo = std::min(c_lo, lo);
      c_hi = std::max(c_hi, hi);
    }
  });
  if (!any) return ExactPiecewise::zero();
  // Difference array over cells at level M.
  std::vector<Rational> diff(static_cast<size_t>(c_hi - c_lo) + 1, Rational(0));
  beta.for_each_nonzero([&](int j, long long mu, const Rational& b) {
    int g = j < 0 ? 0 : j;
    long long span = 1LL << (M - g);
    long long lo = mu * span - c_lo;
    if (j < 0) {
      diff[static_cast<size_t>(lo)] += b;
      diff[static_cast<size_t>(lo + span)] -= b;
    } else {
      long long half = span / 2;
      diff[static_cast<size_t>(lo)] += b;
      diff[static_cast<size_t>(lo + half)] -= 2 * b;
      diff[static_cast<size_t>(lo + span)] += b;
    }
  });
  Rational h = pow2r(-M);
  std::vector<Rational> nb;
  std::vector<Poly> np;
  nb.reserve(diff.size());
  np.reserve(diff.size() - 1);
  Rational run(0);
  nb.push_back(Rational(Integer(c_lo)) * h);
  for (size_t i = 0; i + 1 < diff.size(); ++i) {
    run += diff[i];
    np.push_back(run == 0 ? Poly() : Poly::constant(run));
    nb.push_back(Rational(Integer(c_lo) + Integer(i) + 1) * h);
  }
  return ExactPiecewise(std::move(nb), std::move(np));
}

}  // namespace dyadlab
