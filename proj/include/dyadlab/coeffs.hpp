#pragma once

#include "dyadlab/rational.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace dyadlab {

/// Finite window of values at one level: entry mu lives at v[mu - mu0].
template <class T>
struct LevelSeq {
  long long mu0 = 0;
  std::vector<T> v;

  bool empty() const { return v.empty(); }
  long long mu_begin() const { return mu0; }
  long long mu_end() const { return mu0 + static_cast<long long>(v.size()); }

  T at(long long mu) const {
    if (mu < mu_begin() || mu >= mu_end()) return T{};
    return v[static_cast<size_t>(mu - mu0)];
  }
  void set(long long mu, T val) {
    if (v.empty()) {
      mu0 = mu;
      v.push_back(std::move(val));
      return;
    }
    if (mu < mu0) {
      v.insert(v.begin(), static_cast<size_t>(mu0 - mu), T{});
      mu0 = mu;
    } else if (mu >= mu_end()) {
      v.resize(static_cast<size_t>(mu - mu0) + 1, T{});
    }
    v[static_cast<size_t>(mu - mu0)] = std::move(val);
  }
};

/// Whether entries store <f,h> directly or the scaled data 2^j <f,h>.
enum class CoeffConvention { Inner, Scaled };

/// Coefficient pyramid over levels j = -1..J with finite support per level.
template <class T>
class CoeffArray {
 public:
  CoeffArray() = default;
  explicit CoeffArray(int max_level, CoeffConvention conv = CoeffConvention::Inner)
      : J_(max_level), conv_(conv), levels_(static_cast<size_t>(max_level + 2)) {
    if (max_level < -1) throw std::invalid_argument("CoeffArray: max level must be >= -1");
  }

  int max_level() const { return J_; }
  CoeffConvention convention() const { return conv_; }
  void set_convention(CoeffConvention c) { conv_ = c; }

  const LevelSeq<T>& level(int j) const { return levels_.at(static_cast<size_t>(j + 1)); }
  LevelSeq<T>& level(int j) { return levels_.at(static_cast<size_t>(j + 1)); }

  T at(int j, long long mu) const {
    if (j < -1 || j > J_) return T{};
    return level(j).at(mu);
  }
  void set(int j, long long mu, T val) { level(j).set(mu, std::move(val)); }

  size_t nonzero_count() const {
    size_t n = 0;
    for (const auto& L : levels_)
      for (const auto& x : L.v)
        if (x != T{}) ++n;
    return n;
  }

  void for_each_nonzero(const std::function<void(int, long long, const T&)>& fn) const {
    for (int j = -1; j <= J_; ++j) {
      const auto& L = level(j);
      for (size_t i = 0; i < L.v.size(); ++i)
        if (L.v[i] != T{}) fn(j, L.mu0 + static_cast<long long>(i), L.v[i]);
    }
  }

 private:
  int J_ = -1;
  CoeffConvention conv_ = CoeffConvention::Inner;
  std::vector<LevelSeq<T>> levels_;  // index j+1
};

namespace detail {
inline Rational scale_pow2(const Rational& x, int e) { return x * pow2r(e); }
inline double scale_pow2(double x, int e) { return std::ldexp(x, e); }
inline std::complex<double> scale_pow2(const std::complex<double>& x, int e) {
  return {std::ldexp(x.real(), e), std::ldexp(x.imag(), e)};
}
}  // namespace detail

/// Converts <f,h> entries into 2^j <f,h> entries (all levels, including j = -1).
template <class T>
CoeffArray<T> scaled_by_level(const CoeffArray<T>& a) {
  if (a.convention() == CoeffConvention::Scaled) return a;
  CoeffArray<T> out(a.max_level(), CoeffConvention::Scaled);
  for (int j = -1; j <= a.max_level(); ++j) {
    auto L = a.level(j);
    for (auto& x : L.v) x = detail::scale_pow2(x, j);
    out.level(j) = std::move(L);
  }
  return out;
}

}  // namespace dyadlab
