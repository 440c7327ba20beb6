#pragma once

#include "dyadlab/rational.hpp"

#include <compare>
#include <cstdint>
#include <stdexcept>

namespace dyadlab {

/// Exact dyadic rational num * 2^{-exp}, canonical (num odd or exp == 0).
struct DyadicRational {
  long long num = 0;
  int exp = 0;  // >= 0

  DyadicRational() = default;
  DyadicRational(long long n, int e) : num(n), exp(e) {
    if (e < 0) throw std::invalid_argument("DyadicRational: negative exponent");
    canonicalize();
  }

  void canonicalize() {
    while (exp > 0 && num % 2 == 0) {
      num /= 2;
      --exp;
    }
    if (num == 0) exp = 0;
  }

  Rational value() const { return Rational(Integer(num)) * pow2r(-exp); }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(1ULL << exp); }

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.num == b.num && a.exp == b.exp;
  }
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
    // compare a.num * 2^{b.exp} vs b.num * 2^{a.exp}
    __int128 lhs = static_cast<__int128>(a.num) << b.exp;
    __int128 rhs = static_cast<__int128>(b.num) << a.exp;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

/// Attempts to express r as a DyadicRational; throws if r is not dyadic or too large.
inline DyadicRational to_dyadic(const Rational& r) {
  auto d = as_dyadic(r);
  if (!d) throw std::invalid_argument("not a dyadic rational: " + ratio_string(r));
  if (d->first > Integer(INT64_MAX) || d->first < Integer(INT64_MIN))
    throw std::overflow_error("dyadic numerator out of range");
  return DyadicRational(d->first.convert_to<long long>(), static_cast<int>(d->second));
}

/// Half-open dyadic interval. For j >= 0 this is [2^{-j} mu, 2^{-j}(mu+1));
/// level -1 reuses the unit cells [mu, mu+1).
struct DyadicInterval {
  int level = 0;  // >= -1
  long long index = 0;

  DyadicInterval() = default;
  DyadicInterval(int j, long long mu) : level(j), index(mu) {
    if (j < -1) throw std::invalid_argument("DyadicInterval: level < -1");
  }

  int grid_level() const { return level < 0 ? 0 : level; }
  Rational left() const { return Rational(Integer(index)) * pow2r(-grid_level()); }
  Rational right() const { return Rational(Integer(index) + 1) * pow2r(-grid_level()); }
  Rational length() const { return pow2r(-grid_level()); }

  bool contains(const Rational& x) const { return x >= left() && x < right(); }

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

}  // namespace dyadlab
