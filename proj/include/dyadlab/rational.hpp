#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace dyadlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(Integer(num), Integer(den));
}

/// 2^e as an exact rational, e of either sign.
inline Rational pow2r(long e) {
  Integer x = Integer(1) << static_cast<unsigned>(e >= 0 ? e : -e);
  return e >= 0 ? Rational(x) : Rational(Integer(1), x);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Integer power with small non-negative exponent.
inline Rational rat_pow(const Rational& r, unsigned e) {
  Rational out(1);
  for (unsigned i = 0; i < e; ++i) out *= r;
  return out;
}

/// "n" or "n/d" with d > 0.
inline std::string ratio_string(const Rational& r) {
  Integer n = numerator(r), d = denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

inline Rational parse_ratio(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  Integer n(s.substr(0, slash)), d(s.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("ratio string with zero denominator: " + s);
  return Rational(n, d);
}

inline long long rational_floor_ll(const Rational& r) {
  Integer n = numerator(r), d = denominator(r);
  Integer q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q.convert_to<long long>();
}

inline long long rational_ceil_ll(const Rational& r) {
  Integer n = numerator(r), d = denominator(r);
  Integer q = n / d;
  if (n > 0 && q * d != n) q += 1;
  return q.convert_to<long long>();
}

/// If r = num * 2^{-exp} with exp >= 0 minimal, returns (num, exp).
inline std::optional<std::pair<Integer, unsigned>> as_dyadic(const Rational& r) {
  Integer d = denominator(r);
  unsigned e = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++e;
  }
  if (d != 1) return std::nullopt;
  return std::make_pair(numerator(r), e);
}

}  // namespace dyadlab
