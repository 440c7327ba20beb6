#pragma once

#include "dyadlab/rational.hpp"

#include <algorithm>
#include <vector>

namespace dyadlab {

/// Polynomial with exact rational coefficients, c[0] + c[1] x + c[2] x^2 + ...
/// The zero polynomial has an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& v) { return Poly({v}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Rational eval(const Rational& x) const {
    Rational v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
  }
  double eval(double x) const {
    double v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + to_double(*it);
    return v;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
  }
  friend Poly operator*(const Rational& s, Poly p) {
    for (auto& v : p.c_) v *= s;
    p.trim();
    return p;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// P(x + s), exact binomial expansion.
  Poly shifted_arg(const Rational& s) const {
    if (is_zero() || s == 0) return *this;
    std::vector<Rational> out(c_.size(), Rational(0));
    // Horner on (x + s): start from leading coefficient.
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      // out := out * (x + s) + c_i
      for (size_t k = out.size(); k-- > 1;) out[k] = out[k - 1] + s * out[k];
      out[0] = s * out[0] + *it;
    }
    return Poly(std::move(out));
  }

  /// P(s x).
  Poly scaled_arg(const Rational& s) const {
    Poly p = *this;
    Rational f(1);
    for (size_t i = 1; i < p.c_.size(); ++i) {
      f *= s;
      p.c_[i] *= f;
    }
    p.trim();
    return p;
  }

  /// P(-x).
  Poly reflected() const {
    Poly p = *this;
    for (size_t i = 1; i < p.c_.size(); i += 2) p.c_[i] = -p.c_[i];
    return p;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = Rational(Integer(i)) * c_[i];
    return Poly(std::move(out));
  }

  /// Antiderivative with zero constant term.
  Poly antiderivative() const {
    if (is_zero()) return {};
    std::vector<Rational> out(c_.size() + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i + 1] = c_[i] / Rational(Integer(i + 1));
    return Poly(std::move(out));
  }

  /// Exact integral over [a, b].
  Rational integral(const Rational& a, const Rational& b) const {
    Poly A = antiderivative();
    return A.eval(b) - A.eval(a);
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace dyadlab
