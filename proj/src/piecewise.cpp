#include "dyadlab/piecewise.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace dyadlab {

ExactPiecewise::ExactPiecewise(std::vector<Rational> breaks, std::vector<Poly> pieces)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
  if (pieces_.empty()) {
    if (breaks_.size() > 1)
      throw std::invalid_argument("ExactPiecewise: need breaks.size() == pieces.size() + 1");
    breaks_.clear();
    return;
  }
  if (breaks_.size() != pieces_.size() + 1)
    throw std::invalid_argument("ExactPiecewise: need breaks.size() == pieces.size() + 1");
  for (size_t i = 0; i + 1 < breaks_.size(); ++i)
    if (!(breaks_[i] < breaks_[i + 1]))
      throw std::invalid_argument("ExactPiecewise: breakpoints not strictly increasing");
  for (const auto& p : pieces_)
    if (p.degree() > kMaxPieceDegree)
      throw std::invalid_argument("ExactPiecewise: piece degree exceeds 3");
  canonicalize();
}

void ExactPiecewise::canonicalize() {
  // Trim zero pieces at both ends, then merge adjacent cells with equal polynomials.
  size_t lo = 0, hi = pieces_.size();
  while (lo < hi && pieces_[lo].is_zero()) ++lo;
  while (hi > lo && pieces_[hi - 1].is_zero()) --hi;
  if (lo == hi) {
    breaks_.clear();
    pieces_.clear();
    return;
  }
  std::vector<Rational> nb;
  std::vector<Poly> np;
  nb.push_back(breaks_[lo]);
  size_t k = lo;
  while (k < hi) {
    size_t m = k;
    while (m + 1 < hi && pieces_[m + 1] == pieces_[k]) ++m;
    np.push_back(pieces_[k]);
    nb.push_back(breaks_[m + 1]);
    k = m + 1;
  }
  breaks_ = std::move(nb);
  pieces_ = std::move(np);
}

ExactPiecewise ExactPiecewise::indicator(const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("indicator: need a < b");
  return ExactPiecewise({a, b}, {Poly::constant(Rational(1))});
}

ExactPiecewise ExactPiecewise::restriction(const Poly& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("restriction: need a < b");
  return ExactPiecewise({a, b}, {p});
}

Rational ExactPiecewise::support_left() const {
  if (is_zero()) return Rational(0);
  return breaks_.front();
}
Rational ExactPiecewise::support_right() const {
  if (is_zero()) return Rational(0);
  return breaks_.back();
}

Rational ExactPiecewise::operator()(const Rational& x) const {
  if (is_zero() || x < breaks_.front() || x >= breaks_.back()) return Rational(0);
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  size_t idx = static_cast<size_t>(it - breaks_.begin()) - 1;
  return pieces_[idx].eval(x);
}

Rational ExactPiecewise::left_limit(const Rational& x) const {
  if (is_zero() || x <= breaks_.front() || x > breaks_.back()) return Rational(0);
  auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
  size_t idx = static_cast<size_t>(it - breaks_.begin());
  if (idx == 0 || *it != x) {
    // x interior to a cell; left limit equals the value there
    return (*this)(x);
  }
  return pieces_[idx - 1].eval(x);
}

namespace {

// Merged breakpoint grid of two functions over the union of supports.
std::vector<Rational> merged_breaks(const ExactPiecewise& a, const ExactPiecewise& b) {
  std::vector<Rational> out;
  const auto& x = a.breakpoints();
  const auto& y = b.breakpoints();
  out.reserve(x.size() + y.size());
  std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const Poly* piece_at(const ExactPiecewise& f, const Rational& left) {
  const auto& br = f.breakpoints();
  if (br.empty() || left < br.front() || left >= br.back()) return nullptr;
  auto it = std::upper_bound(br.begin(), br.end(), left);
  size_t idx = static_cast<size_t>(it - br.begin()) - 1;
  return &f.pieces()[idx];
}

}  // namespace

ExactPiecewise& ExactPiecewise::operator+=(const ExactPiecewise& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  auto grid = merged_breaks(*this, o);
  std::vector<Poly> np;
  np.reserve(grid.size() - 1);
  for (size_t i = 0; i + 1 < grid.size(); ++i) {
    Poly p;
    if (const Poly* a = piece_at(*this, grid[i])) p += *a;
    if (const Poly* b = piece_at(o, grid[i])) p += *b;
    np.push_back(std::move(p));
  }
  *this = ExactPiecewise(std::move(grid), std::move(np));
  return *this;
}

ExactPiecewise& ExactPiecewise::operator-=(const ExactPiecewise& o) {
  return *this += Rational(-1) * o;
}

ExactPiecewise operator*(const Rational& s, ExactPiecewise f) {
  if (s == 0) return ExactPiecewise::zero();
  for (auto& p : f.pieces_) p = s * p;
  return f;
}

ExactPiecewise ExactPiecewise::shifted_arg(const Rational& delta) const {
  if (is_zero() || delta == 0) return *this;
  std::vector<Rational> nb = breaks_;
  for (auto& b : nb) b -= delta;
  std::vector<Poly> np;
  np.reserve(pieces_.size());
  for (const auto& p : pieces_) np.push_back(p.shifted_arg(delta));
  return ExactPiecewise(std::move(nb), std::move(np));
}

ExactPiecewise ExactPiecewise::scaled_arg(const Rational& s) const {
  if (!(s > 0)) throw std::invalid_argument("scaled_arg: scale must be positive");
  if (is_zero() || s == 1) return *this;
  std::vector<Rational> nb = breaks_;
  for (auto& b : nb) b /= s;
  std::vector<Poly> np;
  np.reserve(pieces_.size());
  for (const auto& p : pieces_) np.push_back(p.scaled_arg(s));
  return ExactPiecewise(std::move(nb), std::move(np));
}

ExactPiecewise ExactPiecewise::reflected() const {
  if (is_zero()) return *this;
  std::vector<Rational> nb(breaks_.rbegin(), breaks_.rend());
  for (auto& b : nb) b = -b;
  std::vector<Poly> np(pieces_.rbegin(), pieces_.rend());
  for (auto& p : np) p = p.reflected();
  return ExactPiecewise(std::move(nb), std::move(np));
}

ExactPiecewise ExactPiecewise::restricted(const Rational& a, const Rational& b) const {
  if (is_zero() || !(a < b) || b <= breaks_.front() || a >= breaks_.back())
    return ExactPiecewise::zero();
  std::vector<Rational> nb;
  std::vector<Poly> np;
  Rational lo = std::max(a, breaks_.front());
  Rational hi = std::min(b, breaks_.back());
  nb.push_back(lo);
  for (size_t i = 0; i < pieces_.size(); ++i) {
    Rational l = std::max(lo, breaks_[i]);
    Rational r = std::min(hi, breaks_[i + 1]);
    if (!(l < r)) continue;
    np.push_back(pieces_[i]);
    nb.push_back(r);
  }
  if (np.empty()) return ExactPiecewise::zero();
  return ExactPiecewise(std::move(nb), std::move(np));
}

Rational integrate(const ExactPiecewise& f, const Rational& a, const Rational& b) {
  if (f.is_zero() || !(a < b)) return Rational(0);
  Rational total(0);
  const auto& br = f.breakpoints();
  for (size_t i = 0; i < f.pieces().size(); ++i) {
    Rational l = std::max(a, br[i]);
    Rational r = std::min(b, br[i + 1]);
    if (l < r) total += f.pieces()[i].integral(l, r);
  }
  return total;
}

Rational integrate(const ExactPiecewise& f) {
  if (f.is_zero()) return Rational(0);
  return integrate(f, f.support_left(), f.support_right());
}

Rational inner_product(const ExactPiecewise& f, const ExactPiecewise& g) {
  if (f.is_zero() || g.is_zero()) return Rational(0);
  auto grid = merged_breaks(f, g);
  Rational total(0);
  for (size_t i = 0; i + 1 < grid.size(); ++i) {
    const Poly* a = piece_at(f, grid[i]);
    const Poly* b = piece_at(g, grid[i]);
    if (a && b && !a->is_zero() && !b->is_zero())
      total += ((*a) * (*b)).integral(grid[i], grid[i + 1]);
  }
  return total;
}

ExactPiecewise second_difference(const ExactPiecewise& f, const Rational& delta) {
  if (!(delta > 0)) throw std::invalid_argument("second_difference: delta must be positive");
  ExactPiecewise out = f.shifted_arg(2 * delta);
  out -= Rational(2) * f.shifted_arg(delta);
  out += f;
  return out;
}

DerivativeParts derivative(const ExactPiecewise& f) {
  DerivativeParts out;
  if (f.is_zero()) return out;
  const auto& br = f.breakpoints();
  std::vector<Poly> np;
  np.reserve(f.pieces().size());
  for (const auto& p : f.pieces()) np.push_back(p.derivative());
  out.ac = ExactPiecewise(br, std::move(np));
  for (size_t i = 0; i < br.size(); ++i) {
    Rational before = (i == 0) ? Rational(0) : f.pieces()[i - 1].eval(br[i]);
    Rational after = (i + 1 == br.size()) ? Rational(0) : f.pieces()[i].eval(br[i]);
    Rational jump = after - before;
    if (jump != 0) out.jumps.jumps.emplace_back(br[i], jump);
  }
  return out;
}

ExactPiecewise antiderivative(const ExactPiecewise& f) {
  if (f.is_zero()) return ExactPiecewise::zero();
  if (integrate(f) != 0)
    throw std::invalid_argument("antiderivative: total integral must vanish");
  const auto& br = f.breakpoints();
  std::vector<Poly> np;
  np.reserve(f.pieces().size());
  Rational running(0);  // value of the antiderivative at the left end of each cell
  for (size_t i = 0; i < f.pieces().size(); ++i) {
    Poly A = f.pieces()[i].antiderivative();
    Poly piece = A + Poly::constant(running - A.eval(br[i]));
    np.push_back(piece);
    running = piece.eval(br[i + 1]);
  }
  return ExactPiecewise(br, std::move(np));
}

ExactPiecewise convolve_unit(const ExactPiecewise& f) {
  if (f.is_zero()) return ExactPiecewise::zero();
  const auto& br = f.breakpoints();
  // Running antiderivative A (not compactly supported in general); result is
  // A(x) - A(x-1), which is supported in [supp_left, supp_right + 1].
  std::vector<Poly> A;
  A.reserve(f.pieces().size());
  Rational running(0);
  for (size_t i = 0; i < f.pieces().size(); ++i) {
    Poly a = f.pieces()[i].antiderivative();
    A.push_back(a + Poly::constant(running - a.eval(br[i])));
    running = A.back().eval(br[i + 1]);
  }
  Rational total = running;
  auto eval_A_poly = [&](const Rational& left) -> Poly {
    // polynomial representing A on the cell whose left end is `left`
    if (left < br.front()) return Poly();
    if (left >= br.back()) return Poly::constant(total);
    auto it = std::upper_bound(br.begin(), br.end(), left);
    return A[static_cast<size_t>(it - br.begin()) - 1];
  };
  std::vector<Rational> grid;
  for (const auto& b : br) grid.push_back(b);
  for (const auto& b : br) grid.push_back(b + 1);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<Poly> np;
  np.reserve(grid.size() - 1);
  for (size_t i = 0; i + 1 < grid.size(); ++i) {
    Poly here = eval_A_poly(grid[i]);
    Poly back = eval_A_poly(grid[i] - 1).shifted_arg(Rational(-1));
    np.push_back(here - back);
  }
  return ExactPiecewise(std::move(grid), std::move(np));
}

std::vector<Rational> cell_integrals(const ExactPiecewise& f, int level, long long mu_lo,
                                     long long mu_hi) {
  std::vector<Rational> out(static_cast<size_t>(std::max<long long>(0, mu_hi - mu_lo)),
                            Rational(0));
  if (f.is_zero() || out.empty()) return out;
  Rational h = pow2r(-level);
  Rational win_lo = Rational(Integer(mu_lo)) * h;
  Rational win_hi = Rational(Integer(mu_hi)) * h;
  const auto& br = f.breakpoints();
  for (size_t i = 0; i < f.pieces().size(); ++i) {
    Rational l = std::max(br[i], win_lo);
    Rational r = std::min(br[i + 1], win_hi);
    if (!(l < r)) continue;
    Poly A = f.pieces()[i].antiderivative();
    long long k = rational_floor_ll(l / h);
    Rational prev = l;
    Rational prev_val = A.eval(l);
    while (prev < r) {
      Rational cell_end = Rational(Integer(k) + 1) * h;
      Rational seg_end = std::min(cell_end, r);
      Rational val = A.eval(seg_end);
      out[static_cast<size_t>(k - mu_lo)] += val - prev_val;
      prev = seg_end;
      prev_val = val;
      ++k;
    }
  }
  return out;
}

ExactPiecewise expectation_operator(const ExactPiecewise& f, int level) {
  if (level < 0) throw std::invalid_argument("expectation_operator: level must be >= 0");
  if (f.is_zero()) return f;
  Rational h = pow2r(-level);
  long long mu_lo = rational_floor_ll(f.support_left() / h);
  long long mu_hi = rational_ceil_ll(f.support_right() / h);
  auto cells = cell_integrals(f, level, mu_lo, mu_hi);
  std::vector<Rational> nb;
  std::vector<Poly> np;
  nb.push_back(Rational(Integer(mu_lo)) * h);
  for (size_t i = 0; i < cells.size(); ++i) {
    np.push_back(Poly::constant(cells[i] / h));
    nb.push_back(Rational(Integer(mu_lo) + Integer(i) + 1) * h);
  }
  return ExactPiecewise(std::move(nb), std::move(np));
}

namespace {

// Real roots of p inside (a, b), ascending, as doubles. Degree <= 3.
std::vector<double> roots_in(const Poly& p, double a, double b) {
  std::vector<double> rs;
  int d = p.degree();
  auto push = [&](double r) {
    if (r > a + 1e-15 && r < b - 1e-15) rs.push_back(r);
  };
  if (d <= 0) return rs;
  double c0 = to_double(p.coeff(0)), c1 = to_double(p.coeff(1)), c2 = to_double(p.coeff(2)),
         c3 = to_double(p.coeff(3));
  if (d == 1) {
    push(-c0 / c1);
  } else if (d == 2) {
    double disc = c1 * c1 - 4 * c2 * c0;
    if (disc >= 0) {
      double s = std::sqrt(disc);
      push((-c1 - s) / (2 * c2));
      push((-c1 + s) / (2 * c2));
    }
  } else {
    // depressed-cubic closed form
    double A = c2 / c3, B = c1 / c3, C = c0 / c3;
    double pp = B - A * A / 3.0;
    double qq = 2.0 * A * A * A / 27.0 - A * B / 3.0 + C;
    double disc = qq * qq / 4.0 + pp * pp * pp / 27.0;
    auto from_t = [&](double t) { return t - A / 3.0; };
    if (disc > 0) {
      double s = std::sqrt(disc);
      double u = std::cbrt(-qq / 2.0 + s), v = std::cbrt(-qq / 2.0 - s);
      push(from_t(u + v));
    } else {
      double r = std::sqrt(-pp * pp * pp / 27.0);
      double phi = std::acos(std::clamp(-qq / (2.0 * r), -1.0, 1.0));
      double m = 2.0 * std::cbrt(r);
      for (int k = 0; k < 3; ++k)
        push(from_t(m * std::cos((phi + 2 * std::numbers::pi * k) / 3.0)));
    }
    std::sort(rs.begin(), rs.end());
  }
  // Newton polish
  Poly dp = p.derivative();
  for (auto& r : rs)
    for (int it = 0; it < 3; ++it) {
      double fr = p.eval(r), dfr = dp.eval(r);
      if (dfr != 0) r -= fr / dfr;
    }
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end(),
                       [](double x, double y) { return std::abs(x - y) < 1e-13; }),
           rs.end());
  return rs;
}

double adaptive_simpson(const std::function<double(double)>& g, double a, double b, double fa,
                        double fm, double fb, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = g(lm), frm = g(rm);
  double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(g, a, m, fa, flm, fm, tol / 2, depth - 1) +
         adaptive_simpson(g, m, b, fm, frm, fb, tol / 2, depth - 1);
}

double quad_abs_pow(const Poly& p, double a, double b, double pw, double tol) {
  auto g = [&](double x) { return std::pow(std::abs(p.eval(x)), pw); };
  // split at roots so the integrand is smooth on each panel
  auto rs = roots_in(p, a, b);
  std::vector<double> pts{a};
  pts.insert(pts.end(), rs.begin(), rs.end());
  pts.push_back(b);
  double total = 0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    double l = pts[i], r = pts[i + 1];
    if (r <= l) continue;
    double m = 0.5 * (l + r);
    total += adaptive_simpson(g, l, r, g(l), g(m), g(r), tol / (pts.size() - 1), 40);
  }
  return total;
}

}  // namespace

LpValue poly_abs_integral(const Poly& p, const Rational& a, const Rational& b) {
  LpValue out;
  if (p.is_zero() || !(a < b)) return out;
  if (p.degree() == 0) {
    out.value = to_double(rat_abs(p.coeff(0)) * (b - a));
    return out;
  }
  if (p.degree() == 1) {
    // rational root; exact split
    Rational root = -p.coeff(0) / p.coeff(1);
    Rational total(0);
    if (root > a && root < b)
      total = rat_abs(p.integral(a, root)) + rat_abs(p.integral(root, b));
    else
      total = rat_abs(p.integral(a, b));
    out.value = to_double(total);
    return out;
  }
  // degree 2..3: split at double-precision roots (documented, near machine-exact)
  double ad = to_double(a), bd = to_double(b);
  auto rs = roots_in(p, ad, bd);
  std::vector<double> pts{ad};
  pts.insert(pts.end(), rs.begin(), rs.end());
  pts.push_back(bd);
  Poly A = p.antiderivative();
  double total = 0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) total += std::abs(A.eval(pts[i + 1]) - A.eval(pts[i]));
  out.value = total;
  out.exact = rs.empty();  // no interior sign change: |integral| is exact
  if (rs.empty()) out.value = to_double(rat_abs(p.integral(a, b)));
  out.tol = rs.empty() ? 0.0 : 1e-13;
  return out;
}

namespace {

double poly_sup_abs(const Poly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) return 0.0;
  double ad = to_double(a), bd = to_double(b);
  double m = std::max(std::abs(p.eval(ad)), std::abs(p.eval(bd)));
  for (double r : roots_in(p.derivative(), ad, bd)) m = std::max(m, std::abs(p.eval(r)));
  return m;
}

}  // namespace

LpValue lp_norm(const ExactPiecewise& f, double p,
                std::optional<std::pair<Rational, Rational>> domain) {
  if (!(p > 0)) throw std::invalid_argument("lp_norm: p must be positive");
  ExactPiecewise g = domain ? f.restricted(domain->first, domain->second) : f;
  LpValue out;
  if (g.is_zero()) return out;
  const auto& br = g.breakpoints();
  if (std::isinf(p)) {
    double m = 0;
    for (size_t i = 0; i < g.pieces().size(); ++i)
      m = std::max(m, poly_sup_abs(g.pieces()[i], br[i], br[i + 1]));
    out.value = m;
    return out;
  }
  if (p == 1.0) {
    double total = 0;
    for (size_t i = 0; i < g.pieces().size(); ++i) {
      LpValue piece = poly_abs_integral(g.pieces()[i], br[i], br[i + 1]);
      total += piece.value;
      out.exact = out.exact && piece.exact;
      out.tol = std::max(out.tol, piece.tol);
    }
    out.value = total;
    return out;
  }
  if (p == 2.0) {
    Rational total(0);
    for (size_t i = 0; i < g.pieces().size(); ++i) {
      const Poly& q = g.pieces()[i];
      total += (q * q).integral(br[i], br[i + 1]);
    }
    out.value = std::sqrt(to_double(total));
    return out;
  }
  // general p: exact on constant pieces, adaptive quadrature otherwise
  const double tol = 1e-10;
  double total = 0;
  bool used_quad = false;
  for (size_t i = 0; i < g.pieces().size(); ++i) {
    const Poly& q = g.pieces()[i];
    double len = to_double(br[i + 1] - br[i]);
    if (q.degree() <= 0) {
      total += std::pow(std::abs(to_double(q.coeff(0))), p) * len;
    } else {
      total += quad_abs_pow(q, to_double(br[i]), to_double(br[i + 1]), p, tol);
      used_quad = true;
    }
  }
  out.value = std::pow(total, 1.0 / p);
  out.exact = !used_quad;
  out.tol = used_quad ? tol : 0.0;
  return out;
}

double total_variation(const ExactPiecewise& f) {
  if (f.is_zero()) return 0.0;
  DerivativeParts d = derivative(f);
  double tv = lp_norm(d.ac, 1.0).value;
  for (const auto& [loc, jump] : d.jumps.jumps) tv += std::abs(to_double(jump));
  return tv;
}

}  // namespace dyadlab
