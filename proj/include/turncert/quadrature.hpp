#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <utility>
#include <vector>

#include "turncert/errors.hpp"
#include "turncert/interval.hpp"
#include "turncert/jet.hpp"

namespace turncert {

enum class QuadStatus { Ok, DivByZero, DepthExceeded, Empty };

struct QuadStats {
  long long calls = 0;
  int max_depth = 0;
};

struct QuadResult {
  Interval value{0.0};
  QuadStatus status = QuadStatus::Ok;
  QuadStats stats;
};

enum class SplitPolicy { Geometric, Arithmetic };
enum class QuadRule { Simpson, GaussLegendre2 };

struct AdaptiveConfig {
  double abs_tol = 1e-5;
  double rel_tol = 1e-5;
  int max_depth = 18;
  SplitPolicy split = SplitPolicy::Arithmetic;
  QuadRule rule = QuadRule::Simpson;
};

// Simpson with the derivative remainder: the cubic-exact node sum minus
// (b-a)^5/2880 times a fourth-derivative range over the whole window.
template <typename F>
Interval simpson_1d(F&& f, const Interval& a, const Interval& b) {
  Interval h = b - a;
  Interval mid = scale_pow2(a + b, -1);
  Interval nodes = f(a) + f(b) + 4.0 * f(mid);
  Interval d4 = derivative_bound(f, Interval(a.lo, b.hi), 4);
  return h / 6.0 * nodes - pow_int(h, 5) / 2880.0 * d4;
}

// Two-node Gauss-Legendre: nodes at the center offset by (b-a)*sqrt(3)/6,
// remainder +(b-a)^5/4320 times the fourth-derivative range.
template <typename F>
Interval gl2_1d(F&& f, const Interval& a, const Interval& b) {
  Interval h = b - a;
  Interval c = scale_pow2(a + b, -1);
  Interval r = h * constants::sqrt3() / 6.0;
  Interval nodes = f(c - r) + f(c + r);
  Interval d4 = derivative_bound(f, Interval(a.lo, b.hi), 4);
  return scale_pow2(h, -1) * nodes + pow_int(h, 5) / 4320.0 * d4;
}

namespace detail {

// Directional fourth-derivative ranges over a box, one axis jetted at a
// time while the other stays a plain interval.
template <typename F2>
Interval dx4_over(F2&& f, const Interval& X, const Interval& Y) {
  auto g = [&f, &Y](const Jet& jx) { return f(jx, Y); };
  return derivative_bound(g, X, 4);
}

template <typename F2>
Interval dy4_over(F2&& f, const Interval& X, const Interval& Y) {
  auto g = [&f, &X](const Jet& jy) { return f(X, jy); };
  return derivative_bound(g, Y, 4);
}

}  // namespace detail

// Tensor 9-node Simpson over [X.lo,X.hi] x [Y.lo,Y.hi] with the two
// directional remainder terms.
template <typename F2>
Interval simpson_2d(F2&& f, const Interval& X, const Interval& Y) {
  Interval ax(X.lo), bx(X.hi), ay(Y.lo), by(Y.hi);
  Interval mx = scale_pow2(ax + bx, -1), my = scale_pow2(ay + by, -1);
  Interval hx = bx - ax, hy = by - ay;
  Interval s1 = f(ax, ay) + f(ax, by) + f(bx, ay) + f(bx, by);
  Interval s4 = f(mx, ay) + f(mx, by) + f(ax, my) + f(bx, my);
  Interval s16 = f(mx, my);
  Interval nodes = s1 + 4.0 * s4 + 16.0 * s16;
  Interval area = hx * hy;
  Interval rem = area / 2880.0 *
                 (pow_int(hx, 4) * detail::dx4_over(f, X, Y) +
                  pow_int(hy, 4) * detail::dy4_over(f, X, Y));
  return area / 36.0 * nodes - rem;
}

// Tensor 4-node Gauss-Legendre analogue of simpson_2d.
template <typename F2>
Interval gl2_2d(F2&& f, const Interval& X, const Interval& Y) {
  Interval ax(X.lo), bx(X.hi), ay(Y.lo), by(Y.hi);
  Interval cx = scale_pow2(ax + bx, -1), cy = scale_pow2(ay + by, -1);
  Interval hx = bx - ax, hy = by - ay;
  Interval rx = hx * constants::sqrt3() / 6.0, ry = hy * constants::sqrt3() / 6.0;
  Interval x0 = cx - rx, x1 = cx + rx, y0 = cy - ry, y1 = cy + ry;
  Interval nodes = f(x0, y0) + f(x0, y1) + f(x1, y0) + f(x1, y1);
  Interval rem = (pow_int(hx, 5) * hy * detail::dx4_over(f, X, Y) +
                  pow_int(hy, 5) * hx * detail::dy4_over(f, X, Y)) /
                 4320.0;
  return hx * hy / 4.0 * nodes + rem;
}

namespace detail {

inline double arithmetic_cut(double a, double b) { return a + 0.5 * (b - a); }

// Geometric probing point; equal endpoint ratios when it applies.  A left
// endpoint at or below zero quietly degrades to the arithmetic midpoint,
// which is what singular-endpoint domains starting at 0 need.
inline double geometric_cut(double a, double b) {
  if (a <= 0.0) return arithmetic_cut(a, b);
  double m = std::sqrt(a) * std::sqrt(b);
  if (!(m > a && m < b)) m = arithmetic_cut(a, b);
  return m;
}

inline double cut_point(SplitPolicy p, double a, double b) {
  return p == SplitPolicy::Geometric ? geometric_cut(a, b)
                                     : arithmetic_cut(a, b);
}

template <typename F>
Interval rule_eval_1d(F&& f, double a, double b, QuadRule rule) {
  return rule == QuadRule::Simpson ? simpson_1d(f, Interval(a), Interval(b))
                                   : gl2_1d(f, Interval(a), Interval(b));
}

template <typename F2>
Interval rule_eval_2d(F2&& f, double ax, double bx, double ay, double by,
                      QuadRule rule) {
  Interval X(ax, bx), Y(ay, by);
  return rule == QuadRule::Simpson ? simpson_2d(f, X, Y) : gl2_2d(f, X, Y);
}

}  // namespace detail

// FIFO adaptive bisection.  A piece is accepted when its enclosure width
// meets max(abs_tol, rel_tol * piece measure); an evaluation failure forces
// a split instead of aborting, since refinement usually separates the
// enclosure from the troublesome set.  At the depth cap an unresolved piece
// falls back to whole-interval evaluation, keeping the total sound at the
// cost of width; if even that fails the result is flagged DivByZero.
template <typename F>
QuadResult adaptive_1d(F&& f, const Interval& a, const Interval& b,
                       const AdaptiveConfig& cfg) {
  QuadResult res;
  double a0 = a.lo, b0 = b.hi;
  if (!(a0 < b0)) {
    res.status = a0 == b0 ? QuadStatus::Ok : QuadStatus::Empty;
    return res;
  }
  struct Seg {
    double a, b;
    int depth;
  };
  std::deque<Seg> work{{a0, b0, 0}};
  while (!work.empty()) {
    Seg s = work.front();
    work.pop_front();
    ++res.stats.calls;
    res.stats.max_depth = std::max(res.stats.max_depth, s.depth);
    bool evaluated = true;
    Interval e(0.0);
    try {
      e = detail::rule_eval_1d(f, s.a, s.b, cfg.rule);
    } catch (const EnclosureError&) {
      evaluated = false;
    }
    double meas = s.b - s.a;
    if (evaluated &&
        width(e) <= std::max(cfg.abs_tol, cfg.rel_tol * meas)) {
      res.value += e;
      continue;
    }
    double m = s.depth < cfg.max_depth
                   ? detail::cut_point(cfg.split, s.a, s.b)
                   : s.a;
    if (m > s.a && m < s.b) {
      work.push_back({s.a, m, s.depth + 1});
      work.push_back({m, s.b, s.depth + 1});
      continue;
    }
    try {
      Interval whole = f(Interval(s.a, s.b)) * (Interval(s.b) - Interval(s.a));
      if (evaluated) whole = intersect(whole, e);
      res.value += whole;
      if (res.status == QuadStatus::Ok) res.status = QuadStatus::DepthExceeded;
    } catch (const EnclosureError&) {
      if (evaluated) {
        res.value += e;
        if (res.status == QuadStatus::Ok)
          res.status = QuadStatus::DepthExceeded;
      } else {
        res.status = QuadStatus::DivByZero;
      }
    }
  }
  return res;
}

template <typename F2>
QuadResult adaptive_2d(F2&& f, const Interval& X, const Interval& Y,
                       const AdaptiveConfig& cfg) {
  QuadResult res;
  if (!(X.lo < X.hi) || !(Y.lo < Y.hi)) {
    res.status = (X.lo == X.hi || Y.lo == Y.hi) ? QuadStatus::Ok
                                                : QuadStatus::Empty;
    return res;
  }
  struct Cell {
    double ax, bx, ay, by;
    int depth;
  };
  std::deque<Cell> work{{X.lo, X.hi, Y.lo, Y.hi, 0}};
  while (!work.empty()) {
    Cell s = work.front();
    work.pop_front();
    ++res.stats.calls;
    res.stats.max_depth = std::max(res.stats.max_depth, s.depth);
    bool evaluated = true;
    Interval e(0.0);
    try {
      e = detail::rule_eval_2d(f, s.ax, s.bx, s.ay, s.by, cfg.rule);
    } catch (const EnclosureError&) {
      evaluated = false;
    }
    double meas = (s.bx - s.ax) * (s.by - s.ay);
    if (evaluated &&
        width(e) <= std::max(cfg.abs_tol, cfg.rel_tol * meas)) {
      res.value += e;
      continue;
    }
    double mx = s.ax, my = s.ay;
    if (s.depth < cfg.max_depth) {
      mx = detail::cut_point(cfg.split, s.ax, s.bx);
      my = detail::cut_point(cfg.split, s.ay, s.by);
    }
    if (mx > s.ax && mx < s.bx && my > s.ay && my < s.by) {
      work.push_back({s.ax, mx, s.ay, my, s.depth + 1});
      work.push_back({mx, s.bx, s.ay, my, s.depth + 1});
      work.push_back({s.ax, mx, my, s.by, s.depth + 1});
      work.push_back({mx, s.bx, my, s.by, s.depth + 1});
      continue;
    }
    try {
      Interval whole = f(Interval(s.ax, s.bx), Interval(s.ay, s.by)) *
                       (Interval(s.bx) - Interval(s.ax)) *
                       (Interval(s.by) - Interval(s.ay));
      if (evaluated) whole = intersect(whole, e);
      res.value += whole;
      if (res.status == QuadStatus::Ok) res.status = QuadStatus::DepthExceeded;
    } catch (const EnclosureError&) {
      if (evaluated) {
        res.value += e;
        if (res.status == QuadStatus::Ok)
          res.status = QuadStatus::DepthExceeded;
      } else {
        res.status = QuadStatus::DivByZero;
      }
    }
  }
  return res;
}

// Integral over [0, eps] of num/den when num vanishes to order p and den to
// order q at 0 (p >= q): factoring x^p and x^q out of Taylor forms leaves
//   eps^(p-q+1)/(p-q+1) * (q!/p!) * num^(p)([0,eps]) / den^(q)([0,eps]).
// The vanishing orders are the caller's analytic claim; the computed jet
// coefficients below them must at least contain zero or the claim is
// rejected, as is a denominator derivative range through zero.
template <typename FN, typename FD>
Interval singular_cancel_1d(FN&& num, FD&& den, const Interval& eps, int p,
                            int q) {
  if (q < 0 || q > p) throw std::logic_error("vanishing orders need p >= q >= 0");
  Jet::check_order(p);
  Interval X(0.0, eps.hi);
  Jet nj = num(Jet::variable(X, p));
  Jet dj = den(Jet::variable(X, q));
  for (int k = 0; k < p; ++k)
    if (!contains_zero(nj.c[k]))
      throw CancellationFailed(
          "numerator coefficient below the claimed vanishing order is nonzero");
  for (int k = 0; k < q; ++k)
    if (!contains_zero(dj.c[k]))
      throw CancellationFailed(
          "denominator coefficient below the claimed vanishing order is nonzero");
  Interval dp = Interval(detail::kFactorial[p]) * nj.c[p];
  Interval dq = Interval(detail::kFactorial[q]) * dj.c[q];
  if (contains_zero(dq))
    throw CancellationFailed("denominator derivative range encloses zero");
  int r = p - q;
  Interval lead = pow_int(eps, r + 1) / Interval(static_cast<double>(r + 1));
  return lead * ratio(static_cast<long long>(detail::kFactorial[q]),
                      static_cast<long long>(detail::kFactorial[p])) *
         (dp / dq);
}

// Branch and bound for the signed supremum of f over a domain: pieces
// ranked by their upper range bound, a running lower bound from point
// probes, pieces that cannot beat the lower bound dropped.  Returns
// [lb, ub] with ub - lb <= tol.  A negative result certifies f < 0
// everywhere, which is how monotonicity of the curve components is shown.
template <typename F>
Interval bound_sup_signed(F&& f, const Interval& domain, double tol,
                          long long max_steps = 500000) {
  using Piece = std::pair<double, std::pair<double, double>>;
  std::priority_queue<Piece> heap;
  double best_lb;
  {
    Interval whole = f(domain);
    Interval probe = f(Interval(detail::arithmetic_cut(domain.lo, domain.hi)));
    best_lb = std::max(whole.lo, probe.lo);
    if (whole.hi - best_lb <= tol) return {best_lb, whole.hi};
    heap.push({whole.hi, {domain.lo, domain.hi}});
  }
  for (long long step = 0; step < max_steps && !heap.empty(); ++step) {
    auto [ub, seg] = heap.top();
    if (ub - best_lb <= tol) return {best_lb, ub};
    heap.pop();
    auto [a, b] = seg;
    double m = detail::arithmetic_cut(a, b);
    if (!(m > a && m < b)) {
      // Unsplittable piece whose bound still exceeds the target gap.
      throw DepthExceeded("sup bound stalled on a point-width piece");
    }
    const double halves[2][2] = {{a, m}, {m, b}};
    for (auto& h : halves) {
      Interval e = f(Interval(h[0], h[1]));
      Interval probe = f(Interval(detail::arithmetic_cut(h[0], h[1])));
      best_lb = std::max({best_lb, e.lo, probe.lo});
      if (e.hi > best_lb) heap.push({e.hi, {h[0], h[1]}});
    }
  }
  if (heap.empty()) return {best_lb, best_lb};
  throw DepthExceeded("sup bound did not reach the requested width");
}

// sup |f| over a domain, same machinery on the folded function.
template <typename F>
Interval bound_sup(F&& f, const Interval& domain, double tol,
                   long long max_steps = 500000) {
  return bound_sup_signed([&f](const Interval& x) { return abs(f(x)); },
                          domain, tol, max_steps);
}

}  // namespace turncert
