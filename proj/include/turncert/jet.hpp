#pragma once

#include <array>
#include <stdexcept>

#include "turncert/errors.hpp"
#include "turncert/interval.hpp"

namespace turncert {

// Truncated Taylor series with interval coefficients, expanded about an
// interval point.  If x ranges over `point` and f is the represented
// function, then f^(k)(x)/k! lies in c[k] for every k <= order.  Expanding
// at a full interval turns coefficient k into a derivative range over the
// window, which is exactly what quadrature remainder terms consume.
struct Jet {
  static constexpr int kMaxOrder = 8;

  int order = 0;
  Interval point;
  std::array<Interval, kMaxOrder + 1> c{};

  static Jet constant(const Interval& v, int n, const Interval& pt) {
    check_order(n);
    Jet j;
    j.order = n;
    j.point = pt;
    j.c[0] = v;
    return j;
  }

  static Jet variable(const Interval& X, int n) {
    check_order(n);
    Jet j;
    j.order = n;
    j.point = X;
    j.c[0] = X;
    if (n >= 1) j.c[1] = Interval(1.0);
    return j;
  }

  static void check_order(int n) {
    if (n < 0 || n > kMaxOrder)
      throw std::logic_error("jet order out of range");
  }
};

namespace detail {

inline void check_frame(const Jet& a, const Jet& b) {
  if (a.order != b.order || a.point.lo != b.point.lo ||
      a.point.hi != b.point.hi)
    throw std::logic_error("jet operands have mismatched order or point");
}

inline constexpr double kFactorial[Jet::kMaxOrder + 1] = {
    1.0, 1.0, 2.0, 6.0, 24.0, 120.0, 720.0, 5040.0, 40320.0};

}  // namespace detail

inline Jet operator-(const Jet& a) {
  Jet r = a;
  for (int k = 0; k <= r.order; ++k) r.c[k] = -a.c[k];
  return r;
}

inline Jet operator+(const Jet& a, const Jet& b) {
  detail::check_frame(a, b);
  Jet r = a;
  for (int k = 0; k <= r.order; ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}

inline Jet operator-(const Jet& a, const Jet& b) {
  detail::check_frame(a, b);
  Jet r = a;
  for (int k = 0; k <= r.order; ++k) r.c[k] = a.c[k] - b.c[k];
  return r;
}

inline Jet operator*(const Jet& a, const Jet& b) {
  detail::check_frame(a, b);
  Jet r;
  r.order = a.order;
  r.point = a.point;
  for (int k = 0; k <= r.order; ++k) {
    Interval s(0.0);
    for (int i = 0; i <= k; ++i) s += a.c[i] * b.c[k - i];
    r.c[k] = s;
  }
  return r;
}

// Standard quotient recurrence: q_k = (a_k - sum_{j>=1} b_j q_{k-j}) / b_0.
inline Jet operator/(const Jet& a, const Jet& b) {
  detail::check_frame(a, b);
  if (contains_zero(b.c[0]))
    throw DivByZero("jet division by a leading coefficient containing zero");
  Jet r;
  r.order = a.order;
  r.point = a.point;
  for (int k = 0; k <= r.order; ++k) {
    Interval s = a.c[k];
    for (int j = 1; j <= k; ++j) s -= b.c[j] * r.c[k - j];
    r.c[k] = s / b.c[0];
  }
  return r;
}

inline Jet operator+(const Jet& a, const Interval& v) {
  Jet r = a;
  r.c[0] = a.c[0] + v;
  return r;
}
inline Jet operator+(const Interval& v, const Jet& a) { return a + v; }
inline Jet operator+(const Jet& a, double v) { return a + Interval(v); }
inline Jet operator+(double v, const Jet& a) { return a + Interval(v); }

inline Jet operator-(const Jet& a, const Interval& v) {
  Jet r = a;
  r.c[0] = a.c[0] - v;
  return r;
}
inline Jet operator-(const Interval& v, const Jet& a) {
  Jet r = -a;
  r.c[0] = v - a.c[0];
  return r;
}
inline Jet operator-(const Jet& a, double v) { return a - Interval(v); }
inline Jet operator-(double v, const Jet& a) { return Interval(v) - a; }

inline Jet operator*(const Jet& a, const Interval& v) {
  Jet r = a;
  for (int k = 0; k <= r.order; ++k) r.c[k] = a.c[k] * v;
  return r;
}
inline Jet operator*(const Interval& v, const Jet& a) { return a * v; }
inline Jet operator*(const Jet& a, double v) { return a * Interval(v); }
inline Jet operator*(double v, const Jet& a) { return a * Interval(v); }

inline Jet operator/(const Jet& a, const Interval& v) {
  Jet r = a;
  for (int k = 0; k <= r.order; ++k) r.c[k] = a.c[k] / v;
  return r;
}
inline Jet operator/(const Interval& v, const Jet& a) {
  return Jet::constant(v, a.order, a.point) / a;
}
inline Jet operator/(const Jet& a, double v) { return a / Interval(v); }
inline Jet operator/(double v, const Jet& a) { return Interval(v) / a; }

inline Jet sqr(const Jet& a) { return a * a; }

// Substitutes b into the series a by Horner evaluation.  a must be expanded
// over a point window covering everything b's value can reach, otherwise the
// outer coefficients do not bound the needed derivatives.
inline Jet compose(const Jet& a, const Jet& b) {
  if (a.order != b.order)
    throw std::logic_error("jet operands have mismatched order or point");
  if (!a.point.contains(b.c[0]))
    throw DomainError("jet composition target outside outer expansion window");
  Jet bs = b;
  bs.c[0] = Interval(0.0);
  Jet r = Jet::constant(a.c[a.order], b.order, b.point);
  for (int k = a.order - 1; k >= 0; --k) r = r * bs + a.c[k];
  return r;
}

namespace detail {

// Coupled recurrences: with w_k = k * a_k, the derivative pair (s, c)
// satisfies s_k = (1/k) sum w_j c_{k-j} and c_k = -(1/k) sum w_j s_{k-j}
// for the circular pair, with both signs positive for the hyperbolic one.
template <bool Circular>
inline void sin_cos_pair(const Jet& a, Jet& s, Jet& c) {
  s.order = c.order = a.order;
  s.point = c.point = a.point;
  if (Circular) {
    s.c[0] = sin(a.c[0]);
    c.c[0] = cos(a.c[0]);
  } else {
    s.c[0] = sinh(a.c[0]);
    c.c[0] = cosh(a.c[0]);
  }
  for (int k = 1; k <= a.order; ++k) {
    Interval us(0.0), uc(0.0);
    for (int j = 1; j <= k; ++j) {
      Interval w = Interval(static_cast<double>(j)) * a.c[j];
      us += w * c.c[k - j];
      uc += w * s.c[k - j];
    }
    Interval kk(static_cast<double>(k));
    s.c[k] = us / kk;
    c.c[k] = (Circular ? -uc : uc) / kk;
  }
}

}  // namespace detail

inline Jet sin(const Jet& a) {
  Jet s, c;
  detail::sin_cos_pair<true>(a, s, c);
  return s;
}

inline Jet cos(const Jet& a) {
  Jet s, c;
  detail::sin_cos_pair<true>(a, s, c);
  return c;
}

inline Jet tan(const Jet& a) {
  Jet s, c;
  detail::sin_cos_pair<true>(a, s, c);
  return s / c;
}

inline Jet sinh(const Jet& a) {
  Jet s, c;
  detail::sin_cos_pair<false>(a, s, c);
  return s;
}

inline Jet cosh(const Jet& a) {
  Jet s, c;
  detail::sin_cos_pair<false>(a, s, c);
  return c;
}

inline Jet exp(const Jet& a) {
  Jet r;
  r.order = a.order;
  r.point = a.point;
  r.c[0] = exp(a.c[0]);
  for (int k = 1; k <= a.order; ++k) {
    Interval u(0.0);
    for (int j = 1; j <= k; ++j)
      u += Interval(static_cast<double>(j)) * a.c[j] * r.c[k - j];
    r.c[k] = u / Interval(static_cast<double>(k));
  }
  return r;
}

// Range of f^(k) over X, as k! times coefficient k of f expanded at the
// whole window.  `order` may request a deeper jet than k when the caller
// wants several derivatives from one functor contract.
template <typename F>
Interval derivative_bound(F&& f, const Interval& X, int k, int order = -1) {
  int n = order < 0 ? k : order;
  if (k < 0 || n < k) throw std::logic_error("derivative order out of range");
  Jet::check_order(n);
  Jet j = f(Jet::variable(X, n));
  return Interval(detail::kFactorial[k]) * j.c[k];
}

}  // namespace turncert
