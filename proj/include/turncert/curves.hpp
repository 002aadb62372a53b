#pragma once

#include <optional>
#include <type_traits>

#include "turncert/errors.hpp"
#include "turncert/interval.hpp"
#include "turncert/jet.hpp"

namespace turncert {

// The interface families whose turning behaviour gets decided.  Each one is
// an odd planar curve alpha -> (z1(alpha), z2(alpha)) with z1 strictly
// increasing; they differ in the damping of z1, in the shape of z2, and in
// whether z2 is compactly supported.
enum class CurveId {
  Thm1,
  Thm2a,
  Thm2b,
  Thm2c,
  Thm3a,
  Thm3b,
  Thm3c,
  Bifurcation,
};

struct CurveFamily {
  CurveId id = CurveId::Thm1;
  // Amplitude of the second component; only the Bifurcation family uses it
  // (z2 = h2 * unit shape).  Zero elsewhere.
  Interval h2{0.0};
  // Decay rate K of the exp(-K alpha^2) factor damping sin(alpha) inside
  // z1.  Empty means z1 = alpha - sin(alpha) exactly.
  std::optional<Interval> gauss_rate;
};

inline CurveFamily make_curve(CurveId id, const Interval& h2 = Interval(0.0)) {
  CurveFamily c;
  c.id = id;
  c.h2 = h2;
  switch (id) {
    case CurveId::Thm1:
    case CurveId::Bifurcation:
      c.gauss_rate = ratio(1, 10000);
      break;
    case CurveId::Thm3a:
    case CurveId::Thm3b:
    case CurveId::Thm3c:
      c.gauss_rate = ratio(1, 100);
      break;
    default:
      break;
  }
  return c;
}

namespace detail {

inline const Interval& window_of(const Interval& x) { return x; }
inline const Interval& window_of(const Jet& j) { return j.point; }

inline Interval zero_like(const Interval&) { return Interval(0.0); }
inline Jet zero_like(const Jet& j) {
  return Jet::constant(Interval(0.0), j.order, j.point);
}

inline std::optional<Interval> clip(const Interval& X, double lo, double hi) {
  double a = std::max(X.lo, lo), b = std::min(X.hi, hi);
  if (a > b) return std::nullopt;
  return Interval(a, b);
}

}  // namespace detail

// Sum of two unit Gaussians centred at -2 and 2; the localised bump that
// keeps the slope of z2 at zero below the slope of its leading sine.
template <typename T>
T bump_pair(const T& t) {
  return exp(-sqr(t + 2.0)) + exp(-sqr(t - 2.0));
}

template <typename T>
T bump_pair_deriv(const T& t) {
  return -2.0 * ((t + 2.0) * exp(-sqr(t + 2.0)) + (t - 2.0) * exp(-sqr(t - 2.0)));
}

namespace detail {

// Evaluate a smooth odd core that is truncated to [-pi, pi].  Interval
// windows that straddle the support boundary fall back to a hull with 0,
// sound because the true function is continuous there; jets cannot cross
// the kink, so they are rejected.
template <typename T, typename Core>
T compact_odd(const T& t, Core&& core) {
  const Interval& X = window_of(t);
  const Interval b = constants::pi();
  if (X.lo >= -b.lo && X.hi <= b.lo) return core(t);
  if (X.lo >= b.hi || X.hi <= -b.hi) return zero_like(t);
  if constexpr (std::is_same_v<std::decay_t<T>, Interval>) {
    Interval inner = core(intersect(X, Interval(-b.hi, b.hi)));
    return hull(inner, Interval(0.0));
  } else {
    throw DomainError("expansion window spans the support boundary of the curve");
  }
}

template <typename T>
T thm2a_core(const T& t) {
  return ratio(1, 3) * sin(3.0 * t) - sin(t) * bump_pair(t);
}
template <typename T>
T thm2a_core_deriv(const T& t) {
  return cos(3.0 * t) - (cos(t) * bump_pair(t) + sin(t) * bump_pair_deriv(t));
}

template <typename T>
T thm2b_core(const T& t) {
  return 0.5 * sin(2.0 * t) - ratio(2, 3) * sin(t) * bump_pair(t);
}
template <typename T>
T thm2b_core_deriv(const T& t) {
  return cos(2.0 * t) -
         ratio(2, 3) * (cos(t) * bump_pair(t) + sin(t) * bump_pair_deriv(t));
}

template <typename T>
T thm2c_core(const T& t) {
  return ratio(5, 7) * sin(2.0 * t) - 0.5 * sin(t) * bump_pair(t);
}
template <typename T>
T thm2c_core_deriv(const T& t) {
  return ratio(10, 7) * cos(2.0 * t) -
         0.5 * (cos(t) * bump_pair(t) + sin(t) * bump_pair_deriv(t));
}

template <typename T>
T thm3b_core(const T& t) {
  return 0.5 * sin(2.0 * t) - ratio(17, 20) * sin(t) * bump_pair(t);
}
template <typename T>
T thm3b_core_deriv(const T& t) {
  return cos(2.0 * t) -
         ratio(17, 20) * (cos(t) * bump_pair(t) + sin(t) * bump_pair_deriv(t));
}

template <typename T>
T thm3c_core(const T& t) {
  return ratio(5, 9) * sin(2.0 * t) - ratio(7, 10) * sin(t) * bump_pair(t);
}
template <typename T>
T thm3c_core_deriv(const T& t) {
  return ratio(10, 9) * cos(2.0 * t) -
         ratio(7, 10) * (cos(t) * bump_pair(t) + sin(t) * bump_pair_deriv(t));
}

template <typename T>
T bif_core(const T& t) {
  return (3.0 / constants::pi()) *
         (ratio(1, 3) * sin(3.0 * t) - ratio(2, 5) * sin(t) * bump_pair(t));
}
template <typename T>
T bif_core_deriv(const T& t) {
  return (3.0 / constants::pi()) *
         (cos(3.0 * t) -
          ratio(2, 5) * (cos(t) * bump_pair(t) + sin(t) * bump_pair_deriv(t)));
}

// Piecewise second component of the Thm1 family: a sine arch on
// [-pi/3, pi/3], straight lines out to +-2pi/3, zero beyond, odd overall.
// The breakpoints are irrational, so each one is known only as a 1-ulp
// bracket; interval windows take the hull over every piece they might
// touch, jets must stay strictly inside one piece.
template <typename T, bool Slope>
T thm1_piecewise(const T& t) {
  const Interval b1 = constants::pi_over_3();
  const Interval b2 = constants::half_pi();
  const Interval b3 = constants::two_pi_over_3();
  const Interval& X = window_of(t);

  if (X.lo >= -b1.lo && X.hi <= b1.lo) {
    if constexpr (Slope)
      return cos(3.0 * t);
    else
      return ratio(1, 3) * sin(3.0 * t);
  }
  if (X.lo >= b3.hi || X.hi <= -b3.hi) return zero_like(t);
  if (X.lo >= b1.hi && X.hi <= b2.lo) {
    if constexpr (Slope)
      return -1.0 + zero_like(t);
    else
      return b1 - t;
  }
  if (X.lo >= b2.hi && X.hi <= b3.lo) {
    if constexpr (Slope)
      return 1.0 + zero_like(t);
    else
      return t - b3;
  }
  if (X.lo >= -b2.lo && X.hi <= -b1.hi) {
    if constexpr (Slope)
      return -1.0 + zero_like(t);
    else
      return -t - b1;
  }
  if (X.lo >= -b3.lo && X.hi <= -b2.hi) {
    if constexpr (Slope)
      return 1.0 + zero_like(t);
    else
      return t + b3;
  }

  if constexpr (std::is_same_v<std::decay_t<T>, Interval>) {
    bool any = false;
    Interval acc(0.0);
    auto add = [&](const Interval& v) {
      acc = any ? hull(acc, v) : v;
      any = true;
    };
    if (auto w = clip(X, -b1.hi, b1.hi))
      add(Slope ? cos(3.0 * *w) : ratio(1, 3) * sin(3.0 * *w));
    if (auto w = clip(X, b1.lo, b2.hi)) add(Slope ? Interval(-1.0) : b1 - *w);
    if (auto w = clip(X, b2.lo, b3.hi)) add(Slope ? Interval(1.0) : *w - b3);
    if (auto w = clip(X, -b2.hi, -b1.lo)) add(Slope ? Interval(-1.0) : -*w - b1);
    if (auto w = clip(X, -b3.hi, -b2.lo)) add(Slope ? Interval(1.0) : *w + b3);
    if (X.hi >= b3.lo || X.lo <= -b3.lo) add(Interval(0.0));
    return acc;
  } else {
    throw DomainError("expansion window spans a breakpoint of the piecewise curve");
  }
}

}  // namespace detail

// Normalized second component of the Bifurcation family, sup-norm certified
// below 0.65 elsewhere; the family scales it by h2.
template <typename T>
T bifurcation_unit_z2(const T& t) {
  return detail::compact_odd(t, [](const auto& x) { return detail::bif_core(x); });
}

template <typename T>
T bifurcation_unit_dz2(const T& t) {
  return detail::compact_odd(t,
                             [](const auto& x) { return detail::bif_core_deriv(x); });
}

template <typename T>
T curve_z1(const CurveFamily& c, const T& t) {
  if (!c.gauss_rate) return t - sin(t);
  return t - sin(t) * exp(-(*c.gauss_rate * sqr(t)));
}

template <typename T>
T curve_dz1(const CurveFamily& c, const T& t) {
  if (!c.gauss_rate) return 1.0 - cos(t);
  const Interval& K = *c.gauss_rate;
  return 1.0 - exp(-(K * sqr(t))) * (cos(t) - scale_pow2(K, 1) * t * sin(t));
}

template <typename T>
T curve_z2(const CurveFamily& c, const T& t) {
  switch (c.id) {
    case CurveId::Thm1:
      return detail::thm1_piecewise<T, false>(t);
    case CurveId::Thm2a:
      return detail::thm2a_core(t);
    case CurveId::Thm2b:
      return detail::thm2b_core(t);
    case CurveId::Thm2c:
      return detail::thm2c_core(t);
    case CurveId::Thm3a:
      return detail::compact_odd(
          t, [](const auto& x) { return detail::thm2a_core(x); });
    case CurveId::Thm3b:
      return detail::compact_odd(
          t, [](const auto& x) { return detail::thm3b_core(x); });
    case CurveId::Thm3c:
      return detail::compact_odd(
          t, [](const auto& x) { return detail::thm3c_core(x); });
    case CurveId::Bifurcation:
      return c.h2 * bifurcation_unit_z2(t);
  }
  throw std::logic_error("unreachable curve id");
}

template <typename T>
T curve_dz2(const CurveFamily& c, const T& t) {
  switch (c.id) {
    case CurveId::Thm1:
      return detail::thm1_piecewise<T, true>(t);
    case CurveId::Thm2a:
      return detail::thm2a_core_deriv(t);
    case CurveId::Thm2b:
      return detail::thm2b_core_deriv(t);
    case CurveId::Thm2c:
      return detail::thm2c_core_deriv(t);
    case CurveId::Thm3a:
      return detail::compact_odd(
          t, [](const auto& x) { return detail::thm2a_core_deriv(x); });
    case CurveId::Thm3b:
      return detail::compact_odd(
          t, [](const auto& x) { return detail::thm3b_core_deriv(x); });
    case CurveId::Thm3c:
      return detail::compact_odd(
          t, [](const auto& x) { return detail::thm3c_core_deriv(x); });
    case CurveId::Bifurcation:
      return c.h2 * bifurcation_unit_dz2(t);
  }
  throw std::logic_error("unreachable curve id");
}

// Slope of the second component at the origin, the scalar prefactor every
// velocity integral carries.  Positive for all families.
inline Interval curve_dz2_zero(const CurveFamily& c) {
  return curve_dz2(c, Interval(0.0));
}

}  // namespace turncert
