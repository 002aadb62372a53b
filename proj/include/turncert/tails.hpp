#pragma once

#include <algorithm>

#include "turncert/curves.hpp"
#include "turncert/models.hpp"
#include "turncert/quadrature.hpp"

namespace turncert {

namespace detail {

// Enclose the integral of |f| over one cell: Simpson with its derivative
// remainder when the sign is decided and the jets go through, plain
// range-times-width otherwise.  FV evaluates the signed integrand
// generically, FS gives its interval range on a cell.
template <typename FV, typename FS>
Interval abs_cell_integral(FV&& signed_f, FS&& cell_range, double a, double b) {
  Interval range = cell_range(Interval(a, b));
  if (!contains_zero(range)) {
    double sgn = range.lo > 0.0 ? 1.0 : -1.0;
    try {
      auto f = [&](const auto& x) { return sgn * signed_f(x); };
      return simpson_1d(f, Interval(a), Interval(b));
    } catch (const EnclosureError&) {
    }
  }
  return abs(range) * (Interval(b) - Interval(a));
}

template <typename FV, typename FS>
Interval abs_mesh_integral(FV&& signed_f, FS&& cell_range, double lo, double hi,
                           int pieces) {
  Interval total(0.0);
  for (int i = 0; i < pieces; ++i) {
    double a = lo + (hi - lo) * i / pieces;
    double b = (i + 1 == pieces) ? hi : lo + (hi - lo) * (i + 1) / pieces;
    total = total + abs_cell_integral(signed_f, cell_range, a, b);
  }
  return total;
}

}  // namespace detail

// Integral of |(h2 + z2) dz2| over [-pi, pi], the curve-dependent weight in
// the flat-exchange tail bound.
inline Interval curve_weight_l1(const ModelConstants& mc, const CurveFamily& cv,
                                int pieces = 1024) {
  double A = constants::pi().hi;
  auto signed_f = [&](const auto& x) {
    return (mc.h2 + curve_z2(cv, x)) * curve_dz2(cv, x);
  };
  auto cell_range = [&](const Interval& cell) {
    return (mc.h2 + curve_z2(cv, cell)) * curve_dz2(cv, cell);
  };
  return detail::abs_mesh_integral(signed_f, cell_range, -A, A, pieces);
}

// Integral of |dz2| over [0, pi] for the normalized bifurcation shape.
// Scales linearly to any amplitude, so callers cache it once.
inline Interval bifurcation_unit_weight_l1(int pieces = 1024) {
  auto signed_f = [](const auto& x) { return bifurcation_unit_dz2(x); };
  auto cell_range = [](const Interval& cell) {
    return bifurcation_unit_dz2(cell);
  };
  return detail::abs_mesh_integral(signed_f, cell_range, 0.0,
                                   constants::pi().hi, pieces);
}

// Closed form of int_M^inf dbeta / (beta^2 (beta - a)^2), by partial
// fractions.  Increasing in a on (-inf, M), which is what lets callers
// substitute a cell-wide upper endpoint for a.
inline Interval flat_tail_remainder(double M, double a) {
  Interval ai(a);
  Interval Mi(M);
  Interval log_term = scale_pow2(log((Mi - ai) / Mi), 1) / pow_int(ai, 3);
  Interval frac_term = (1.0 / Mi + 1.0 / (Mi - ai)) / sqr(ai);
  return frac_term + log_term;
}

// Bound on the flat-exchange integral beyond beta = M.  Both kernels are
// at most (beta -+ z1(gamma))^-2 and the beta weight is at most beta^-2,
// so each mesh cell contributes its |(h2 + z2) dz2| mass times the paired
// closed-form remainders at the cell's extreme z1 values.  The remainder
// formula cancels catastrophically as a -> 0, so small |a| arguments are
// pushed out to 2^-6; the remainder is increasing in a, which keeps that
// sound.
inline Interval tail_flat_exchange(double M, const ModelConstants& mc,
                                   const CurveFamily& cv, int pieces = 1024) {
  if (!(M > 2.0 * constants::pi().hi))
    throw TailInvalid("flat-exchange tail needs the cutoff beyond 2 pi");
  const double floor = 0.015625;
  auto signed_f = [&](const auto& x) {
    return (mc.h2 + curve_z2(cv, x)) * curve_dz2(cv, x);
  };
  auto cell_range = [&](const Interval& cell) {
    return (mc.h2 + curve_z2(cv, cell)) * curve_dz2(cv, cell);
  };
  const double lo = -constants::pi().hi;
  const double hi = constants::pi().hi;
  Interval acc(0.0);
  for (int i = 0; i < pieces; ++i) {
    double a = lo + (hi - lo) * i / pieces;
    double b = (i + 1 == pieces) ? hi : lo + (hi - lo) * (i + 1) / pieces;
    Interval w = detail::abs_cell_integral(signed_f, cell_range, a, b);
    Interval z1c = curve_z1(cv, Interval(a, b));
    if (!(abs(z1c).hi < 0.5 * M))
      throw TailInvalid("flat-exchange tail cutoff too close to the curve");
    Interval S = flat_tail_remainder(M, std::max(z1c.hi, floor)) +
                 flat_tail_remainder(M, std::max(-z1c.lo, floor));
    acc = acc + w * S;
  }
  Interval T = 2.0 * mc.rho_bar * abs(curve_dz2_zero(cv)) *
               (abs(mc.kappa) / constants::pi()) * acc;
  return Interval(0.0, T.hi);
}

enum class ConfTarget { I2, DI2 };

// Cap on the cosh growth ratios in the spectral tail: 2/(1 - e^{-2 pi M}),
// with the denominator of the spectral integrand eroded further when kappa
// can be negative.
inline Interval conf_tail_growth_cap(double M, const ModelConstants& mc) {
  Interval den = 1.0 - exp(constants::pi() * (-2.0 * M));
  if (mc.kappa.lo < 0.0) {
    Interval kneg(0.0, -mc.kappa.lo);
    den = den -
          kneg * exp(-(M * (constants::pi() - scale_pow2(mc.h2, 1))));
  }
  if (!(den.lo > 0.0))
    throw TailInvalid("spectral growth cap denominator not positive");
  return 2.0 / den;
}

// Bound on the spectral integral beyond y = M, for the integrand itself
// (I2) or its kappa derivative (DI2).  unit_l1 is the cached
// bifurcation_unit_weight_l1 value.
inline Interval tail_conf_spectral(double M, const ModelConstants& mc,
                                   const CurveFamily& cv, ConfTarget target,
                                   const Interval& unit_l1) {
  if (!(mc.h2.lo > 0.0))
    throw TailInvalid("spectral tail needs a positive strip height");
  if (!(mc.h2.hi < constants::half_pi().lo))
    throw TailInvalid("spectral tail needs h2 below pi/2");
  if (!(M * mc.h2.lo > constants::ln2().hi))
    throw TailInvalid("spectral tail cutoff below the exponential regime");
  Interval cap(conf_tail_growth_cap(M, mc).hi);
  Interval a = constants::pi() - ratio(13, 20) * mc.h2;
  Interval b = ratio(27, 20) * mc.h2;
  Interval bracket =
      exp(-(a * M)) / (tan(mc.h2) * a) + exp(-(b * M)) / b * (M + 1.0 / b);
  Interval weight = mc.h2 * unit_l1;
  Interval T;
  if (target == ConfTarget::I2)
    T = mc.rho_bar * curve_dz2_zero(cv) * abs(mc.kappa) * weight *
        (8.0 * cap) * bracket;
  else
    T = mc.rho_bar * curve_dz2_zero(cv) * weight * (4.0 * sqr(cap)) * bracket;
  return Interval(0.0, T.hi);
}

inline Interval tail_conf_spectral(double M, const ModelConstants& mc,
                                   const CurveFamily& cv, ConfTarget target) {
  return tail_conf_spectral(M, mc, cv, target, bifurcation_unit_weight_l1());
}

}  // namespace turncert
