#pragma once

#include "turncert/curves.hpp"

namespace turncert {

// Constants a velocity integral depends on: density jump rho_bar, strip
// half-height h2, permeability contrast kappa.  All intervals so that a
// whole parameter box can be pushed through one evaluation.
struct ModelConstants {
  Interval rho_bar{1.0};
  Interval h2{0.0};
  Interval kappa{0.0};
};

// ---------------------------------------------------------------------------
// Sign-kernel integrand: dz1 sinh(z1) sin(z2) against the kernel pair
// (cosh z1 - cos z2)^-2 + (cosh z1 + cos z2)^-2.  `scale` folds the constant
// in front of the integral.  The minus kernel is singular where the curve
// passes through the origin, so it is also exposed as a separate vanishing
// numerator / denominator pair for the cancellation rule, with the plus
// kernel available alone as the regular remainder term.

template <typename T>
T sign_singular_num(const ModelConstants& mc, const CurveFamily& cv,
                    double scale, const T& t) {
  Interval pref = Interval(scale) * mc.rho_bar * curve_dz2_zero(cv);
  return pref *
         (curve_dz1(cv, t) * sinh(curve_z1(cv, t)) * sin(curve_z2(cv, t)));
}

template <typename T>
T sign_singular_den(const CurveFamily& cv, const T& t) {
  return sqr(cosh(curve_z1(cv, t)) - cos(curve_z2(cv, t)));
}

template <typename T>
T sign_regular_term(const ModelConstants& mc, const CurveFamily& cv,
                    double scale, const T& t) {
  return sign_singular_num(mc, cv, scale, t) /
         sqr(cosh(curve_z1(cv, t)) + cos(curve_z2(cv, t)));
}

template <typename T>
T sign_integrand(const ModelConstants& mc, const CurveFamily& cv, double scale,
                 const T& t) {
  T num = sign_singular_num(mc, cv, scale, t);
  T c1 = cosh(curve_z1(cv, t));
  T c2 = cos(curve_z2(cv, t));
  return num / sqr(c1 - c2) + num / sqr(c1 + c2);
}

// ---------------------------------------------------------------------------
// Flat-interface integrand: dz1 z1 z2 / (z1^2 + z2^2)^2, the unconfined
// analogue of the sign kernel.  Same singular split at the origin.

template <typename T>
T flat_singular_num(const ModelConstants& mc, const CurveFamily& cv,
                    double scale, const T& t) {
  Interval pref = Interval(scale) * mc.rho_bar * curve_dz2_zero(cv);
  return pref * (curve_dz1(cv, t) * curve_z1(cv, t) * curve_z2(cv, t));
}

template <typename T>
T flat_singular_den(const CurveFamily& cv, const T& t) {
  return sqr(sqr(curve_z1(cv, t)) + sqr(curve_z2(cv, t)));
}

template <typename T>
T flat_integrand(const ModelConstants& mc, const CurveFamily& cv, double scale,
                 const T& t) {
  return flat_singular_num(mc, cv, scale, t) / flat_singular_den(cv, t);
}

// ---------------------------------------------------------------------------
// Strip self-interaction integrand: dz1 sin(z1) sinh(z2) over
// (cosh z2 - cos z1)^2, fixed prefactor 2 rho_bar dz2(0).

template <typename T>
T strip_singular_num(const ModelConstants& mc, const CurveFamily& cv,
                     const T& t) {
  Interval pref = 2.0 * mc.rho_bar * curve_dz2_zero(cv);
  return pref *
         (curve_dz1(cv, t) * sin(curve_z1(cv, t)) * sinh(curve_z2(cv, t)));
}

template <typename T>
T strip_singular_den(const CurveFamily& cv, const T& t) {
  return sqr(cosh(curve_z2(cv, t)) - cos(curve_z1(cv, t)));
}

template <typename T>
T strip_integrand(const ModelConstants& mc, const CurveFamily& cv, const T& t) {
  return strip_singular_num(mc, cv, t) / strip_singular_den(cv, t);
}

// ---------------------------------------------------------------------------
// Strip exchange integrand (outer beta over [0, pi], inner gamma over
// [-pi, pi]): the permeability-jump correction for the confined periodic
// setting.  Linear in kappa.  At most one of the two arguments may be a
// jet; the other stays an interval.

template <typename TB, typename TG>
auto strip_exchange_integrand(const ModelConstants& mc, const CurveFamily& cv,
                              const TB& tb, const TG& tg) {
  Interval pref = mc.rho_bar * curve_dz2_zero(cv) * mc.kappa /
                  scale_pow2(constants::pi(), 1);
  auto z1g = curve_z1(cv, tg);
  auto wall = cosh(mc.h2 + curve_z2(cv, tg));
  auto common = curve_dz1(cv, tg) * (cosh(mc.h2) * cos(tb) - 1.0) /
                sqr(cosh(mc.h2) - cos(tb));
  auto kernels = sin(tb - z1g) / (wall - cos(tb - z1g)) -
                 sin(tb + z1g) / (wall - cos(tb + z1g));
  return pref * (common * kernels);
}

// ---------------------------------------------------------------------------
// Flat exchange integrand (outer beta over [0, M] plus a tail, inner gamma
// over [-pi, pi]): the permeability-jump correction for the flat-at-
// infinity setting.

template <typename TB, typename TG>
auto flat_exchange_integrand(const ModelConstants& mc, const CurveFamily& cv,
                             const TB& tb, const TG& tg) {
  Interval pref =
      -2.0 * mc.rho_bar * curve_dz2_zero(cv) * mc.kappa / constants::pi();
  auto z1g = curve_z1(cv, tg);
  auto z2g = curve_z2(cv, tg);
  auto wall = sqr(mc.h2 + z2g);
  auto beta_fac = sqr(tb) / sqr(sqr(tb) + sqr(mc.h2));
  auto gam_fac = (mc.h2 + z2g) * curve_dz2(cv, tg);
  return pref * (gam_fac * (beta_fac * (1.0 / (wall + sqr(tb - z1g)) +
                                        1.0 / (wall + sqr(tb + z1g)))));
}

// ---------------------------------------------------------------------------
// Spectral integrand for the confined inhomogeneous setting, written in the
// Fourier variable y against the curve parameter gamma.  The denominator
// sinh(pi y) + kappa sinh(2 h2 y) can vanish for negative kappa; division
// then raises DivByZero and the caller splits its parameter box.

template <typename TY>
auto conf_spectral_weight(const ModelConstants& mc, const TY& ty) {
  Interval tan_h2 = tan(mc.h2);
  if (contains_zero(tan_h2))
    throw DomainError("tan(h2) encloses zero in the spectral weight");
  Interval gap = constants::half_pi() - mc.h2;
  return 2.0 * ty * cosh(ty * gap) * cosh(ty * constants::half_pi()) -
         2.0 * sinh(ty * mc.h2) / tan_h2;
}

template <typename TY>
auto conf_spectral_den(const ModelConstants& mc, const TY& ty) {
  return sinh(constants::pi() * ty) +
         mc.kappa * sinh(scale_pow2(mc.h2, 1) * ty);
}

// Common kappa-free factor of the spectral integrand and its kappa
// derivative.
template <typename TY, typename TG>
auto conf_spectral_core(const ModelConstants& mc, const CurveFamily& cv,
                        const TY& ty, const TG& tg) {
  auto z1g = curve_z1(cv, tg);
  auto z2g = curve_z2(cv, tg);
  Interval gap = constants::half_pi() - mc.h2;
  return curve_dz2(cv, tg) * cos(z1g * ty) * conf_spectral_weight(mc, ty) *
         cosh(ty * z2g) * cosh(ty * gap) / cosh(ty * constants::half_pi());
}

template <typename TY, typename TG>
auto conf_spectral_integrand(const ModelConstants& mc, const CurveFamily& cv,
                             const TY& ty, const TG& tg) {
  Interval pref = 4.0 * mc.rho_bar * curve_dz2_zero(cv) * mc.kappa;
  return pref * conf_spectral_core(mc, cv, ty, tg) /
         conf_spectral_den(mc, ty);
}

// d/dkappa of the spectral integrand: the kappa/D bracket differentiates
// to sinh(pi y)/D^2 and the loose kappa prefactor drops.
template <typename TY, typename TG>
auto conf_spectral_dk_integrand(const ModelConstants& mc,
                                const CurveFamily& cv, const TY& ty,
                                const TG& tg) {
  Interval pref = 4.0 * mc.rho_bar * curve_dz2_zero(cv);
  auto den = conf_spectral_den(mc, ty);
  return pref * conf_spectral_core(mc, cv, ty, tg) *
         sinh(constants::pi() * ty) / sqr(den);
}

// Full-line form of the spectral integrand before the oddness reduction
// folds gamma and y onto (0, inf).  Summing it over +-gamma must give
// exactly twice the reduced integrand; kept as a consistency probe.
inline Interval conf_spectral_fullline(const ModelConstants& mc,
                                       const CurveFamily& cv, const Interval& y,
                                       const Interval& g) {
  Interval tan_h2 = tan(mc.h2);
  if (contains_zero(tan_h2))
    throw DomainError("tan(h2) encloses zero in the spectral weight");
  Interval pref = 4.0 * mc.rho_bar * curve_dz2_zero(cv) * mc.kappa;
  Interval z1g = curve_z1(cv, g);
  Interval z2g = curve_z2(cv, g);
  Interval first = curve_dz2(cv, g) * cos(y * z1g) /
                   (conf_spectral_den(mc, y) * sinh(constants::pi() * y));
  Interval second = sinh(y * (constants::pi() - mc.h2 - z2g)) +
                    sinh(y * (mc.h2 - z2g));
  Interval third = y * cosh(y * (constants::pi() - mc.h2)) +
                   y * cosh(y * mc.h2) - 2.0 * sinh(y * mc.h2) / tan_h2;
  return pref * (first * second * third);
}

}  // namespace turncert
