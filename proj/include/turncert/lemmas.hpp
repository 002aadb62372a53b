#pragma once

#include "turncert/errors.hpp"
#include "turncert/interval.hpp"

namespace turncert {

// acos through atan and sqrt, for arguments strictly inside (-1, 1).
inline Interval acos_iv(const Interval& x) {
  if (!(x.lo > -1.0 && x.hi < 1.0))
    throw DomainError("acos argument must stay strictly inside (-1, 1)");
  return constants::half_pi() - atan(x / sqrt(1.0 - sqr(x)));
}

// Fourier transform of x -> sin(2 h2)/(cosh x + cos 2 h2), evaluated at
// zeta: sqrt(2 pi) sinh(2 h2 zeta)/sinh(pi zeta), with the removable value
// sqrt(2 pi) 2 h2/pi at zeta = 0.
inline Interval closed_form_fourier(const Interval& h2, const Interval& zeta) {
  if (!(h2.lo > 0.0 && h2.hi < constants::half_pi().lo))
    throw DomainError("height parameter must stay inside (0, pi/2)");
  Interval root = sqrt(scale_pow2(constants::pi(), 1));
  if (zeta.is_point() && zeta.lo == 0.0)
    return root * scale_pow2(h2, 1) / constants::pi();
  Interval den = sinh(constants::pi() * zeta);
  if (contains_zero(den))
    throw DomainError("zeta window straddles the removable zero");
  return root * sinh(scale_pow2(h2, 1) * zeta) / den;
}

// int_R cos(y xi)/(cosh(c - xi) + d) dxi for -1 < d < 1:
// -(2 pi/sqrt(1 - d^2)) cos(y c) sinh(y acos(-d) - y pi)/sinh(pi y).
inline Interval closed_form_cos_over_shifted_cosh(const Interval& d,
                                                  const Interval& c,
                                                  const Interval& y) {
  Interval den = sinh(constants::pi() * y);
  if (contains_zero(den))
    throw DomainError("frequency window straddles zero");
  Interval arg = y * acos_iv(-d) - y * constants::pi();
  return -(scale_pow2(constants::pi(), 1) / sqrt(1.0 - sqr(d))) * cos(y * c) *
         sinh(arg) / den;
}

// int_R cos(y xi)(b - cos(h2) cosh(xi - c))/(cosh(xi - c) + d)^2 dxi for
// -1 < d < 1, by differentiating the previous transform in d.
inline Interval closed_form_cos_over_shifted_cosh_sq(const Interval& y,
                                                      const Interval& c,
                                                      const Interval& b,
                                                      const Interval& d,
                                                      const Interval& h2) {
  Interval den = sinh(constants::pi() * y);
  if (contains_zero(den))
    throw DomainError("frequency window straddles zero");
  Interval arg = y * acos_iv(-d) - constants::pi() * y;
  Interval omd = 1.0 - sqr(d);
  Interval t1 = y * cosh(arg) * cos(c * y) * (d * cos(h2) + b) / omd;
  Interval t2 = sinh(arg) * cos(c * y) * (cos(h2) + d * b) / (omd * sqrt(omd));
  return scale_pow2(constants::pi(), 1) / den * (t1 + t2);
}

// int_R cos(b y) sinh(a y)/sinh(c y) dy for 0 < a < pi <= c:
// (pi/c) sin(pi a/c)/(cos(pi a/c) + cosh(pi b/c)).
inline Interval closed_form_sinh_ratio(const Interval& a, const Interval& b,
                                       const Interval& c) {
  if (!(a.lo > 0.0 && a.hi < constants::pi().lo))
    throw DomainError("numerator rate must stay inside (0, pi)");
  if (!(c.lo >= constants::pi().lo))
    throw DomainError("denominator rate must reach pi");
  Interval ratio_ac = constants::pi() * a / c;
  Interval ratio_bc = constants::pi() * b / c;
  return constants::pi() / c * sin(ratio_ac) /
         (cos(ratio_ac) + cosh(ratio_bc));
}

}  // namespace turncert
