#pragma once

// Outward-rounded interval arithmetic over binary64, self-contained: directed
// endpoint rounding is derived from error-free transformations (TwoSum / fma
// residuals) in round-to-nearest, so the floating-point environment is never
// touched and exact operations keep exact endpoints. Elementary functions use
// argument reduction plus double-double Taylor kernels with explicit error
// pads that over-cover the truncation and rounding analysis by several
// orders of magnitude.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>

#include "turncert/errors.hpp"

namespace turncert {

namespace detail {

inline double next_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline double next_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

// Below this magnitude the fma residual of a product or quotient may itself
// be inexact (subnormal range); step outward unconditionally there.
inline constexpr double kEftFloor = 0x1p-900;

[[noreturn]] inline void nan_in_arith() {
  throw DomainError("NaN produced in interval arithmetic");
}

// a + b rounded toward -inf / +inf. The TwoSum error term is exact for all
// finite operands, so the directed result is the tightest representable one.
inline double add_down(double a, double b) {
  double s = a + b;
  if (!std::isfinite(s)) {
    if (std::isnan(s)) nan_in_arith();
    if (s > 0 && std::isfinite(a) && std::isfinite(b))
      return std::numeric_limits<double>::max();
    return s;
  }
  double bp = s - a;
  double err = (a - (s - bp)) + (b - bp);
  return err < 0 ? next_down(s) : s;
}
inline double add_up(double a, double b) {
  double s = a + b;
  if (!std::isfinite(s)) {
    if (std::isnan(s)) nan_in_arith();
    if (s < 0 && std::isfinite(a) && std::isfinite(b))
      return -std::numeric_limits<double>::max();
    return s;
  }
  double bp = s - a;
  double err = (a - (s - bp)) + (b - bp);
  return err > 0 ? next_up(s) : s;
}
inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

inline double mul_down(double a, double b) {
  double p = a * b;
  if (!std::isfinite(p)) {
    if (std::isnan(p)) nan_in_arith();
    if (p > 0 && std::isfinite(a) && std::isfinite(b))
      return std::numeric_limits<double>::max();
    return p;
  }
  if (a == 0 || b == 0) return p;
  if (std::fabs(p) < kEftFloor) return next_down(p);
  double err = std::fma(a, b, -p);
  return err < 0 ? next_down(p) : p;
}
inline double mul_up(double a, double b) {
  double p = a * b;
  if (!std::isfinite(p)) {
    if (std::isnan(p)) nan_in_arith();
    if (p < 0 && std::isfinite(a) && std::isfinite(b))
      return -std::numeric_limits<double>::max();
    return p;
  }
  if (a == 0 || b == 0) return p;
  if (std::fabs(p) < kEftFloor) return next_up(p);
  double err = std::fma(a, b, -p);
  return err > 0 ? next_up(p) : p;
}

// b must be nonzero (checked by the interval-level division).
inline double div_down(double a, double b) {
  double q = a / b;
  if (!std::isfinite(q)) {
    if (std::isnan(q)) nan_in_arith();
    if (q > 0 && std::isfinite(a)) return std::numeric_limits<double>::max();
    return q;
  }
  if (a == 0) return q;
  if (std::fabs(q) < kEftFloor || std::fabs(a) < kEftFloor) return next_down(q);
  double r = -std::fma(q, b, -a);  // a - q*b, exact away from the floors
  if (r == 0) return q;
  return ((r < 0) != (b < 0)) ? next_down(q) : q;
}
inline double div_up(double a, double b) {
  double q = a / b;
  if (!std::isfinite(q)) {
    if (std::isnan(q)) nan_in_arith();
    if (q < 0 && std::isfinite(a)) return -std::numeric_limits<double>::max();
    return q;
  }
  if (a == 0) return q;
  if (std::fabs(q) < kEftFloor || std::fabs(a) < kEftFloor) return next_up(q);
  double r = -std::fma(q, b, -a);
  if (r == 0) return q;
  return ((r > 0) != (b < 0)) ? next_up(q) : q;
}

// a >= 0. fma(s,s,-a) is the exact residual s^2 - a, whose sign locates the
// true root relative to s. For tiny a the residual itself can round to zero,
// so step unconditionally there.
inline double sqrt_down(double a) {
  if (a == 0) return 0.0;
  double s = std::sqrt(a);
  if (a < kEftFloor) return next_down(s);
  double r = std::fma(s, s, -a);
  return r > 0 ? next_down(s) : s;
}
inline double sqrt_up(double a) {
  if (a == 0) return 0.0;
  double s = std::sqrt(a);
  if (a < kEftFloor) return next_up(s);
  double r = std::fma(s, s, -a);
  return r < 0 ? next_up(s) : s;
}

}  // namespace detail

struct Interval {
  double lo;
  double hi;

  Interval() : lo(0.0), hi(0.0) {}
  Interval(double x) : lo(x), hi(x) {
    if (std::isnan(x)) detail::nan_in_arith();
  }
  Interval(double l, double h) : lo(l), hi(h) {
    if (std::isnan(l) || std::isnan(h) || l > h)
      throw DomainError("invalid interval endpoints");
  }

  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool is_point() const { return lo == hi; }
  // largest absolute value over the interval
  double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
  // smallest absolute value over the interval
  double mig() const {
    if (lo <= 0 && 0 <= hi) return 0.0;
    return std::min(std::fabs(lo), std::fabs(hi));
  }
};

inline bool operator==(const Interval& a, const Interval& b) {
  return a.lo == b.lo && a.hi == b.hi;
}

inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator+(const Interval& a, const Interval& b) {
  return {detail::add_down(a.lo, b.lo), detail::add_up(a.hi, b.hi)};
}
inline Interval operator-(const Interval& a, const Interval& b) {
  return {detail::sub_down(a.lo, b.hi), detail::sub_up(a.hi, b.lo)};
}
inline Interval operator*(const Interval& a, const Interval& b) {
  using namespace detail;
  double d = std::min(std::min(mul_down(a.lo, b.lo), mul_down(a.lo, b.hi)),
                      std::min(mul_down(a.hi, b.lo), mul_down(a.hi, b.hi)));
  double u = std::max(std::max(mul_up(a.lo, b.lo), mul_up(a.lo, b.hi)),
                      std::max(mul_up(a.hi, b.lo), mul_up(a.hi, b.hi)));
  return {d, u};
}
inline Interval operator/(const Interval& a, const Interval& b) {
  using namespace detail;
  if (b.lo <= 0 && 0 <= b.hi) throw DivByZero();
  double d = std::min(std::min(div_down(a.lo, b.lo), div_down(a.lo, b.hi)),
                      std::min(div_down(a.hi, b.lo), div_down(a.hi, b.hi)));
  double u = std::max(std::max(div_up(a.lo, b.lo), div_up(a.lo, b.hi)),
                      std::max(div_up(a.hi, b.lo), div_up(a.hi, b.hi)));
  return {d, u};
}

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }
inline Interval& operator/=(Interval& a, const Interval& b) { return a = a / b; }

// x^2 without the sign-crossing slack of x*x: never dips below zero.
inline Interval sqr(const Interval& x) {
  using namespace detail;
  if (x.lo >= 0) return {mul_down(x.lo, x.lo), mul_up(x.hi, x.hi)};
  if (x.hi <= 0) return {mul_down(x.hi, x.hi), mul_up(x.lo, x.lo)};
  return {0.0, std::max(mul_up(x.lo, x.lo), mul_up(x.hi, x.hi))};
}

inline Interval pow_int(const Interval& x, int n) {
  if (n < 0) return Interval(1.0) / pow_int(x, -n);
  if (n == 0) return Interval(1.0);
  if (n == 1) return x;
  Interval h = pow_int(x, n / 2);
  Interval h2 = sqr(h);
  return (n % 2 == 0) ? h2 : h2 * x;
}

// Exact scaling by 2^k, stepping outward only on subnormal/overflow loss.
inline Interval scale_pow2(const Interval& x, int k) {
  auto one = [&](double v, bool down) {
    double s = std::ldexp(v, k);
    if (std::isfinite(s) && std::ldexp(s, -k) == v) return s;
    return down ? detail::next_down(s) : detail::next_up(s);
  };
  return {one(x.lo, true), one(x.hi, false)};
}

// Tight enclosure of the rational p/q (q != 0), for non-dyadic constants.
inline Interval ratio(long long p, long long q) {
  return Interval(static_cast<double>(p)) / Interval(static_cast<double>(q));
}

// ---- set operations ----

inline Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}
inline Interval intersect(const Interval& a, const Interval& b) {
  double l = std::max(a.lo, b.lo), h = std::min(a.hi, b.hi);
  if (l > h) throw EmptyIntersection();
  return {l, h};
}
inline bool disjoint(const Interval& a, const Interval& b) {
  return a.hi < b.lo || b.hi < a.lo;
}
inline Interval max_iv(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}
inline Interval min_iv(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}
inline double width(const Interval& a) { return detail::sub_up(a.hi, a.lo); }
inline double midpoint_arith(const Interval& a) {
  double m = a.lo + 0.5 * (a.hi - a.lo);
  if (!(m >= a.lo)) m = a.lo;
  if (!(m <= a.hi)) m = a.hi;
  return m;
}
inline double midpoint_geom(const Interval& a) {
  if (!(a.lo > 0)) throw InvalidGeomSplit();
  double g = std::sqrt(a.lo) * std::sqrt(a.hi);
  if (!(g >= a.lo)) g = a.lo;
  if (!(g <= a.hi)) g = a.hi;
  return g;
}
inline bool contains_zero(const Interval& a) { return a.lo <= 0 && 0 <= a.hi; }

inline Interval abs(const Interval& x) {
  if (x.lo >= 0) return x;
  if (x.hi <= 0) return -x;
  return {0.0, x.mag()};
}

inline std::ostream& operator<<(std::ostream& os, const Interval& x) {
  return os << "[" << x.lo << ", " << x.hi << "]";
}

// ---- frozen constants (1-ulp two-sided enclosures) ----

namespace constants {
inline Interval pi() { return {0x1.921fb54442d18p+1, 0x1.921fb54442d19p+1}; }
inline Interval two_pi() { return {0x1.921fb54442d18p+2, 0x1.921fb54442d19p+2}; }
inline Interval half_pi() { return {0x1.921fb54442d18p+0, 0x1.921fb54442d19p+0}; }
inline Interval pi_over_3() { return {0x1.0c152382d7365p+0, 0x1.0c152382d7366p+0}; }
inline Interval two_pi_over_3() { return {0x1.0c152382d7365p+1, 0x1.0c152382d7366p+1}; }
inline Interval ln2() { return {0x1.62e42fefa39efp-1, 0x1.62e42fefa39f0p-1}; }
inline Interval e() { return {0x1.5bf0a8b145769p+1, 0x1.5bf0a8b14576ap+1}; }
inline Interval sqrt3() { return {0x1.bb67ae8584caap+0, 0x1.bb67ae8584cabp+0}; }
}  // namespace constants

// ---- elementary functions ----

namespace detail {

// Double-double value; hi + lo with |lo| <= ulp(hi)/2 after renormalization.
struct DD {
  double hi, lo;
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bp = s - a;
  double err = (a - (s - bp)) + (b - bp);
  return {s, err};
}
inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}
inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}
inline DD dd_add(const DD& a, const DD& b) {
  DD s = two_sum(a.hi, b.hi);
  DD t = two_sum(a.lo, b.lo);
  DD v = quick_two_sum(s.hi, s.lo + t.hi);
  return quick_two_sum(v.hi, v.lo + t.lo);
}
inline DD dd_neg(const DD& a) { return {-a.hi, -a.lo}; }
inline DD dd_mul(const DD& a, const DD& b) {
  DD p = two_prod(a.hi, b.hi);
  double lo = p.lo + (a.hi * b.lo + a.lo * b.hi);
  return quick_two_sum(p.hi, lo);
}
inline DD dd_mul_d(const DD& a, double b) {
  DD p = two_prod(a.hi, b);
  return quick_two_sum(p.hi, p.lo + a.lo * b);
}
inline DD dd_div_d(const DD& a, double b) {
  double q1 = a.hi / b;
  DD p = two_prod(q1, b);
  double r = ((a.hi - p.hi) - p.lo) + a.lo;
  return quick_two_sum(q1, r / b);
}
inline DD dd_div(const DD& a, const DD& b) {
  double q1 = a.hi / b.hi;
  DD p = dd_mul_d(b, q1);
  DD r = dd_add(a, dd_neg(p));
  double q2 = (r.hi + r.lo) / (b.hi + b.lo);
  return quick_two_sum(q1, q2);
}

// Two-word constants; the dropped tails are below 2^-108 and are absorbed by
// the kernels' error pads.
inline constexpr DD kLn2{0x1.62e42fefa39efp-1, 0x1.abc9e3b39803fp-56};
inline constexpr DD kInvLn2{0x1.71547652b82fep+0, 0x1.777d0ffda0d24p-56};
inline constexpr DD kHalfPi{0x1.921fb54442d18p+0, 0x1.1a62633145c07p-54};
inline constexpr double kTwoOverPi = 0x1.45f306dc9c883p-1;

// Error pads. Each kernel's rounding+truncation+reduction error analysis
// lands near 2^-95 relative; the pads below over-cover it by > 2^15 while
// staying far below half an ulp, so point enclosures stay <= 2 ulp wide.
inline constexpr double kPadRel = 0x1p-78;
inline constexpr double kPadAbsTrig = 0x1p-80;   // covers k*|pi/2 tail|, k <= 7e5
inline constexpr double kPadAbsExp = 0x1p-85;    // pre-scale, value in [0.7, 1.5]
inline constexpr double kPadAbsLog = 0x1p-85;

inline const DD* inv_fact_table() {
  static const auto table = [] {
    static DD t[27];
    t[0] = {1.0, 0.0};
    for (int n = 1; n <= 26; ++n) t[n] = dd_div_d(t[n - 1], double(n));
    return t;
  }();
  return table;
}

// Sound interval 1/n!: the dd table above is only an approximation (its error
// lives inside the kernels' pads); series evaluated directly in interval
// arithmetic need genuine enclosures.
inline const Interval* inv_fact_iv_table() {
  static const auto table = [] {
    static Interval t[27];
    t[0] = Interval(1.0);
    for (int n = 1; n <= 26; ++n) t[n] = t[n - 1] / Interval(double(n));
    return t;
  }();
  return table;
}

// [v.hi + v.lo - err, v.hi + v.lo + err] with directed rounding. The pad is
// folded into the tail first so a sub-ulp pad does not cost a whole step per
// side.
inline Interval dd_to_interval(const DD& v, double err) {
  double lo = add_down(v.hi, sub_down(v.lo, err));
  double hi = add_up(v.hi, add_up(v.lo, err));
  return {lo, hi};
}

struct ScaledEnclosure {
  DD v;
  double err;  // |true_unscaled - v| <= err
  int k;       // true value = 2^k * unscaled
};

// exp(x) for |x| <= 709.8; returns the mantissa-range core and binary scale.
inline ScaledEnclosure exp_core(double x) {
  const DD* inv_fact = inv_fact_table();
  double kd = std::nearbyint(x * kInvLn2.hi);
  DD t1 = two_prod(kd, kLn2.hi);
  DD r = dd_add(two_sum(x, -t1.hi), DD{-t1.lo, 0.0});
  DD t2 = two_prod(kd, kLn2.lo);
  r = dd_add(r, dd_neg(t2));
  // |r| <= ln2/2 + slack; degree-19 Taylor leaves < 4e-28 truncation
  DD s = inv_fact[19];
  for (int n = 18; n >= 0; --n) s = dd_add(inv_fact[n], dd_mul(s, r));
  double err = kPadRel * std::fabs(s.hi) + kPadAbsExp;
  return {s, err, (int)kd};
}

inline Interval exp_point(double x) {
  if (x == 0) return Interval(1.0);
  if (x > 709.8) {
    return {std::numeric_limits<double>::max(),
            std::numeric_limits<double>::infinity()};
  }
  if (x < -745.2) return {0.0, 0x0.0000000000001p-1022};
  ScaledEnclosure e = exp_core(x);
  return scale_pow2(dd_to_interval(e.v, e.err), e.k);
}

struct SinCos {
  Interval s, c;
};

// Payne-Hanek-free reduction: |x| is capped by callers at 1e6, so the
// quadrant index fits a double exactly and two-word pi/2 suffices.
inline SinCos sincos_point(double x) {
  const DD* inv_fact = inv_fact_table();
  double kd = std::nearbyint(x * kTwoOverPi);
  DD t1 = two_prod(kd, kHalfPi.hi);
  DD r = dd_add(two_sum(x, -t1.hi), DD{-t1.lo, 0.0});
  DD t2 = two_prod(kd, kHalfPi.lo);
  r = dd_add(r, dd_neg(t2));
  DD u = dd_mul(r, r);  // |r| <= pi/4 + slack
  // sin r = r * P(r^2), cos r = Q(r^2); degree 25/26 leaves < 3e-31
  DD p = inv_fact[25];
  for (int n = 23; n >= 1; n -= 2) p = dd_add(inv_fact[n], dd_mul(dd_neg(p), u));
  DD sv = dd_mul(r, p);
  DD q = inv_fact[26];
  for (int n = 24; n >= 0; n -= 2) q = dd_add(inv_fact[n], dd_mul(dd_neg(q), u));
  double err = kPadRel + kPadAbsTrig;  // |sin|,|cos| <= 1
  Interval sr = dd_to_interval(sv, err);
  Interval cr = dd_to_interval(q, err);
  long long qk = (long long)kd & 3;
  if (qk < 0) qk += 4;
  SinCos out;
  switch (qk) {
    case 0: out = {sr, cr}; break;
    case 1: out = {cr, -sr}; break;
    case 2: out = {-sr, -cr}; break;
    default: out = {-cr, sr}; break;
  }
  Interval unit{-1.0, 1.0};
  out.s = intersect(out.s, unit);
  out.c = intersect(out.c, unit);
  return out;
}

inline Interval log_point(double x) {
  // x > 0 checked by caller
  if (x == 1.0) return Interval(0.0);
  int k = 0;
  double m = std::frexp(x, &k);  // m in [0.5, 1)
  if (m < 0x1.6a09e667f3bcdp-1) {
    m *= 2;
    k -= 1;
  }
  // ln m = 2 atanh(t), t = (m-1)/(m+1), |t| <= 0.1716
  DD num = two_sum(m, -1.0);
  DD den = two_sum(m, 1.0);
  DD t = dd_div(num, den);
  DD u = dd_mul(t, t);
  DD s{0.0, 0.0};
  for (int n = 33; n >= 3; n -= 2) {
    s = dd_mul(dd_add(s, dd_div_d(DD{2.0, 0.0}, double(n))), u);
  }
  s = dd_mul(dd_add(s, DD{2.0, 0.0}), t);
  DD kl = dd_mul_d(kLn2, double(k));
  DD v = dd_add(s, kl);
  double err = kPadRel * std::fabs(v.hi) + kPadAbsLog;
  return dd_to_interval(v, err);
}

inline const double kMaxTrigArg = 1e6;

}  // namespace detail

inline Interval exp(const Interval& x) {
  Interval lo_enc = detail::exp_point(x.lo);
  Interval hi_enc = detail::exp_point(x.hi);
  return {lo_enc.lo, hi_enc.hi};
}

inline Interval sqrt(const Interval& x) {
  if (x.lo < 0) throw DomainError("sqrt of an interval meeting the negative axis");
  return {detail::sqrt_down(x.lo), detail::sqrt_up(x.hi)};
}

inline Interval log(const Interval& x) {
  if (x.lo <= 0) throw DomainError("log needs a strictly positive interval");
  Interval lo_enc = detail::log_point(x.lo);
  Interval hi_enc = detail::log_point(x.hi);
  return {lo_enc.lo, hi_enc.hi};
}

namespace detail {

// Integer multiples m*pi + offset intersecting X, for extremum/pole scans.
// Conservative: a candidate is reported when its enclosure meets X.
template <typename F>
inline void for_pi_grid_hits(const Interval& X, const Interval& offset, F&& f) {
  Interval pi = constants::pi();
  double approx_pi = 3.141592653589793;
  long long k0 = (long long)std::floor(X.lo / approx_pi) - 2;
  long long k1 = (long long)std::ceil(X.hi / approx_pi) + 2;
  for (long long k = k0; k <= k1; ++k) {
    Interval cand = pi * Interval(double(k)) + offset;
    if (!disjoint(cand, X)) f(k);
  }
}

}  // namespace detail

inline Interval sin(const Interval& x) {
  using namespace detail;
  if (std::fabs(x.lo) > kMaxTrigArg || std::fabs(x.hi) > kMaxTrigArg ||
      width(x) >= 6.3)
    return {-1.0, 1.0};
  Interval r = hull(sincos_point(x.lo).s, sincos_point(x.hi).s);
  // maxima at pi/2 + 2k pi, minima at -pi/2 + 2k pi
  for_pi_grid_hits(x, constants::half_pi(), [&](long long k) {
    if (k % 2 == 0)
      r.hi = 1.0;
    else
      r.lo = -1.0;
  });
  return intersect(r, {-1.0, 1.0});
}

inline Interval cos(const Interval& x) {
  using namespace detail;
  if (std::fabs(x.lo) > kMaxTrigArg || std::fabs(x.hi) > kMaxTrigArg ||
      width(x) >= 6.3)
    return {-1.0, 1.0};
  Interval r = hull(sincos_point(x.lo).c, sincos_point(x.hi).c);
  for_pi_grid_hits(x, Interval(0.0), [&](long long k) {
    if (k % 2 == 0)
      r.hi = 1.0;
    else
      r.lo = -1.0;
  });
  return intersect(r, {-1.0, 1.0});
}

inline Interval tan(const Interval& x) {
  using namespace detail;
  if (std::fabs(x.lo) > kMaxTrigArg || std::fabs(x.hi) > kMaxTrigArg)
    throw DomainError("tan argument too large");
  bool pole = false;
  for_pi_grid_hits(x, constants::half_pi(), [&](long long) { pole = true; });
  if (pole) throw PoleError("tan over an interval containing a pole");
  SinCos a = sincos_point(x.lo);
  SinCos b = sincos_point(x.hi);
  // pole-free => tan is increasing from lo to hi
  Interval t_lo, t_hi;
  try {
    t_lo = a.s / a.c;
    t_hi = b.s / b.c;
  } catch (const DivByZero&) {
    throw PoleError("tan endpoint too close to a pole");
  }
  return {t_lo.lo, t_hi.hi};
}

namespace detail {

// sinh on [0, 0.25] by its odd series in plain interval arithmetic: relative
// tightness survives near 0, where the exp formula would cancel.
inline Interval sinh_series(const Interval& x) {
  const Interval* inv_fact = inv_fact_iv_table();
  Interval u = sqr(x);
  Interval s(0.0);
  for (int n = 19; n >= 3; n -= 2) s = (s + inv_fact[n]) * u;
  // truncation: next term < (0.25)^20/21! relative to x
  Interval trunc{-0x1p-90, 0x1p-90};
  return x * (s + Interval(1.0) + trunc);
}

inline Interval cosh_series(const Interval& x) {
  const Interval* inv_fact = inv_fact_iv_table();
  Interval u = sqr(x);
  Interval s(0.0);
  for (int n = 18; n >= 2; n -= 2) s = (s + inv_fact[n]) * u;
  // truncation: next term < (0.25)^20/20!
  Interval trunc{-0x1p-90, 0x1p-90};
  return s + Interval(1.0) + trunc;
}

inline Interval sinh_point(double x) {
  if (x == 0) return Interval(0.0);
  double ax = std::fabs(x);
  Interval r;
  if (ax <= 0.25) {
    r = sinh_series(Interval(ax));
  } else {
    Interval e = exp_point(ax);
    r = (e - Interval(1.0) / e) * Interval(0.5);
  }
  return x > 0 ? r : -r;
}

inline Interval cosh_point(double x) {
  if (x == 0) return Interval(1.0);
  double ax = std::fabs(x);
  if (ax <= 0.25) return cosh_series(Interval(ax));
  Interval e = exp_point(ax);
  return (e + Interval(1.0) / e) * Interval(0.5);
}

}  // namespace detail

inline Interval sinh(const Interval& x) {
  Interval a = detail::sinh_point(x.lo);
  Interval b = detail::sinh_point(x.hi);
  return {a.lo, b.hi};
}

inline Interval cosh(const Interval& x) {
  Interval a = detail::cosh_point(x.lo);
  Interval b = detail::cosh_point(x.hi);
  if (contains_zero(x)) return {1.0, std::max(a.hi, b.hi)};
  if (x.hi <= 0) return {b.lo, a.hi};
  return {a.lo, b.hi};
}

namespace detail {

// atan(x) + atan(1/x) = pi/2 exactly for x > 0; 1.0/x rounds, and the slip is
// |atan(1/x) - atan(fl(1/x))| <= |1/x - fl(1/x)| <= ulp(1/x).
inline Interval atan_residual_correction(double x) {
  double inv = 1.0 / x;
  double pad = std::fabs(inv) * 0x1p-52 + 0x1p-1070;
  return {-pad, pad};
}

inline Interval atan_point(double x) {
  if (x == 0) return Interval(0.0);
  if (x < 0) return -atan_point(-x);
  if (x > 1.0) return constants::half_pi() - atan_point(1.0 / x) +
                      atan_residual_correction(x);
  Interval t(x);
  int doublings = 0;
  while (t.hi > 0.125) {
    t = t / (Interval(1.0) + sqrt(Interval(1.0) + sqr(t)));
    ++doublings;
  }
  Interval u = sqr(t);
  Interval s(0.0);
  for (int n = 15; n >= 3; n -= 2) {
    s = (s + ratio((n % 4 == 3) ? -1 : 1, n)) * u;
  }
  s = (s + Interval(1.0)) * t;
  // alternating series: truncation below |t|^16/17 * t <= 2^-52.09 * t
  s = s + Interval(-0x1p-51, 0x1p-51) * t;
  return scale_pow2(s, doublings);
}

}  // namespace detail

inline Interval atan(const Interval& x) {
  Interval a = detail::atan_point(x.lo);
  Interval b = detail::atan_point(x.hi);
  return {a.lo, b.hi};
}

}  // namespace turncert
