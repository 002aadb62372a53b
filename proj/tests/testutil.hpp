#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "turncert/interval.hpp"

namespace testutil {

using turncert::Interval;

inline double nup(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline double ndn(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

// Representable-step distance from lo to hi, capped.
inline int steps_between(double lo, double hi, int cap) {
  int n = 0;
  double x = lo;
  while (x < hi && n <= cap) {
    x = nup(x);
    ++n;
  }
  return n;
}

inline bool width_le_ulps(const Interval& v, int n) {
  return steps_between(v.lo, v.hi, n + 1) <= n;
}

// Relative budget with an absolute floor: near a function's zero the kernels'
// absolute error pads dwarf the (denormal-sized) ulp there.
inline bool width_le_ulps_or_abs(const Interval& v, int n, double abs_cap) {
  return v.hi - v.lo <= abs_cap || width_le_ulps(v, n);
}

// Enclosure must contain the 1-ulp oracle bracket [blo,bhi] of the true value
// (sufficient for containing the value itself) and stay tight.
inline bool encloses_bracket(const Interval& enc, double blo, double bhi) {
  return enc.lo <= blo && bhi <= enc.hi;
}

struct Rng {
  std::mt19937_64 g;
  explicit Rng(uint64_t seed) : g(seed) {}

  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(g);
  }
  // magnitude 2^[e0,e1], random sign if signed_
  double log_uniform(double e0, double e1, bool signed_) {
    double m = std::ldexp(uniform(1.0, 2.0), (int)uniform(e0, e1));
    if (signed_ && (g() & 1)) m = -m;
    return m;
  }
  Interval interval_in(double a, double b, double wmax) {
    double c = uniform(a, b);
    double w = uniform(0.0, wmax);
    double l = std::max(a, c - 0.5 * w);
    double h = std::min(b, c + 0.5 * w);
    if (l > h) std::swap(l, h);
    return {l, h};
  }
  double point_in(const Interval& x) {
    if (x.lo == x.hi) return x.lo;
    return uniform(x.lo, x.hi);
  }
};

struct FnTruth {
  double x, lo, hi;
};

}  // namespace testutil
