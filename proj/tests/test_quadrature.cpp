#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <vector>

#include "testutil.hpp"
#include "turncert/interval.hpp"
#include "turncert/jet.hpp"
#include "turncert/quadrature.hpp"

using namespace turncert;
using testutil::width_le_ulps;

namespace {

const auto kCube = [](const auto& x) { return x * sqr(x); };
const auto kQuartic = [](const auto& x) { return sqr(sqr(x)); };
const auto kInv = [](const auto& x) { return 1.0 / x; };

AdaptiveConfig cfg_1d(double tol, QuadRule rule = QuadRule::Simpson,
                      SplitPolicy split = SplitPolicy::Arithmetic,
                      int depth = 18) {
  AdaptiveConfig c;
  c.abs_tol = tol;
  c.rel_tol = tol;
  c.max_depth = depth;
  c.rule = rule;
  c.split = split;
  return c;
}

void require_encloses(const Interval& enc, const Interval& oracle) {
  CAPTURE(enc.lo, enc.hi, oracle.lo, oracle.hi);
  REQUIRE(enc.lo <= oracle.lo);
  REQUIRE(oracle.hi <= enc.hi);
}

}  // namespace

TEST_CASE("simpson is exact on cubics", "[quad]") {
  Interval e = simpson_1d(kCube, Interval(0.0), Interval(1.0));
  REQUIRE(e.contains(0.25));
  REQUIRE(width_le_ulps(e, 8));
}

TEST_CASE("gauss-legendre remainder shifts the node sum onto the truth",
          "[quad]") {
  // Node sum alone is 7/36; the +24/4320 remainder closes the gap to 1/5.
  Interval e = gl2_1d(kQuartic, Interval(0.0), Interval(1.0));
  require_encloses(e, ratio(1, 5));
  REQUIRE(e.lo > 0.2 - 1e-10);
  REQUIRE(e.hi < 0.2 + 1e-10);
  // Simpson's remainder enters with the opposite sign: 5/24 - 1/120.
  Interval s = simpson_1d(kQuartic, Interval(0.0), Interval(1.0));
  require_encloses(s, ratio(1, 5));
  REQUIRE(s.hi < 0.2 + 1e-10);
}

TEST_CASE("two dimensional rules handle separable products", "[quad]") {
  const auto xy = [](const auto& x, const auto& y) { return x * y; };
  const auto xy3 = [](const auto& x, const auto& y) {
    return x * sqr(x) * (y * sqr(y));
  };
  const auto sinsin = [](const auto& x, const auto& y) {
    return sin(x) * sin(y);
  };
  Interval unit(0.0, 1.0);
  require_encloses(simpson_2d(xy, unit, unit), ratio(1, 4));
  Interval cube2 = simpson_2d(xy3, unit, unit);
  require_encloses(cube2, ratio(1, 16));
  REQUIRE(cube2.hi - cube2.lo <= 1e-12);
  Interval o = sqr(Interval(1.0) - cos(Interval(1.0)));
  require_encloses(simpson_2d(sinsin, unit, unit), o);
  require_encloses(gl2_2d(sinsin, unit, unit), o);
  require_encloses(gl2_2d(xy, unit, unit), ratio(1, 4));
}

TEST_CASE("adaptive quadrature meets the exponential tolerance target",
          "[quad]") {
  const auto f = [](const auto& x) { return exp(-x); };
  QuadResult r =
      adaptive_1d(f, Interval(0.125), Interval(16.125), cfg_1d(1e-5));
  REQUIRE(r.status == QuadStatus::Ok);
  require_encloses(r.value, exp(Interval(-0.125)) - exp(Interval(-16.125)));
  REQUIRE(r.value.hi - r.value.lo <= 1e-4);
}

TEST_CASE("closed form integral suite", "[quad]") {
  struct Entry {
    const char* name;
    std::function<QuadResult()> run;
    Interval oracle;
  };
  const Interval one(1.0);
  auto fixed = [](Interval e) {
    QuadResult r;
    r.value = e;
    r.stats.calls = 1;
    return r;
  };
  std::vector<Entry> suite;
  suite.push_back({"simpson x^3",
                   [&] { return fixed(simpson_1d(kCube, Interval(0.0), Interval(1.0))); },
                   ratio(1, 4)});
  suite.push_back({"simpson sin",
                   [&] {
                     return fixed(simpson_1d([](const auto& x) { return sin(x); },
                                             Interval(0.0), Interval(1.0)));
                   },
                   one - cos(one)});
  suite.push_back({"simpson cosh",
                   [&] {
                     return fixed(simpson_1d([](const auto& x) { return cosh(x); },
                                             Interval(0.0), Interval(0.1)));
                   },
                   sinh(Interval(0.1))});
  suite.push_back({"gl2 x^3",
                   [&] { return fixed(gl2_1d(kCube, Interval(0.0), Interval(1.0))); },
                   ratio(1, 4)});
  suite.push_back({"gl2 x^4",
                   [&] { return fixed(gl2_1d(kQuartic, Interval(0.0), Interval(1.0))); },
                   ratio(1, 5)});
  suite.push_back({"gl2 1/x",
                   [&] { return fixed(gl2_1d(kInv, Interval(1.0), Interval(2.0))); },
                   constants::ln2()});
  suite.push_back({"exp decay",
                   [&] {
                     return adaptive_1d([](const auto& x) { return exp(-x); },
                                        Interval(0.125), Interval(16.125),
                                        cfg_1d(1e-5));
                   },
                   exp(Interval(-0.125)) - exp(Interval(-16.125))});
  suite.push_back({"sine over near-pi",
                   [&] {
                     return adaptive_1d([](const auto& x) { return sin(x); },
                                        Interval(0.0), Interval(constants::pi().lo),
                                        cfg_1d(1e-6));
                   },
                   one - cos(Interval(constants::pi().lo))});
  suite.push_back({"exp",
                   [&] {
                     return adaptive_1d([](const auto& x) { return exp(x); },
                                        Interval(0.0), Interval(1.0), cfg_1d(1e-6));
                   },
                   exp(one) - one});
  suite.push_back({"odd rational",
                   [&] {
                     return adaptive_1d(
                         [](const auto& x) { return x / (1.0 + sqr(x)); },
                         Interval(0.0), Interval(1.0), cfg_1d(1e-6));
                   },
                   scale_pow2(constants::ln2(), -1)});
  suite.push_back({"sinh",
                   [&] {
                     return adaptive_1d([](const auto& x) { return sinh(x); },
                                        Interval(0.0), Interval(1.0), cfg_1d(1e-6));
                   },
                   cosh(one) - one});
  suite.push_back({"gaussian-ish product",
                   [&] {
                     return adaptive_1d(
                         [](const auto& x) { return x * exp(sqr(x)); },
                         Interval(0.0), Interval(1.0), cfg_1d(1e-6));
                   },
                   scale_pow2(exp(one) - one, -1)});
  suite.push_back({"tan",
                   [&] {
                     return adaptive_1d([](const auto& x) { return tan(x); },
                                        Interval(0.0), Interval(1.0), cfg_1d(1e-6));
                   },
                   -log(cos(one))});
  suite.push_back({"half-rate cosh",
                   [&] {
                     return adaptive_1d([](const auto& x) { return cosh(x * 0.5); },
                                        Interval(0.0), Interval(2.0), cfg_1d(1e-6));
                   },
                   scale_pow2(sinh(one), 1)});
  suite.push_back({"affine times sine",
                   [&] {
                     return adaptive_1d(
                         [](const auto& x) { return (1.0 + x) * sin(x); },
                         Interval(0.0), Interval(1.0), cfg_1d(1e-6));
                   },
                   one - scale_pow2(cos(one), 1) + sin(one)});
  suite.push_back({"inverse square",
                   [&] {
                     return adaptive_1d(
                         [](const auto& x) { return 1.0 / sqr(x); }, Interval(1.0),
                         Interval(3.0), cfg_1d(1e-6));
                   },
                   ratio(2, 3)});
  suite.push_back({"double-rate cosine",
                   [&] {
                     return adaptive_1d([](const auto& x) { return cos(x * 2.0); },
                                        Interval(0.0), Interval(1.0), cfg_1d(1e-6));
                   },
                   scale_pow2(sin(Interval(2.0)), -1)});
  suite.push_back({"square times exp",
                   [&] {
                     return adaptive_1d(
                         [](const auto& x) { return sqr(x) * exp(x); },
                         Interval(0.0), Interval(1.0), cfg_1d(1e-6));
                   },
                   exp(one) - 2.0});
  suite.push_back({"sinh cosh",
                   [&] {
                     return adaptive_1d(
                         [](const auto& x) { return sinh(x) * cosh(x); },
                         Interval(0.0), Interval(1.0), cfg_1d(1e-6));
                   },
                   scale_pow2(sqr(sinh(one)), -1)});
  suite.push_back({"geometric split reciprocal",
                   [&] {
                     return adaptive_1d(kInv, Interval(0.5), Interval(2.0),
                                        cfg_1d(1e-6, QuadRule::GaussLegendre2,
                                               SplitPolicy::Geometric));
                   },
                   scale_pow2(constants::ln2(), 1)});
  suite.push_back({"2d separable exp",
                   [&] {
                     return adaptive_2d(
                         [](const auto& x, const auto& y) { return exp(-x - y); },
                         Interval(0.0, 1.0), Interval(0.0, 2.0), cfg_1d(1e-5));
                   },
                   (one - exp(Interval(-1.0))) * (one - exp(Interval(-2.0)))});
  suite.push_back({"2d inverse square",
                   [&] {
                     return adaptive_2d(
                         [](const auto& x, const auto& y) {
                           return 1.0 / sqr(x * y);
                         },
                         Interval(1.0, 2.0), Interval(1.0, 3.0), cfg_1d(1e-5));
                   },
                   ratio(1, 3)});
  suite.push_back({"2d gl2 sine product",
                   [&] {
                     return adaptive_2d(
                         [](const auto& x, const auto& y) {
                           return sin(x) * sin(y);
                         },
                         Interval(0.0, 1.0), Interval(0.0, 1.0),
                         cfg_1d(1e-5, QuadRule::GaussLegendre2));
                   },
                   sqr(one - cos(one))});
  REQUIRE(suite.size() >= 20);
  for (const auto& entry : suite) {
    INFO(entry.name);
    QuadResult r = entry.run();
    REQUIRE(r.status == QuadStatus::Ok);
    REQUIRE(r.stats.calls >= 1);
    require_encloses(r.value, entry.oracle);
  }
}

TEST_CASE("halving tolerances refines toward the oracle", "[quad]") {
  struct Probe {
    std::function<QuadResult(double)> run;
    Interval oracle;
  };
  std::vector<Probe> probes;
  probes.push_back({[](double tol) {
                      return adaptive_1d([](const auto& x) { return exp(-x); },
                                         Interval(0.125), Interval(16.125),
                                         cfg_1d(tol));
                    },
                    exp(Interval(-0.125)) - exp(Interval(-16.125))});
  probes.push_back({[](double tol) {
                      return adaptive_1d([](const auto& x) { return tan(x); },
                                         Interval(0.0), Interval(1.0),
                                         cfg_1d(tol));
                    },
                    -log(cos(Interval(1.0)))});
  probes.push_back({[](double tol) {
                      return adaptive_1d(
                          [](const auto& x) { return 1.0 / sqr(x); },
                          Interval(1.0), Interval(3.0), cfg_1d(tol));
                    },
                    ratio(2, 3)});
  for (auto& p : probes) {
    double tol = 1e-3;
    QuadResult prev = p.run(tol);
    REQUIRE(prev.status == QuadStatus::Ok);
    require_encloses(prev.value, p.oracle);
    for (int step = 0; step < 3; ++step) {
      tol *= 0.5;
      QuadResult next = p.run(tol);
      REQUIRE(next.status == QuadStatus::Ok);
      require_encloses(next.value, p.oracle);
      Interval allowed = hull(prev.value, p.oracle);
      REQUIRE(allowed.contains(next.value));
      prev = next;
    }
  }
}

TEST_CASE("split policies agree on containment", "[quad]") {
  Interval oracle = scale_pow2(constants::ln2(), 1);
  for (SplitPolicy sp : {SplitPolicy::Geometric, SplitPolicy::Arithmetic}) {
    QuadResult r = adaptive_1d(kInv, Interval(0.5), Interval(2.0),
                               cfg_1d(1e-6, QuadRule::Simpson, sp));
    REQUIRE(r.status == QuadStatus::Ok);
    require_encloses(r.value, oracle);
  }
}

TEST_CASE("geometric probing points", "[quad]") {
  REQUIRE(detail::geometric_cut(1.0, 4.0) == 2.0);
  REQUIRE(detail::geometric_cut(0.0, 1.0) == 0.5);
  REQUIRE(detail::geometric_cut(-2.0, 6.0) == 2.0);
  testutil::Rng rng(0x5EED);
  for (int i = 0; i < 1000; ++i) {
    double a = rng.uniform(1e-6, 10.0);
    double b = a + rng.uniform(1e-6, 10.0);
    double m = detail::geometric_cut(a, b);
    REQUIRE(m >= a);
    REQUIRE(m <= b);
  }
}

TEST_CASE("straddling quotients force splits instead of failure", "[quad]") {
  // sinh(pi y) - sinh(2 y) is positive pointwise on [1/2, 1], but the
  // whole-interval denominator straddles zero because sup/inf = 2 exceeds
  // pi/2; the driver must subdivide, not give up.
  const auto f = [](const auto& y) {
    return 1.0 / (sinh(constants::pi() * y) - sinh(2.0 * y));
  };
  QuadResult r =
      adaptive_1d(f, Interval(0.5), Interval(1.0), cfg_1d(1e-6));
  REQUIRE(r.status == QuadStatus::Ok);
  REQUIRE(r.stats.max_depth >= 1);
  REQUIRE(r.value.lo > 0.0);
  REQUIRE(r.value.hi - r.value.lo <= 1e-5);
}

TEST_CASE("singular cancellation on monomials", "[quad]") {
  const auto x6 = [](const auto& x) { return sqr(x * sqr(x)); };
  const auto x6_twice = [](const auto& x) { return 2.0 * sqr(x * sqr(x)); };
  const auto x4 = [](const auto& x) { return sqr(sqr(x)); };
  Interval eps(1.0);
  Interval r = singular_cancel_1d(x6, x4, eps, 6, 4);
  require_encloses(r, ratio(1, 3));
  REQUIRE(r.hi - r.lo <= 1e-13);
  // Doubling the numerator doubles the (q!/p!)-scaled answer: 2/3 via the
  // 1/30 factor against D6/D4 = 1440/24.
  require_encloses(singular_cancel_1d(x6_twice, x4, eps, 6, 4), ratio(2, 3));
  // Equal orders reduce to eps times the derivative ratio.
  Interval same = singular_cancel_1d(x4, x4, eps, 4, 4);
  REQUIRE(same.contains(1.0));
}

TEST_CASE("singular cancellation rejects wrong claims", "[quad]") {
  const auto bad_num = [](const auto& x) {
    return x * sqr(x) + sqr(x * sqr(x));
  };
  const auto x4 = [](const auto& x) { return sqr(sqr(x)); };
  const auto wobbly_den = [](const auto& x) {
    return sqr(sqr(x)) - 60.0 * sqr(x * sqr(x));
  };
  const auto x6 = [](const auto& x) { return sqr(x * sqr(x)); };
  REQUIRE_THROWS_AS(singular_cancel_1d(bad_num, x4, Interval(1.0), 6, 4),
                    CancellationFailed);
  REQUIRE_THROWS_AS(singular_cancel_1d(x6, wobbly_den, Interval(1.0), 6, 4),
                    CancellationFailed);
}

TEST_CASE("depth cap keeps the enclosure sound", "[quad]") {
  const auto f = [](const auto& x) { return 1.0 / (x + 1e-9); };
  QuadResult r = adaptive_1d(f, Interval(0.0), Interval(1.0),
                             cfg_1d(1e-6, QuadRule::Simpson,
                                    SplitPolicy::Geometric, 6));
  REQUIRE(r.status == QuadStatus::DepthExceeded);
  Interval oracle = log((Interval(1.0) + Interval(1e-9)) / Interval(1e-9));
  require_encloses(r.value, oracle);
}

TEST_CASE("unresolvable zero crossing is reported", "[quad]") {
  QuadResult r = adaptive_1d(kInv, Interval(-1.0), Interval(2.0),
                             cfg_1d(1e-6, QuadRule::Simpson,
                                    SplitPolicy::Arithmetic, 8));
  REQUIRE(r.status == QuadStatus::DivByZero);
}

TEST_CASE("empty and degenerate domains", "[quad]") {
  QuadResult bad = adaptive_1d(kInv, Interval(2.0), Interval(1.0), cfg_1d(1e-6));
  REQUIRE(bad.status == QuadStatus::Empty);
  QuadResult point = adaptive_1d(kInv, Interval(1.0), Interval(1.0), cfg_1d(1e-6));
  REQUIRE(point.status == QuadStatus::Ok);
  REQUIRE(point.value == Interval(0.0));
}

TEST_CASE("call accounting matches the subdivision tree", "[quad]") {
  const auto f = [](const auto& x) { return sin(x); };
  AdaptiveConfig one_split = cfg_1d(1e-9);
  one_split.abs_tol = 0.008;
  one_split.rel_tol = 0.0;
  QuadResult r = adaptive_1d(f, Interval(0.0), Interval(2.0), one_split);
  REQUIRE(r.status == QuadStatus::Ok);
  REQUIRE(r.stats.calls == 3);
  REQUIRE(r.stats.max_depth == 1);

  const auto f2 = [](const auto& x, const auto& y) { return sin(x) * sin(y); };
  AdaptiveConfig one_split_2d = cfg_1d(1e-9);
  one_split_2d.abs_tol = 0.02;
  one_split_2d.rel_tol = 0.0;
  QuadResult r2 = adaptive_2d(f2, Interval(0.0, 2.0), Interval(0.0, 2.0),
                              one_split_2d);
  REQUIRE(r2.status == QuadStatus::Ok);
  REQUIRE(r2.stats.calls == 5);

  for (double tol : {1e-3, 1e-4, 1e-5, 1e-6}) {
    QuadResult s = adaptive_1d([](const auto& x) { return exp(-x); },
                               Interval(0.125), Interval(16.125), cfg_1d(tol));
    REQUIRE(s.status == QuadStatus::Ok);
    REQUIRE(s.stats.calls % 2 == 1);
    QuadResult s2 = adaptive_2d(f2, Interval(0.0, 2.0), Interval(0.0, 2.0),
                                cfg_1d(tol));
    REQUIRE(s2.status == QuadStatus::Ok);
    REQUIRE(s2.stats.calls % 4 == 1);
  }
}

TEST_CASE("sup bounds on known maxima", "[quad]") {
  Interval flat = bound_sup([](const Interval&) { return Interval(2.0); },
                            Interval(0.0, 1.0), 1e-9);
  REQUIRE(flat.contains(2.0));
  REQUIRE(flat.hi - flat.lo <= 1e-9);
  Interval s = bound_sup([](const Interval& x) { return sin(x); },
                         Interval(0.0, constants::pi().lo), 1e-3);
  REQUIRE(s.contains(1.0));
  REQUIRE(s.hi - s.lo <= 1e-3);
  Interval neg = bound_sup([](const Interval& x) { return -2.0 - x; },
                           Interval(0.0, 1.0), 1e-6);
  REQUIRE(neg.contains(3.0));
}

TEST_CASE("sup bound dominates dense sampling", "[quad]") {
  const auto f = [](const Interval& x) {
    return sin(3.0 * x) * exp(-scale_pow2(sqr(x), -1));
  };
  Interval dom(-2.0, 2.0);
  Interval b = bound_sup(f, dom, 1e-4);
  double grid_max = 0.0;
  for (int i = 0; i <= 10000; ++i) {
    double x = dom.lo + (dom.hi - dom.lo) * i / 10000.0;
    Interval v = abs(f(Interval(x)));
    grid_max = std::max(grid_max, v.lo);
  }
  REQUIRE(b.hi >= grid_max);
  REQUIRE(grid_max >= b.lo - 1e-6);
}

TEST_CASE("sup bound reports unreachable tolerance", "[quad]") {
  REQUIRE_THROWS_AS(bound_sup([](const Interval& x) { return sin(x); },
                              Interval(0.0, 3.0), 1e-30, 2000),
                    DepthExceeded);
}
