#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "turncert/models.hpp"
#include "turncert/quadrature.hpp"
#include "turncert/tails.hpp"

namespace turncert {

// Sign classification of a velocity-derivative enclosure: Turn when provably
// negative, NoTurn when provably positive, Unknown when zero is inside or on
// the boundary of the enclosure.
enum class Verdict { Turn, NoTurn, Unknown };

inline Verdict classify(const Interval& e) {
  if (e.hi < 0.0) return Verdict::Turn;
  if (e.lo > 0.0) return Verdict::NoTurn;
  return Verdict::Unknown;
}

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Turn:
      return "turning";
    case Verdict::NoTurn:
      return "not-turning";
    default:
      return "unknown";
  }
}

// Result of one rigorous evaluation.  `breakdown` lists the named summands in
// accumulation order; adding them up reproduces `enclosure` exactly.  A
// nonempty `reason` means some stage could not produce an enclosure at all:
// the verdict is Unknown, `enclosure` stays at the [0, 0] placeholder and the
// only recourse is splitting the parameter box.
struct CellOutcome {
  Verdict verdict = Verdict::Unknown;
  Interval enclosure{0.0};
  std::vector<std::pair<std::string, Interval>> breakdown;
  std::string reason;

  bool failed() const { return !reason.empty(); }
};

// Knobs for the fixed-family drivers.  Defaults match the reference runs:
// singular radius 1/128, 8192 Simpson cells per smooth piece, 1e-5
// tolerances for the adaptive double integrals.
struct VerifyOptions {
  double eps = 0.0078125;
  int mesh_cells = 8192;
  double abs_tol = 1e-5;
  double rel_tol = 1e-5;
  int depth_1d = 12;
  int depth_2d = 12;
  int gamma_cells = 128;
  // Geometric y mesh of the nested spectral evaluation.  The y smear of the
  // enclosure falls off like 1/y_cells; the cost is linear.
  int y_cells = 1536;
  SplitPolicy split = SplitPolicy::Arithmetic;
};

// Parameter box for the bifurcation engine plus its integration policy: the
// spectral axis is cut into [0, left] (series cancellation), [left, right]
// (adaptive quadrature) and [right, inf) (analytic tail).
struct ParameterSet {
  Interval left{0.125};
  Interval right{16.125};
  double abs_tol = 1e-5;
  double rel_tol = 1e-5;
  Interval h2{0.25, 1.25};
  Interval kappa{-1.0, 1.0};
};

inline void require_valid(const ParameterSet& ps) {
  if (!(ps.left.lo > 0.0) || !(ps.left.hi < ps.right.lo))
    throw std::invalid_argument("parameter set: need 0 < left < right");
  if (!(ps.abs_tol > 0.0) || !(ps.rel_tol > 0.0))
    throw std::invalid_argument("parameter set: tolerances must be positive");
  if (!Interval(0.25, 1.25).contains(ps.h2))
    throw std::invalid_argument("parameter set: h2 must lie inside [1/4, 5/4]");
  if (!Interval(-1.0, 1.0).contains(ps.kappa))
    throw std::invalid_argument("parameter set: kappa must lie inside [-1, 1]");
}

namespace verify_detail {
struct SpectralProfile;
}

// Memo for the kappa-independent work of one parameter box: the enclosure of
// the self-interaction integral and the spectral profile, keyed by the exact
// bit patterns of the h2 endpoints together with every option that feeds the
// cached values, so differently configured calls never share entries.
// Lookups and inserts are serialized; a duplicate insert loses against the
// first writer, which is harmless because both computed the same values.
class I1Cache {
 public:
  struct Entry {
    Interval i1;
    std::shared_ptr<const verify_detail::SpectralProfile> profile;
  };
  using Key = std::array<std::uint64_t, 10>;

  std::optional<Entry> find(const Key& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void store(const Key& key, Entry e) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(key, std::move(e));
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
  }

 private:
  mutable std::mutex mu_;
  std::map<Key, Entry> map_;
};

namespace verify_detail {

// Sum of Simpson cells over an equispaced mesh.  Consecutive cells share the
// same computed double endpoint, so the pieces tile [lo, hi] exactly.
template <typename F>
Interval mesh_simpson(F&& f, double lo, double hi, int cells) {
  Interval acc(0.0);
  double prev = lo;
  for (int i = 1; i <= cells; ++i) {
    double next = i == cells ? hi : lo + (hi - lo) * (double(i) / cells);
    if (next <= prev) continue;
    acc += simpson_1d(f, Interval(prev), Interval(next));
    prev = next;
  }
  return acc;
}

// Integral across a breakpoint bracket [b.lo, b.hi]: one whole-interval
// evaluation times the exact bracket width.
template <typename F>
Interval junction(F&& f, const Interval& b) {
  if (!(b.lo < b.hi)) return Interval(0.0);
  return f(b) * (Interval(b.hi) - Interval(b.lo));
}

// Integral over [b.lo, s] when the true endpoint s is only known to lie
// inside the bracket b: the range times [0, bracket width] covers every
// admissible s.
template <typename F>
Interval endpoint(F&& f, const Interval& b) {
  if (!(b.lo < b.hi)) return Interval(0.0);
  return f(b) * Interval(0.0, b.hi - b.lo);
}

// Edge strip of a double integral at an outer-variable bracket.  The inner
// range is meshed because one whole-range curve evaluation can push a kernel
// denominator through zero; per cell the ranges stay coherent.
template <typename F2>
Interval edge_strip(F2&& f2, const Interval& bracket, double glo, double ghi,
                    int cells) {
  Interval w(0.0, bracket.hi - bracket.lo);
  Interval acc(0.0);
  double prev = glo;
  for (int i = 1; i <= cells; ++i) {
    double next = i == cells ? ghi : glo + (ghi - glo) * (double(i) / cells);
    if (next <= prev) continue;
    acc += f2(bracket, Interval(prev, next)) * w *
           (Interval(next) - Interval(prev));
    prev = next;
  }
  return acc;
}

// A parameter box of nonzero width puts a floor under the attainable
// enclosure width; once that floor dominates, splitting the integration
// variable buys nothing.  Acceptance thresholds therefore grow with the box:
// the self-interaction integral sees only h2, the spectral integrals see
// both widths.  The depth cap bounds the work on cells that can never meet
// the threshold; capped cells keep their sound rule value.
inline AdaptiveConfig i1_cfg(const ParameterSet& ps, double h2_width,
                             int depth) {
  AdaptiveConfig cfg;
  cfg.abs_tol = std::max(ps.abs_tol, 0.0078125 * h2_width);
  cfg.rel_tol = std::max(ps.rel_tol, 0.125 * h2_width);
  cfg.max_depth = depth;
  cfg.split = SplitPolicy::Geometric;
  cfg.rule = QuadRule::GaussLegendre2;
  return cfg;
}

inline const Interval& unit_l1_cached() {
  static const Interval v = bifurcation_unit_weight_l1();
  return v;
}

// Kappa-independent part of the bifurcation functional: the confined
// self-interaction integral along the curve parameter.  Singular Taylor
// cancellation on [0, eps], then geometric Gauss-Legendre refinement up to
// the support edge of the curve.
inline Interval bifurcation_i1_slab(const Interval& h2, const ParameterSet& ps,
                                    const VerifyOptions& opts) {
  ModelConstants mc{Interval(1.0), h2, Interval(0.0)};
  CurveFamily cv = make_curve(CurveId::Bifurcation, h2);
  const Interval pi = constants::pi();
  Interval sing = singular_cancel_1d(
      [&](const auto& t) { return sign_singular_num(mc, cv, 2.0, t); },
      [&](const auto& t) { return sign_singular_den(cv, t); },
      Interval(opts.eps), 6, 4);
  Interval reg = mesh_simpson(
      [&](const auto& t) { return sign_regular_term(mc, cv, 2.0, t); }, 0.0,
      opts.eps, 32);
  auto f = [&](const auto& t) { return sign_integrand(mc, cv, 2.0, t); };
  QuadResult q = adaptive_1d(f, Interval(opts.eps), Interval(pi.lo),
                             i1_cfg(ps, width(h2), opts.depth_1d));
  if (q.status == QuadStatus::DivByZero)
    throw DivByZero("self-interaction integral lost a cell to division");
  return sing + reg + q.value + endpoint(f, pi);
}

// The integrand is steep around the self-approach of the curve and its h2
// sensitivity flips sign along the way, so one whole-box evaluation smears
// by far more than the true h2 range.  Slicing h2 and hulling the slab
// enclosures recovers the range at smear proportional to the slice width.
inline Interval bifurcation_i1(const ParameterSet& ps,
                               const VerifyOptions& opts) {
  double w = width(ps.h2);
  int slices = w > 1e-3 ? std::min(16, int(w / 6.25e-4) + 1) : 1;
  std::optional<Interval> acc;
  double prev = ps.h2.lo;
  for (int i = 1; i <= slices; ++i) {
    double next =
        i == slices ? ps.h2.hi : ps.h2.lo + w * (double(i) / slices);
    if (next < prev) next = prev;
    Interval part = bifurcation_i1_slab(Interval(prev, next), ps, opts);
    acc = acc ? hull(*acc, part) : part;
    prev = next;
  }
  return *acc;
}

// One y cell of the spectral profile: the gamma-integrated kappa-free curve
// factor, already times the cell's y width, next to the sinh brackets that
// rebuild the kappa-dependent weight on the cell.
struct SpectralCell {
  Interval c;
  Interval a;
  Interval b;
};

// Kappa-free precomputation of the spectral integrals for one h2 box.  The
// weight psi = kappa/den (value) resp. sinh(pi y)/den^2 (kappa derivative)
// is a scalar in y alone, so every gamma integral can run once and be reused
// for any kappa box at the same h2; a diagram column then costs one profile
// regardless of how often its kappa axis is split.  The slope members cover
// [0, slope_len] in the mean-value form core/y times y*psi, `near` finishes
// the singular region up to `left` on a short mesh, `wide` covers
// [left, right].
struct SpectralProfile {
  Interval slope_acc;
  Interval slope_ba;
  Interval slope_bb;
  double slope_len = 0.0;
  std::vector<SpectralCell> near;
  std::vector<SpectralCell> wide;
};

// Weight bracket for one cell.  Pointwise in y the weight is monotone in
// kappa: numerator and denominator are both linear, the denominator has
// positive slope, and both endpoint divisions succeeding proves the
// denominator sign-definite for every kappa in between.  The hull of the two
// endpoint evaluations therefore covers the whole kappa box while keeping
// the numerator/denominator kappa correlation that a one-shot interval
// evaluation would discard.
inline Interval psi_factor(const Interval& a, const Interval& b,
                           const Interval& kappa, ConfTarget target,
                           const char* stage) {
  auto bracket = [&](double k) {
    Interval den = a + Interval(k) * b;
    if (contains_zero(den)) throw DivByZero(stage);
    if (target == ConfTarget::I2) return Interval(k) / den;
    return a / sqr(den);
  };
  return hull(bracket(kappa.lo), bracket(kappa.hi));
}

inline SpectralProfile build_spectral_profile(const ModelConstants& mc,
                                              const CurveFamily& cv,
                                              double left, double right,
                                              int gamma_cells, int y_cells) {
  const Interval pi = constants::pi();
  const Interval pref = 4.0 * mc.rho_bar * curve_dz2_zero(cv);
  const Interval two_h2 = scale_pow2(mc.h2, 1);
  SpectralProfile p;

  // Slope region: the curve factor vanishes at y = 0, so core/y lies in the
  // order-1 jet coefficient range over the window, and the 1/y of the weight
  // folds into mean-value ranges of sinh(c y)/y.  The gamma sum accumulates
  // before any kappa weight multiplies it, keeping the signed cancellation
  // along the curve instead of a |slope| pile-up.  The window is kept to a
  // quarter of the singular region because the jet smear grows with it.
  p.slope_len = 0.25 * left;
  const Interval yw0(0.0, p.slope_len);
  p.slope_ba = pi * cosh(pi * yw0);
  p.slope_bb = two_h2 * cosh(two_h2 * yw0);
  auto cell_slope = [&](const Interval& g) {
    Jet y = Jet::variable(yw0, 1);
    Jet cj = conf_spectral_core(mc, cv, y, g);
    return pref * cj.c[1] * (Interval(g.hi) - Interval(g.lo));
  };
  Interval acc(0.0);
  double prev = 0.0;
  for (int i = 1; i <= gamma_cells; ++i) {
    double next = i == gamma_cells ? pi.lo : pi.lo * (double(i) / gamma_cells);
    if (next <= prev) continue;
    acc += cell_slope(Interval(prev, next));
    prev = next;
  }
  p.slope_acc = acc + cell_slope(pi);

  // Geometric y mesh: the scale of the integrand falls exponentially while
  // the weight varies on the scale of y itself.  The gamma mesh per y cell
  // is fixed and phase-scaled: point nodes keep the y smear of the cell as
  // the only node width, and the quartic remainder, which does see the phase
  // z1 * y, shrinks with the fourth power of the node count.  The support
  // edge bracket of the curve joins as one extra gamma cell.
  auto push_cells = [&](std::vector<SpectralCell>& dst, double lo, double hi,
                        int cells) {
    double from = lo;
    for (int i = 1; i <= cells; ++i) {
      double to = i == cells ? hi : lo * std::pow(hi / lo, double(i) / cells);
      if (to <= from) continue;
      Interval yw(from, to);
      auto fg = [&](const auto& g) {
        return pref * conf_spectral_core(mc, cv, yw, g);
      };
      int n = 64 + int(3.0 * (pi.hi + 1.0) * to);
      if (n > 768) n = 768;
      Interval c = mesh_simpson(fg, 0.0, pi.lo, n) +
                   fg(pi) * (Interval(pi.hi) - Interval(pi.lo));
      dst.push_back({c * (Interval(to) - Interval(from)), sinh(pi * yw),
                     sinh(two_h2 * yw)});
      from = to;
    }
  };
  push_cells(p.near, p.slope_len, left, 48);
  push_cells(p.wide, left, right, y_cells);
  return p;
}

// Singular region [0, left] for one kappa box: slope enclosure times y*psi
// over [0, slope_len], then the short mesh up to left.
inline Interval profile_singular(const SpectralProfile& p,
                                 const Interval& kappa, ConfTarget target) {
  Interval out =
      p.slope_acc *
      psi_factor(p.slope_ba, p.slope_bb, kappa, target,
                 "spectral denominator slope encloses zero near y = 0") *
      Interval(p.slope_len);
  for (const SpectralCell& cell : p.near)
    out += psi_factor(cell.a, cell.b, kappa, target,
                      "spectral denominator encloses zero on a y cell") *
           cell.c;
  return out;
}

// Bounded region [left, right] for one kappa box.
inline Interval profile_bounded(const SpectralProfile& p,
                                const Interval& kappa, ConfTarget target) {
  Interval out(0.0);
  for (const SpectralCell& cell : p.wide)
    out += psi_factor(cell.a, cell.b, kappa, target,
                      "spectral denominator encloses zero on a y cell") *
           cell.c;
  return out;
}

// Everything about an entry that the cached values depend on: the h2 box,
// the self-interaction tolerances and depth, and the spectral mesh geometry.
inline I1Cache::Key memo_key(const ParameterSet& ps,
                             const VerifyOptions& opts) {
  auto bits = [](double v) { return std::bit_cast<std::uint64_t>(v); };
  return {bits(ps.h2.lo),
          bits(ps.h2.hi),
          bits(ps.abs_tol),
          bits(ps.rel_tol),
          bits(ps.left.lo),
          bits(ps.right.lo),
          bits(opts.eps),
          std::uint64_t(opts.depth_1d),
          std::uint64_t(opts.gamma_cells),
          std::uint64_t(opts.y_cells)};
}

}  // namespace verify_detail

// Certificates for the first explicit interface family.  Returns the
// outcome pair (flat-at-infinity model, confined strip model): the first
// integral is provably positive, the second provably negative, which settles
// the turning question for the two orientations of the density jump.
inline std::pair<CellOutcome, CellOutcome> verify_thm1(
    const VerifyOptions& opts = {}) {
  ModelConstants mc;
  CurveFamily cv = make_curve(CurveId::Thm1);
  const Interval b1 = constants::pi_over_3();
  const Interval b2 = constants::half_pi();
  const Interval b3 = constants::two_pi_over_3();

  auto assemble = [&](auto&& f, Interval sing) {
    CellOutcome out;
    Interval mesh = verify_detail::mesh_simpson(f, opts.eps, b1.lo,
                                                opts.mesh_cells);
    mesh += verify_detail::junction(f, b1);
    mesh += verify_detail::mesh_simpson(f, b1.hi, b2.lo, opts.mesh_cells);
    mesh += verify_detail::junction(f, b2);
    mesh += verify_detail::mesh_simpson(f, b2.hi, b3.lo, opts.mesh_cells);
    mesh += verify_detail::junction(f, b3);
    out.breakdown.emplace_back("singular", sing);
    out.breakdown.emplace_back("smooth", mesh);
    out.enclosure = sing + mesh;
    out.verdict = classify(out.enclosure);
    return out;
  };

  CellOutcome pos;
  try {
    Interval pos_sing = singular_cancel_1d(
        [&](const auto& t) { return flat_singular_num(mc, cv, 4.0, t); },
        [&](const auto& t) { return flat_singular_den(cv, t); },
        Interval(opts.eps), 6, 4);
    pos = assemble(
        [&](const auto& t) { return flat_integrand(mc, cv, 4.0, t); },
        pos_sing);
  } catch (const EnclosureError& e) {
    pos = CellOutcome{};
    pos.reason = e.what();
  }

  CellOutcome neg;
  try {
    Interval neg_sing = singular_cancel_1d(
        [&](const auto& t) { return sign_singular_num(mc, cv, 1.0, t); },
        [&](const auto& t) { return sign_singular_den(cv, t); },
        Interval(opts.eps), 6, 4);
    neg_sing += verify_detail::mesh_simpson(
        [&](const auto& t) { return sign_regular_term(mc, cv, 1.0, t); }, 0.0,
        opts.eps, 32);
    neg = assemble(
        [&](const auto& t) { return sign_integrand(mc, cv, 1.0, t); },
        neg_sing);
  } catch (const EnclosureError& e) {
    neg = CellOutcome{};
    neg.reason = e.what();
  }

  return {pos, neg};
}

// Reference-table driver for the confined periodic setting with a
// permeability jump at depth pi/2 and contrast 1: self-interaction part plus
// the exchange double integral.  Accepts the three periodic families.
inline CellOutcome verify_thm2(CurveId id, const VerifyOptions& opts = {}) {
  if (id != CurveId::Thm2a && id != CurveId::Thm2b && id != CurveId::Thm2c)
    throw std::invalid_argument("verify_thm2: not a periodic family");
  ModelConstants mc{Interval(0.5), constants::half_pi(), Interval(1.0)};
  CurveFamily cv = make_curve(id);
  const Interval pi = constants::pi();
  CellOutcome out;
  try {
    Interval b1 = singular_cancel_1d(
        [&](const auto& t) { return strip_singular_num(mc, cv, t); },
        [&](const auto& t) { return strip_singular_den(cv, t); },
        Interval(opts.eps), 6, 4);
    auto f1 = [&](const auto& t) { return strip_integrand(mc, cv, t); };
    b1 += verify_detail::mesh_simpson(f1, opts.eps, pi.lo, opts.mesh_cells);
    b1 += verify_detail::endpoint(f1, pi);

    auto f2 = [&](const auto& tb, const auto& tg) {
      return strip_exchange_integrand(mc, cv, tb, tg);
    };
    AdaptiveConfig cfg{opts.abs_tol, opts.rel_tol, opts.depth_2d, opts.split,
                       QuadRule::Simpson};
    QuadResult q =
        adaptive_2d(f2, Interval(0.0, pi.lo), Interval(-pi.lo, pi.lo), cfg);
    if (q.status == QuadStatus::DivByZero) {
      out.reason = "exchange double integral lost a cell to division";
      return out;
    }
    Interval b2 = q.value;
    Interval bracket_w(0.0, pi.hi - pi.lo);
    b2 += verify_detail::edge_strip(f2, pi, -pi.lo, pi.lo, 64);
    b2 += f2(pi, pi) * bracket_w * bracket_w;
    b2 += f2(pi, -pi) * bracket_w * bracket_w;
    b2 += f2(Interval(0.0, pi.hi), pi) * bracket_w * pi;
    b2 += f2(Interval(0.0, pi.hi), -pi) * bracket_w * pi;

    out.breakdown.emplace_back("I_B1", b1);
    out.breakdown.emplace_back("I_B2", b2);
    out.enclosure = b1 + b2;
    out.verdict = classify(out.enclosure);
  } catch (const EnclosureError& e) {
    out = CellOutcome{};
    out.reason = e.what();
  }
  return out;
}

// Reference-table driver for the flat-at-infinity setting with a
// permeability jump: principal-value part, exchange double integral over
// [0, 14 pi], and the analytic remainder beyond.  Accepts the three
// compactly supported families.
inline CellOutcome verify_thm3(CurveId id, const VerifyOptions& opts = {}) {
  if (id != CurveId::Thm3a && id != CurveId::Thm3b && id != CurveId::Thm3c)
    throw std::invalid_argument("verify_thm3: not a compact family");
  ModelConstants mc{Interval(0.5), constants::half_pi(), Interval(1.0)};
  CurveFamily cv = make_curve(id);
  const Interval pi = constants::pi();
  const double M = 14.0 * pi.hi;
  CellOutcome out;
  try {
    Interval c1 = singular_cancel_1d(
        [&](const auto& t) { return flat_singular_num(mc, cv, 8.0, t); },
        [&](const auto& t) { return flat_singular_den(cv, t); },
        Interval(opts.eps), 6, 4);
    auto f1 = [&](const auto& t) { return flat_integrand(mc, cv, 8.0, t); };
    c1 += verify_detail::mesh_simpson(f1, opts.eps, pi.lo, opts.mesh_cells);
    c1 += verify_detail::endpoint(f1, pi);

    auto f2 = [&](const auto& tb, const auto& tg) {
      return flat_exchange_integrand(mc, cv, tb, tg);
    };
    AdaptiveConfig cfg{opts.abs_tol, opts.rel_tol, opts.depth_2d, opts.split,
                       QuadRule::Simpson};
    QuadResult q =
        adaptive_2d(f2, Interval(0.0, M), Interval(-pi.lo, pi.lo), cfg);
    if (q.status == QuadStatus::DivByZero) {
      out.reason = "exchange double integral lost a cell to division";
      return out;
    }
    Interval c2 = q.value;
    Interval bracket_w(0.0, pi.hi - pi.lo);
    c2 += f2(Interval(0.0, M), pi) * bracket_w * Interval(M);
    c2 += f2(Interval(0.0, M), -pi) * bracket_w * Interval(M);

    Interval t = tail_flat_exchange(M, mc, cv);
    Interval tail(-t.hi, t.hi);
    out.breakdown.emplace_back("I_C1", c1);
    out.breakdown.emplace_back("I_C2_bounded", c2);
    out.breakdown.emplace_back("I_C2_tail", tail);
    out.enclosure = c1 + c2 + tail;
    out.verdict = classify(out.enclosure);
  } catch (const EnclosureError& e) {
    out = CellOutcome{};
    out.reason = e.what();
  }
  return out;
}

// Decides a single parameter box of the bifurcation diagram.  The functional
// splits into the kappa-independent self-interaction part (memoizable per
// h2) and the spectral part, itself cut into the singular, bounded and tail
// regions dictated by the parameter set.  Every enclosure failure downgrades
// the verdict to Unknown with the cause recorded; nothing throws for an
// in-contract box.
inline CellOutcome decide_cell(const ParameterSet& ps, I1Cache* memo = nullptr,
                               const VerifyOptions& opts = {}) {
  require_valid(ps);
  CellOutcome out;
  ModelConstants mc{Interval(1.0), ps.h2, ps.kappa};
  CurveFamily cv = make_curve(CurveId::Bifurcation, ps.h2);
  const double left = ps.left.lo;
  const double right = ps.right.lo;
  try {
      const I1Cache::Key key = verify_detail::memo_key(ps, opts);
      std::optional<I1Cache::Entry> hit;
      if (memo) hit = memo->find(key);
      I1Cache::Entry ent;
      if (hit) {
        ent = std::move(*hit);
      } else {
        ent.i1 = verify_detail::bifurcation_i1(ps, opts);
        ent.profile = std::make_shared<const verify_detail::SpectralProfile>(
            verify_detail::build_spectral_profile(mc, cv, left, right,
                                                  opts.gamma_cells,
                                                  opts.y_cells));
        if (memo) memo->store(key, ent);
      }

      Interval i2s =
          verify_detail::profile_singular(*ent.profile, ps.kappa, ConfTarget::I2);
      Interval i2b =
          verify_detail::profile_bounded(*ent.profile, ps.kappa, ConfTarget::I2);
      Interval t = tail_conf_spectral(right, mc, cv, ConfTarget::I2,
                                      verify_detail::unit_l1_cached());
      Interval tail(-t.hi, t.hi);

      out.breakdown.emplace_back("I1", ent.i1);
      out.breakdown.emplace_back("I2_singular", i2s);
      out.breakdown.emplace_back("I2_bounded", i2b);
      out.breakdown.emplace_back("I2_tail", tail);
      out.enclosure = ent.i1 + i2s + i2b + tail;
      out.verdict = classify(out.enclosure);
  } catch (const EnclosureError& e) {
    out = CellOutcome{};
    out.reason = e.what();
  }
  return out;
}

// Encloses the kappa derivative of the bifurcation functional on a parameter
// box; a Turn verdict here means the derivative is provably negative, which
// is what the implicit-function argument along the diagram boundary needs.
inline CellOutcome verify_DI2(const ParameterSet& ps,
                              const VerifyOptions& opts = {}) {
  require_valid(ps);
  CellOutcome out;
  ModelConstants mc{Interval(1.0), ps.h2, ps.kappa};
  CurveFamily cv = make_curve(CurveId::Bifurcation, ps.h2);
  try {
      verify_detail::SpectralProfile prof = verify_detail::build_spectral_profile(
          mc, cv, ps.left.lo, ps.right.lo, opts.gamma_cells, opts.y_cells);
      Interval s =
          verify_detail::profile_singular(prof, ps.kappa, ConfTarget::DI2);
      Interval b =
          verify_detail::profile_bounded(prof, ps.kappa, ConfTarget::DI2);
      Interval t = tail_conf_spectral(ps.right.lo, mc, cv, ConfTarget::DI2,
                                      verify_detail::unit_l1_cached());
      Interval tail(-t.hi, t.hi);

      out.breakdown.emplace_back("singular", s);
      out.breakdown.emplace_back("bounded", b);
      out.breakdown.emplace_back("tail", tail);
      out.enclosure = s + b + tail;
      out.verdict = classify(out.enclosure);
  } catch (const EnclosureError& e) {
    out = CellOutcome{};
    out.reason = e.what();
  }
  return out;
}

}  // namespace turncert
