#pragma once

#include <algorithm>
#include <cmath>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "turncert/verify.hpp"

namespace turncert {

// Policy for one diagram run.  `min_width` is the refinement cutoff: an
// Unknown rectangle is split only while BOTH its widths exceed it.  `shards`
// fixes the initial split of the kappa range into queue seeds; it is a tiling
// parameter, deliberately independent of the thread count, so the produced
// cell set never depends on how many workers consumed the queue.
struct DiagramConfig {
  double min_width = 5.0e-3;
  double abs_tol = 1.0e-5;
  double rel_tol = 1.0e-5;
  Interval left{0.125};
  Interval right{16.125};
  int shards = 8;
  VerifyOptions options{};
};

struct DiagramCell {
  ParameterSet ps;
  CellOutcome outcome;
  std::size_t generation = 0;
};

// Final tiling of the requested region plus bookkeeping.  `cells` holds the
// leaves only; rectangles that were split live on through their children.
// `totals[g]` counts every rectangle decided at generation g, split or not.
// Area fields are fractions of the region area and sum to 1.
struct DiagramReport {
  Interval h2{0.25, 1.25};
  Interval kappa{-1.0, 1.0};
  std::vector<DiagramCell> cells;
  double area_turn = 0.0;
  double area_noturn = 0.0;
  double area_unknown = 0.0;
  std::vector<std::size_t> totals;
};

// Called under the result lock each time a cell becomes final, so a sink can
// stream to files without its own synchronization.  Must not throw; report
// write failures out of band.
using CellSink = std::function<void(const DiagramCell&)>;

namespace bifurc_detail {

// Shared subdivision points guarantee the children tile the parent exactly:
// adjacent cells reuse the identical double endpoint, so there is no gap or
// overlap to within the last bit.
inline std::vector<double> subdivide(const Interval& x, int parts) {
  std::vector<double> pts(static_cast<std::size_t>(parts) + 1);
  pts.front() = x.lo;
  pts.back() = x.hi;
  const double w = x.hi - x.lo;
  for (int i = 1; i < parts; ++i)
    pts[static_cast<std::size_t>(i)] =
        x.lo + w * (static_cast<double>(i) / parts);
  return pts;
}

// 4 cuts in h2 against 2 in kappa.  The lopsided ratio keeps the two summand
// widths of the enclosure in balance: the slope part reacts to h2 an order of
// magnitude harder than the spectral part reacts to kappa.
inline std::vector<ParameterSet> split_cell(const ParameterSet& ps) {
  const auto hs = subdivide(ps.h2, 4);
  const auto ks = subdivide(ps.kappa, 2);
  std::vector<ParameterSet> out;
  out.reserve(8);
  for (std::size_t i = 0; i + 1 < hs.size(); ++i)
    for (std::size_t j = 0; j + 1 < ks.size(); ++j) {
      ParameterSet child = ps;
      child.h2 = Interval(hs[i], hs[i + 1]);
      child.kappa = Interval(ks[j], ks[j + 1]);
      out.push_back(child);
    }
  return out;
}

struct WorkItem {
  ParameterSet ps;
  std::size_t generation = 0;
};

struct SharedState {
  std::mutex mu;
  std::condition_variable cv;
  std::deque<WorkItem> queue;
  std::size_t inflight = 0;
  std::vector<DiagramCell> cells;
  std::vector<std::size_t> totals;
  I1Cache cache;
};

}  // namespace bifurc_detail

// Breadth-first refinement of region = h2 x kappa.  The queue starts with
// `shards` kappa strips; every popped rectangle gets decide_cell, splittable
// Unknowns push their 8 children to the back, everything else becomes a leaf
// and is handed to `sink`.  Workers share the queue and the I1 memo; cell
// results are pointwise deterministic, so the leaf set is identical for any
// worker count.
inline DiagramReport run_diagram(const Interval& h2, const Interval& kappa,
                                 const DiagramConfig& cfg = {},
                                 unsigned workers = 8, CellSink sink = {}) {
  if (!(h2.lo >= 0.25) || !(h2.hi <= 1.25) || !(h2.lo < h2.hi))
    throw std::invalid_argument("diagram region: h2 must be inside [0.25, 1.25]");
  if (!(kappa.lo >= -1.0) || !(kappa.hi <= 1.0) || !(kappa.lo < kappa.hi))
    throw std::invalid_argument("diagram region: kappa must be inside [-1, 1]");
  if (workers < 1) throw std::invalid_argument("diagram: workers must be >= 1");
  if (cfg.shards < 1) throw std::invalid_argument("diagram: shards must be >= 1");
  if (!(cfg.min_width > 0.0))
    throw std::invalid_argument("diagram: min_width must be positive");

  ParameterSet proto;
  proto.left = cfg.left;
  proto.right = cfg.right;
  proto.abs_tol = cfg.abs_tol;
  proto.rel_tol = cfg.rel_tol;
  proto.h2 = h2;
  proto.kappa = kappa;
  require_valid(proto);

  bifurc_detail::SharedState st;
  const auto strip = bifurc_detail::subdivide(kappa, cfg.shards);
  for (std::size_t j = 0; j + 1 < strip.size(); ++j) {
    bifurc_detail::WorkItem item;
    item.ps = proto;
    item.ps.kappa = Interval(strip[j], strip[j + 1]);
    st.queue.push_back(item);
  }

  auto worker = [&]() {
    std::unique_lock<std::mutex> lock(st.mu);
    for (;;) {
      st.cv.wait(lock,
                 [&] { return !st.queue.empty() || st.inflight == 0; });
      if (st.queue.empty()) return;
      bifurc_detail::WorkItem item = st.queue.front();
      st.queue.pop_front();
      ++st.inflight;
      lock.unlock();

      CellOutcome out;
      bool escaped = false;
      try {
        out = decide_cell(item.ps, &st.cache, cfg.options);
      } catch (const std::exception& e) {
        out = CellOutcome{};
        out.reason = e.what();
        escaped = true;
      }
      const bool splittable =
          !escaped && out.verdict == Verdict::Unknown &&
          width(item.ps.h2) > cfg.min_width &&
          width(item.ps.kappa) > cfg.min_width;

      lock.lock();
      if (st.totals.size() <= item.generation)
        st.totals.resize(item.generation + 1, 0);
      ++st.totals[item.generation];
      if (splittable) {
        for (const ParameterSet& child : bifurc_detail::split_cell(item.ps))
          st.queue.push_back({child, item.generation + 1});
      } else {
        DiagramCell cell{item.ps, std::move(out), item.generation};
        if (sink) sink(cell);
        st.cells.push_back(std::move(cell));
      }
      --st.inflight;
      st.cv.notify_all();
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  DiagramReport report;
  report.h2 = h2;
  report.kappa = kappa;
  report.cells = std::move(st.cells);
  report.totals = std::move(st.totals);
  const long double region_area =
      static_cast<long double>(width(h2)) * static_cast<long double>(width(kappa));
  long double turn = 0.0L, noturn = 0.0L, unknown = 0.0L;
  for (const DiagramCell& c : report.cells) {
    const long double a = static_cast<long double>(width(c.ps.h2)) *
                          static_cast<long double>(width(c.ps.kappa));
    switch (c.outcome.verdict) {
      case Verdict::Turn:
        turn += a;
        break;
      case Verdict::NoTurn:
        noturn += a;
        break;
      default:
        unknown += a;
        break;
    }
  }
  report.area_turn = static_cast<double>(turn / region_area);
  report.area_noturn = static_cast<double>(noturn / region_area);
  report.area_unknown = static_cast<double>(unknown / region_area);
  return report;
}

// Structural checks an engine run must always satisfy: leaves inside the
// region and valid, verdicts consistent with their enclosures, leaf areas
// tiling the region with no pairwise overlap, area fractions summing to 1,
// and the processed/leaf counts obeying the 8-way split identity.  Returns
// false and appends one line per violation when `diagnostics` is given.
inline bool audit_report(const DiagramReport& r,
                         std::vector<std::string>* diagnostics = nullptr) {
  bool ok = true;
  auto fail = [&](const std::string& msg) {
    ok = false;
    if (diagnostics) diagnostics->push_back(msg);
  };

  if (r.cells.empty()) fail("no cells in report");
  for (std::size_t i = 0; i < r.cells.size(); ++i) {
    const DiagramCell& c = r.cells[i];
    const std::string tag = "cell " + std::to_string(i) + ": ";
    try {
      require_valid(c.ps);
    } catch (const std::exception& e) {
      fail(tag + e.what());
      continue;
    }
    if (c.ps.h2.lo < r.h2.lo || c.ps.h2.hi > r.h2.hi ||
        c.ps.kappa.lo < r.kappa.lo || c.ps.kappa.hi > r.kappa.hi)
      fail(tag + "outside the region");
    switch (c.outcome.verdict) {
      case Verdict::Turn:
        if (!(c.outcome.enclosure.hi < 0.0))
          fail(tag + "turning verdict but enclosure reaches 0");
        break;
      case Verdict::NoTurn:
        if (!(c.outcome.enclosure.lo > 0.0))
          fail(tag + "not-turning verdict but enclosure reaches 0");
        break;
      default:
        if (!contains_zero(c.outcome.enclosure) && c.outcome.reason.empty())
          fail(tag + "unknown verdict with a sign-definite enclosure");
        break;
    }
  }

  const long double region_area =
      static_cast<long double>(width(r.h2)) *
      static_cast<long double>(width(r.kappa));
  long double covered = 0.0L;
  for (const DiagramCell& c : r.cells)
    covered += static_cast<long double>(width(c.ps.h2)) *
               static_cast<long double>(width(c.ps.kappa));
  if (std::abs(static_cast<double>(covered / region_area) - 1.0) > 1e-12)
    fail("leaf areas do not tile the region area");
  const double fractions = r.area_turn + r.area_noturn + r.area_unknown;
  if (std::abs(fractions - 1.0) > 1e-12)
    fail("area fractions do not sum to 1");

  // Sorting by h2.lo bounds the overlap scan: only runs of cells whose h2
  // spans intersect can collide at all.
  std::vector<std::size_t> order(r.cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return r.cells[a].ps.h2.lo < r.cells[b].ps.h2.lo;
  });
  for (std::size_t a = 0; a < order.size(); ++a) {
    const ParameterSet& pa = r.cells[order[a]].ps;
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const ParameterSet& pb = r.cells[order[b]].ps;
      if (pb.h2.lo >= pa.h2.hi) break;
      if (std::min(pa.kappa.hi, pb.kappa.hi) >
          std::max(pa.kappa.lo, pb.kappa.lo))
        fail("cells " + std::to_string(order[a]) + " and " +
             std::to_string(order[b]) + " overlap");
    }
  }

  if (!r.totals.empty()) {
    std::size_t processed = 0;
    for (std::size_t n : r.totals) processed += n;
    // Each split rectangle was processed yet is no leaf, and contributed 8
    // children beyond the seeds.
    const std::size_t splits = processed - r.cells.size();
    if (processed != r.totals.front() + 8 * splits)
      fail("generation totals inconsistent with 8-way splitting");
  } else {
    fail("no generation totals");
  }
  return ok;
}

// Problem-specific sanity of a finished diagram: inside every group of leaves
// sharing one h2 span, verdicts ordered by kappa must read as a block of
// not-turning, then unknown, then turning.  This is the monotonicity that the
// negative kappa derivative of the velocity enclosure predicts.
inline bool column_order_ok(const DiagramReport& r,
                            std::vector<std::string>* diagnostics = nullptr) {
  std::vector<std::size_t> order(r.cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const ParameterSet& pa = r.cells[a].ps;
    const ParameterSet& pb = r.cells[b].ps;
    if (pa.h2.lo != pb.h2.lo) return pa.h2.lo < pb.h2.lo;
    if (pa.h2.hi != pb.h2.hi) return pa.h2.hi < pb.h2.hi;
    return pa.kappa.lo < pb.kappa.lo;
  });
  bool ok = true;
  auto rank = [](Verdict v) {
    return v == Verdict::NoTurn ? 0 : (v == Verdict::Unknown ? 1 : 2);
  };
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    int prev = -1;
    for (; j < order.size(); ++j) {
      const ParameterSet& p = r.cells[order[j]].ps;
      const ParameterSet& q = r.cells[order[i]].ps;
      if (p.h2.lo != q.h2.lo || p.h2.hi != q.h2.hi) break;
      const int cur = rank(r.cells[order[j]].outcome.verdict);
      if (cur < prev) {
        ok = false;
        if (diagnostics)
          diagnostics->push_back(
              "column h2 = [" + std::to_string(q.h2.lo) + ", " +
              std::to_string(q.h2.hi) + "] breaks the verdict order at kappa " +
              std::to_string(p.kappa.lo));
      }
      prev = std::max(prev, cur);
    }
    i = j;
  }
  return ok;
}

}  // namespace turncert
