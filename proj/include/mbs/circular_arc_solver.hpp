#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "mbs/error.hpp"
#include "mbs/geometry.hpp"
#include "mbs/graph.hpp"
#include "mbs/interval_solver.hpp"

namespace mbs {

namespace arc_detail {

/// Distinct endpoint angles in increasing order.
inline std::vector<Rational> endpoint_angles(const std::vector<ArcObj>& arcs) {
  std::vector<Rational> pts;
  for (const auto& a : arcs) {
    pts.push_back(a.start);
    pts.push_back(a.end);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

/// Midpoint of the open gap following `angle` (clockwise) in `pts`.
inline Rational gap_after(const std::vector<Rational>& pts, const Rational& angle) {
  auto it = std::upper_bound(pts.begin(), pts.end(), angle);
  Rational next = it == pts.end() ? pts.front() + 1 : *it;
  Rational mid = (angle + next) / 2;
  return mid >= 1 ? mid - 1 : mid;
}

/// Midpoint of the open gap preceding `angle` (counter-clockwise) in `pts`.
inline Rational gap_before(const std::vector<Rational>& pts, const Rational& angle) {
  auto it = std::lower_bound(pts.begin(), pts.end(), angle);
  Rational prev = it == pts.begin() ? pts.back() - 1 : *std::prev(it);
  Rational mid = (prev + angle) / 2;
  return mid < 0 ? mid + 1 : mid;
}

inline Rational rebase(const Rational& angle, const Rational& cut) {
  Rational a = angle - cut;
  return a < 0 ? a + 1 : a;
}

}  // namespace arc_detail

/// Cut points tried by `solve_arcs`: the open gap just before each arc's
/// start and just after each arc's end, plus one uncovered point when the
/// arcs leave part of the circle free. Sorted, without duplicates.
inline std::vector<Rational> arc_cut_points(const std::vector<ArcObj>& arcs) {
  using namespace arc_detail;
  if (arcs.empty()) return {};
  auto pts = endpoint_angles(arcs);
  std::vector<Rational> cuts;
  for (const auto& a : arcs) {
    cuts.push_back(gap_before(pts, a.start));
    cuts.push_back(gap_after(pts, a.end));
  }
  for (const auto& p : pts) {
    Rational mid = gap_after(pts, p);
    bool covered = std::any_of(arcs.begin(), arcs.end(),
                               [&](const ArcObj& a) { return arc_contains(a, mid); });
    if (!covered) {
      cuts.push_back(mid);
      break;
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

/// Exact MBS of the arcs avoiding `cut`, solved as intervals after opening
/// the circle at `cut`. Indices refer to the original scene.
inline Solution solve_arcs_at_cut(const GeometricInstance& inst, const Rational& cut) {
  const auto& arcs = inst.arcs();
  std::vector<std::size_t> kept;
  std::vector<IntervalObj> lines;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arc_contains(arcs[i], cut)) continue;
    kept.push_back(i);
    lines.push_back({arc_detail::rebase(arcs[i].start, cut), arc_detail::rebase(arcs[i].end, cut)});
  }
  Solution local = solve_intervals(GeometricInstance::make_intervals(std::move(lines)),
                                   IntervalOptions{.presorted = false, .perturb = true});
  Solution sol;
  for (std::size_t i : local.selected) sol.selected.push_back(kept[i]);
  sol.coloring = local.coloring;  // kept is increasing, so alignment survives
  return sol;
}

/// Bipartite subset of a circular-arc scene of size at least OPT - 1:
/// the best of the interval solutions over all cut points.
inline Solution solve_arcs(const GeometricInstance& inst) {
  if (inst.kind != Kind::arcs) throw ValidationError("solve_arcs needs an arc scene");
  validate(inst);
  require_nonempty(inst);
  std::optional<Solution> best;
  for (const Rational& cut : arc_cut_points(inst.arcs())) {
    Solution cand = solve_arcs_at_cut(inst, cut);
    if (!best || cand.size() > best->size() ||
        (cand.size() == best->size() && cand.selected < best->selected)) {
      best = std::move(cand);
    }
  }
  return *best;
}

}  // namespace mbs
