#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "mbs/error.hpp"
#include "mbs/geometry.hpp"
#include "mbs/graph.hpp"
#include "mbs/unit_disk_line.hpp"

namespace mbs {

/// Horizontal lines y = origin + t * spacing (spacing = disk radius). Disk i
/// belongs to line group[i], the highest line at or below its centre, so
/// the centre lies within distance < r above that line.
struct SlabAssignment {
  Rational origin;
  Rational spacing;
  std::vector<std::int64_t> group;

  Rational line_y(std::int64_t t) const { return origin + spacing * t; }
  std::int64_t line_count() const {
    return group.empty() ? 0 : *std::max_element(group.begin(), group.end()) + 1;
  }
};

inline SlabAssignment build_slab_assignment(const GeometricInstance& inst) {
  if (inst.kind != Kind::unit_disks) throw ValidationError("expected a unit_disks scene");
  validate(inst);
  require_nonempty(inst);
  SlabAssignment s;
  s.spacing = inst.disk_radius;
  s.origin = inst.disks().front().center.y;
  for (const auto& d : inst.disks()) s.origin = std::min(s.origin, d.center.y);
  for (const auto& d : inst.disks()) {
    s.group.push_back(floor_to_int64((d.center.y - s.origin) / s.spacing));
  }
  return s;
}

struct ThreeApproxResult {
  Solution best;
  SlabAssignment slabs;
  /// Exact per-line solutions, keyed by line index.
  std::map<std::int64_t, Solution> per_line;
};

/// Solve every line group exactly with the one-sided DP, keep the best of
/// the three unions over line index mod 3, then extend it greedily. Groups
/// three or more lines apart are vertically separated by more than a diameter.
inline ThreeApproxResult solve_3approx_detailed(const GeometricInstance& inst) {
  ThreeApproxResult res;
  res.slabs = build_slab_assignment(inst);
  std::map<std::int64_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < inst.size(); ++i) members[res.slabs.group[i]].push_back(i);

  for (const auto& [t, ids] : members) {
    GeometricInstance sub = subinstance(inst, ids);
    Solution local = solve_one_sided(sub, res.slabs.line_y(t));
    Solution global;
    for (std::size_t p : local.selected) global.selected.push_back(ids[p]);
    global.coloring = local.coloring;
    res.per_line.emplace(t, std::move(global));
  }

  std::optional<Solution> best;
  for (std::int64_t residue = 0; residue < 3; ++residue) {
    std::vector<std::pair<std::size_t, int>> tagged;
    for (const auto& [t, sol] : res.per_line) {
      if (t % 3 != residue) continue;
      for (std::size_t i = 0; i < sol.size(); ++i) {
        tagged.emplace_back(sol.selected[i], (*sol.coloring)[i]);
      }
    }
    std::sort(tagged.begin(), tagged.end());
    Solution cand;
    std::vector<int> colors;
    for (auto [v, c] : tagged) {
      cand.selected.push_back(v);
      colors.push_back(c);
    }
    cand.coloring = std::move(colors);
    if (!best || cand.size() > best->size()) best = std::move(cand);
  }
  res.best = extend_bipartite(build_intersection_graph(inst), *best);
  return res;
}

/// 3-approximation for MBS on arbitrary equal-radius disks.
inline Solution solve_3approx(const GeometricInstance& inst) {
  return solve_3approx_detailed(inst).best;
}

namespace disk_detail {

inline Solution merge_disjoint(const Solution& a, const Solution& b) {
  std::vector<std::pair<std::size_t, int>> tagged;
  for (const Solution* s : {&a, &b}) {
    for (std::size_t i = 0; i < s->size(); ++i) tagged.emplace_back(s->selected[i], (*s->coloring)[i]);
  }
  std::sort(tagged.begin(), tagged.end());
  Solution out;
  std::vector<int> colors;
  for (auto [v, c] : tagged) {
    out.selected.push_back(v);
    colors.push_back(c);
  }
  out.coloring = std::move(colors);
  return out;
}

/// Recursive step over the disks `ids` (input indices into `c`).
inline Solution logn_rec(const std::vector<Point>& c, const Rational& r,
                         std::vector<std::size_t> ids) {
  if (ids.size() <= 2) {
    std::sort(ids.begin(), ids.end());
    std::vector<int> colors;
    for (std::size_t i = 0; i < ids.size(); ++i) colors.push_back(static_cast<int>(i));
    return Solution{ids, colors};
  }
  std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    return c[a].x < c[b].x || (c[a].x == c[b].x && a < b);
  });
  const Rational x_med = c[ids[(ids.size() - 1) / 2]].x;

  std::vector<std::size_t> left, mid, right;
  for (std::size_t i : ids) {
    Rational dx = c[i].x - x_med;
    if (dx < -r) left.push_back(i);
    else if (dx > r) right.push_back(i);
    else mid.push_back(i);
  }

  // Rotate so the vertical median line becomes the horizontal line y = 0.
  std::vector<Point> turned;
  for (std::size_t i : mid) turned.push_back({c[i].y, c[i].x - x_med});
  Solution local = solve_two_sided_centers(turned, r);
  Solution b_med;
  {
    std::vector<std::pair<std::size_t, int>> tagged;
    for (std::size_t p = 0; p < local.size(); ++p) {
      tagged.emplace_back(mid[local.selected[p]], (*local.coloring)[p]);
    }
    std::sort(tagged.begin(), tagged.end());
    std::vector<int> colors;
    for (auto [v, col] : tagged) {
      b_med.selected.push_back(v);
      colors.push_back(col);
    }
    b_med.coloring = std::move(colors);
  }

  Solution sides = merge_disjoint(logn_rec(c, r, std::move(left)), logn_rec(c, r, std::move(right)));
  return b_med.size() >= sides.size() ? b_med : sides;
}

}  // namespace disk_detail

/// O(log n)-approximation: split at the median x, 2-approximate the disks
/// meeting the median vertical line, recurse on both outer sides, then
/// extend the winner greedily.
inline Solution solve_logn(const GeometricInstance& inst) {
  if (inst.kind != Kind::unit_disks) throw ValidationError("expected a unit_disks scene");
  validate(inst);
  require_nonempty(inst);
  auto c = disk_detail::centers_of(inst);
  std::vector<std::size_t> ids(c.size());
  std::iota(ids.begin(), ids.end(), 0);
  Solution rec = disk_detail::logn_rec(c, inst.disk_radius, std::move(ids));
  return extend_bipartite(build_intersection_graph(inst), rec);
}

/// The factor max(1, 2 log2 n) guaranteed by solve_logn.
inline double logn_factor(std::size_t n) {
  return std::max(1.0, 2.0 * std::log2(static_cast<double>(std::max<std::size_t>(n, 1))));
}

}  // namespace mbs
