#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "mbs/error.hpp"
#include "mbs/geometry.hpp"
#include "mbs/graph.hpp"
#include "mbs/interval_solver.hpp"

namespace mbs {

/// Group of each rectangle: floor(y_min - a), a the lowest y_min. All
/// rectangles of group g contain the line y = a + g + 1, and groups two or
/// more apart are vertically disjoint.
inline std::vector<std::int64_t> unit_height_groups(const GeometricInstance& inst) {
  if (inst.kind != Kind::unit_height_rects && inst.kind != Kind::unit_squares) {
    throw ValidationError("expected unit-height rectangles");
  }
  validate(inst);
  const auto& rects = inst.rects();
  std::vector<std::int64_t> group;
  if (rects.empty()) return group;
  Rational a = rects.front().y_min;
  for (const auto& r : rects) a = std::min(a, r.y_min);
  for (const auto& r : rects) group.push_back(floor_to_int64(r.y_min - a));
  return group;
}

/// 2-approximation for MBS on unit-height rectangles: solve every group
/// exactly as intervals of x-projections, then keep the better of the
/// even-group and odd-group unions.
inline Solution solve_unit_height(const GeometricInstance& inst) {
  auto group = unit_height_groups(inst);
  require_nonempty(inst);
  const auto& rects = inst.rects();
  std::map<std::int64_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < rects.size(); ++i) members[group[i]].push_back(i);

  std::vector<std::pair<std::size_t, int>> by_parity[2];
  for (const auto& [g, ids] : members) {
    std::vector<IntervalObj> proj;
    for (std::size_t i : ids) proj.push_back({rects[i].x_min, rects[i].x_max});
    Solution local = solve_intervals(GeometricInstance::make_intervals(std::move(proj)),
                                     IntervalOptions{.presorted = false, .perturb = true});
    auto& out = by_parity[g % 2 == 0 ? 0 : 1];
    for (std::size_t p = 0; p < local.size(); ++p) {
      out.emplace_back(ids[local.selected[p]], (*local.coloring)[p]);
    }
  }
  auto& pick = by_parity[0].size() >= by_parity[1].size() ? by_parity[0] : by_parity[1];
  std::sort(pick.begin(), pick.end());
  Solution sol;
  std::vector<int> colors;
  for (auto [i, c] : pick) {
    sol.selected.push_back(i);
    colors.push_back(c);
  }
  sol.coloring = std::move(colors);
  return sol;
}

}  // namespace mbs
