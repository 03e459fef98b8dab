#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "mbs/error.hpp"
#include "mbs/geometry.hpp"
#include "mbs/graph.hpp"

namespace mbs {

/// Sweep registers of the greedy: `x` is the rightmost point covered twice
/// by the current selection, `y` the rightmost point covered once. An empty
/// optional stands for minus infinity.
template <class Coord>
struct SweepState {
  std::optional<Coord> x;
  std::optional<Coord> y;
};

/// The greedy scan over intervals already sorted by right endpoint, with all
/// endpoints pairwise distinct. Returns the positions (into `sorted`) of the
/// chosen intervals. `observe`, when set, sees the state after every step.
template <class Coord>
std::vector<std::size_t> bipartite_interval_scan(
    const std::vector<std::pair<Coord, Coord>>& sorted,
    const std::function<void(const SweepState<Coord>&)>& observe = {}) {
  SweepState<Coord> st;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& [left, right] = sorted[i];
    if (!st.y || left > *st.y) {
      chosen.push_back(i);
      st.y = right;
    } else if ((!st.x || *st.x < left) && left < *st.y) {
      chosen.push_back(i);
      st.x = st.y;
      st.y = right;
    }
    if (observe) observe(st);
  }
  return chosen;
}

struct IntervalOptions {
  /// The caller guarantees the intervals are ordered by right endpoint.
  bool presorted = false;
  /// Break endpoint ties symbolically instead of rejecting them: at equal
  /// coordinates left endpoints precede right endpoints (so touching
  /// intervals still overlap), remaining ties go by object index.
  bool perturb = false;
};

namespace interval_detail {

/// Ranks of all 2n endpoints in the (possibly perturbed) total order.
/// Element 2i is left(i), 2i+1 is right(i).
inline std::vector<long> endpoint_ranks(const std::vector<IntervalObj>& v, bool perturb) {
  const std::size_t n = v.size();
  std::vector<std::size_t> ids(2 * n);
  std::iota(ids.begin(), ids.end(), 0);
  auto value = [&](std::size_t e) -> const Rational& {
    return (e & 1) ? v[e / 2].right : v[e / 2].left;
  };
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    const Rational& va = value(a);
    const Rational& vb = value(b);
    if (va != vb) return va < vb;
    return std::make_pair(a & 1, a / 2) < std::make_pair(b & 1, b / 2);
  });
  std::vector<long> rank(2 * n);
  for (std::size_t r = 0; r < ids.size(); ++r) {
    if (!perturb && r > 0 && value(ids[r]) == value(ids[r - 1])) {
      throw ValidationError("duplicate interval endpoint " + format_rational(value(ids[r])) +
                            " (enable perturbation to break ties)");
    }
    rank[ids[r]] = static_cast<long>(r);
  }
  return rank;
}

}  // namespace interval_detail

/// Exact maximum bipartite subgraph of an interval scene. The returned
/// solution carries a 2-coloring certificate.
inline Solution solve_intervals(const GeometricInstance& inst, const IntervalOptions& opt = {}) {
  if (inst.kind != Kind::intervals) throw ValidationError("solve_intervals needs an interval scene");
  validate(inst);
  const auto& v = inst.intervals();
  const std::size_t n = v.size();
  if (n == 0) return Solution{{}, std::vector<int>{}};

  auto rank = interval_detail::endpoint_ranks(v, opt.perturb);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (opt.presorted) {
    for (std::size_t i = 1; i < n; ++i) {
      if (rank[2 * i + 1] < rank[2 * i - 1]) {
        throw ValidationError("intervals flagged presorted are not ordered by right endpoint");
      }
    }
  } else {
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rank[2 * a + 1] < rank[2 * b + 1]; });
  }
  std::vector<std::pair<long, long>> sorted;
  sorted.reserve(n);
  for (std::size_t i : order) sorted.emplace_back(rank[2 * i], rank[2 * i + 1]);

  Solution sol;
  for (std::size_t pos : bipartite_interval_scan(sorted)) sol.selected.push_back(order[pos]);
  std::sort(sol.selected.begin(), sol.selected.end());

  auto g = build_intersection_graph(subinstance(inst, sol.selected));
  std::vector<std::size_t> all(sol.selected.size());
  std::iota(all.begin(), all.end(), 0);
  sol.coloring = is_bipartite(g, all);
  if (!sol.coloring) throw std::logic_error("interval greedy produced a non-bipartite set");
  return sol;
}

}  // namespace mbs
