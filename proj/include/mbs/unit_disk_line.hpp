#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "mbs/error.hpp"
#include "mbs/geometry.hpp"
#include "mbs/graph.hpp"

namespace mbs {

/// Disks stabbed by a line: exact DP when all centres are on one side, a
/// 2-approximation when they are on both sides. The line is horizontal,
/// y = `line_y`; centres "above" include centres on the line.

namespace disk_detail {

/// Positions 0..n-1 ordered by (x, original position).
inline std::vector<std::size_t> x_order(const std::vector<Point>& c) {
  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return c[a].x < c[b].x; });
  return order;
}

inline IntersectionGraph disk_graph(const std::vector<Point>& c, const Rational& r) {
  IntersectionGraph g(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (disks_intersect(c[i], c[j], r)) g.add_edge(i, j);
    }
  }
  return g;
}

inline std::vector<Point> centers_of(const GeometricInstance& inst) {
  std::vector<Point> c;
  for (const auto& d : inst.disks()) c.push_back(d.center);
  return c;
}

/// Centres relative to the line y = line_y, rejecting disks that miss it.
inline std::vector<Point> relative_to_line(const GeometricInstance& inst, const Rational& line_y) {
  if (inst.kind != Kind::unit_disks) throw ValidationError("expected a unit_disks scene");
  validate(inst);
  std::vector<Point> c = centers_of(inst);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i].y -= line_y;
    if (abs(c[i].y) > inst.disk_radius) {
      throw ValidationError("disk " + std::to_string(i) + " does not intersect the line");
    }
  }
  return c;
}

inline void require_one_side(const std::vector<Point>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].y < 0) {
      throw ValidationError("disk " + std::to_string(i) +
                            " has its centre strictly below the line (reflect first)");
    }
  }
}

}  // namespace disk_detail

/// Memo of the one-sided DP. Triples are positions in x-order with
/// i < j < k. `value` is the size of the largest triangle-free set whose
/// three x-leftmost members are i, j, k (0 when they form a triangle);
/// `next` is the fourth member that realises it, if any.
struct DpTable {
  std::size_t n = 0;
  std::vector<std::size_t> order;  // x-order position -> original index
  std::vector<int> value;
  std::vector<int> next;

  std::size_t cell(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * n + j) * n + k;
  }
  int B(std::size_t i, std::size_t j, std::size_t k) const { return value[cell(i, j, k)]; }
  std::optional<std::size_t> back(std::size_t i, std::size_t j, std::size_t k) const {
    int l = next[cell(i, j, k)];
    if (l < 0) return std::nullopt;
    return static_cast<std::size_t>(l);
  }
};

namespace disk_detail {

/// Fills the table for centres already in x-order (position == rank).
inline DpTable fill_dp(const IntersectionGraph& g) {
  const std::size_t n = g.size();
  DpTable t;
  t.n = n;
  t.order.resize(n);
  std::iota(t.order.begin(), t.order.end(), 0);
  t.value.assign(n * n * n, 0);
  t.next.assign(n * n * n, -1);
  auto tri = [&](std::size_t a, std::size_t b, std::size_t c) {
    return g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c);
  };
  for (std::size_t k = n; k-- > 2;) {
    for (std::size_t j = 1; j < k; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        std::size_t c = t.cell(i, j, k);
        if (tri(i, j, k)) continue;
        int best = 3;
        for (std::size_t l = k + 1; l < n; ++l) {
          if (tri(i, j, l) || tri(i, k, l) || tri(j, k, l)) continue;
          int cand = 1 + t.value[t.cell(j, k, l)];
          if (cand > best) {
            best = cand;
            t.next[c] = static_cast<int>(l);
          }
        }
        t.value[c] = best;
      }
    }
  }
  return t;
}

/// Exact MBS on x-ordered one-sided centres; returns x-order positions.
inline std::vector<std::size_t> one_sided_positions(const IntersectionGraph& g) {
  const std::size_t n = g.size();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  DpTable t = fill_dp(g);
  int best = 0;
  std::size_t bi = 0, bj = 0, bk = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (t.B(i, j, k) > best) {
          best = t.B(i, j, k);
          bi = i, bj = j, bk = k;
        }
      }
    }
  }
  // Every pair is bipartite, so two disks are always achievable.
  if (best < 3) return {0, 1};
  std::vector<std::size_t> picked{bi, bj, bk};
  while (auto l = t.back(bi, bj, bk)) {
    picked.push_back(*l);
    bi = bj, bj = bk, bk = *l;
  }
  return picked;
}

/// Maximum independent set of x-ordered one-sided disks: a longest chain
/// of pairwise-disjoint disks in x-order (disjointness is transitive along
/// the order). Returns x-order positions.
inline std::vector<std::size_t> mis_positions(const IntersectionGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return {};
  std::vector<int> len(n, 1);
  std::vector<int> pred(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!g.adjacent(i, j) && len[i] + 1 > len[j]) {
        len[j] = len[i] + 1;
        pred[j] = static_cast<int>(i);
      }
    }
  }
  std::size_t end = static_cast<std::size_t>(std::max_element(len.begin(), len.end()) - len.begin());
  std::vector<std::size_t> chain;
  for (int v = static_cast<int>(end); v >= 0; v = pred[v]) chain.push_back(static_cast<std::size_t>(v));
  std::reverse(chain.begin(), chain.end());
  return chain;
}

/// Centres in x-order, with the map back to their input positions.
struct Ordered {
  std::vector<Point> centers;
  std::vector<std::size_t> original;
};

inline Ordered ordered(const std::vector<Point>& c) {
  Ordered o;
  o.original = x_order(c);
  for (std::size_t p : o.original) o.centers.push_back(c[p]);
  return o;
}

inline std::vector<std::size_t> map_back(const Ordered& o, const std::vector<std::size_t>& pos) {
  std::vector<std::size_t> out;
  for (std::size_t p : pos) out.push_back(o.original[p]);
  std::sort(out.begin(), out.end());
  return out;
}

/// Exact one-sided MBS over relative centres (y >= 0); input positions.
inline std::vector<std::size_t> solve_one_sided_centers(const std::vector<Point>& c,
                                                        const Rational& r) {
  Ordered o = ordered(c);
  return map_back(o, one_sided_positions(disk_graph(o.centers, r)));
}

inline std::vector<std::size_t> mis_centers(const std::vector<Point>& c, const Rational& r) {
  Ordered o = ordered(c);
  return map_back(o, mis_positions(disk_graph(o.centers, r)));
}

/// Two-sided 2-approximation over relative centres; returns the solution
/// with side labels as colors (0 = on/above, 1 = below).
inline Solution solve_two_sided_centers(const std::vector<Point>& c, const Rational& r) {
  std::vector<Point> above, below;
  std::vector<std::size_t> above_id, below_id;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].y >= 0) {
      above.push_back(c[i]);
      above_id.push_back(i);
    } else {
      below.push_back({c[i].x, -c[i].y});
      below_id.push_back(i);
    }
  }
  std::vector<std::pair<std::size_t, int>> tagged;
  for (std::size_t p : mis_centers(above, r)) tagged.emplace_back(above_id[p], 0);
  for (std::size_t p : mis_centers(below, r)) tagged.emplace_back(below_id[p], 1);
  std::sort(tagged.begin(), tagged.end());
  Solution sol;
  std::vector<int> colors;
  for (auto [v, side] : tagged) {
    sol.selected.push_back(v);
    colors.push_back(side);
  }
  sol.coloring = std::move(colors);
  return sol;
}

inline Solution certify(const GeometricInstance& inst, std::vector<std::size_t> selected) {
  Solution sol;
  sol.selected = std::move(selected);
  sol.coloring = is_bipartite(build_intersection_graph(inst), sol.selected);
  if (!sol.coloring) throw std::logic_error("disk solver produced a non-bipartite set");
  return sol;
}

}  // namespace disk_detail

/// The DP table of the one-sided solver for inspection; `order` maps
/// x-order positions to object indices.
inline DpTable build_dp_table(const GeometricInstance& inst, const Rational& line_y) {
  auto c = disk_detail::relative_to_line(inst, line_y);
  disk_detail::require_one_side(c);
  auto o = disk_detail::ordered(c);
  DpTable t = disk_detail::fill_dp(disk_detail::disk_graph(o.centers, inst.disk_radius));
  t.order = o.original;
  return t;
}

/// Exact maximum bipartite subgraph of disks that all meet the line
/// y = line_y with centres on or above it. O(n^4) time, O(n^3) space.
inline Solution solve_one_sided(const GeometricInstance& inst, const Rational& line_y) {
  auto c = disk_detail::relative_to_line(inst, line_y);
  disk_detail::require_one_side(c);
  return disk_detail::certify(inst, disk_detail::solve_one_sided_centers(c, inst.disk_radius));
}

/// Exact maximum independent set for the same one-sided setting, O(n^2).
inline std::vector<std::size_t> one_sided_mis(const GeometricInstance& inst,
                                              const Rational& line_y) {
  auto c = disk_detail::relative_to_line(inst, line_y);
  disk_detail::require_one_side(c);
  return disk_detail::mis_centers(c, inst.disk_radius);
}

/// Union of the maximum independent sets on each side of the line; at
/// least half the optimum.
inline Solution solve_two_sided(const GeometricInstance& inst, const Rational& line_y) {
  auto c = disk_detail::relative_to_line(inst, line_y);
  return disk_detail::solve_two_sided_centers(c, inst.disk_radius);
}

}  // namespace mbs
