#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "mbs/error.hpp"
#include "mbs/geometry.hpp"

namespace mbs {

/// Simple undirected graph on {0..n-1}: irreflexive and symmetric by
/// construction. Stores both a dense matrix and adjacency lists.
class IntersectionGraph {
 public:
  IntersectionGraph() = default;
  explicit IntersectionGraph(std::size_t n) : n_(n), matrix_(n * n, 0), lists_(n) {}

  static IntersectionGraph from_edges(std::size_t n,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    IntersectionGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  std::size_t size() const { return n_; }

  bool adjacent(std::size_t u, std::size_t v) const { return matrix_[u * n_ + v] != 0; }

  const std::vector<std::size_t>& neighbors(std::size_t v) const { return lists_[v]; }

  std::size_t degree(std::size_t v) const { return lists_[v].size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& l : lists_) twice += l.size();
    return twice / 2;
  }

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw ValidationError("edge endpoint out of range");
    if (u == v) throw ValidationError("self loop");
    if (adjacent(u, v)) return;
    matrix_[u * n_ + v] = matrix_[v * n_ + u] = 1;
    lists_[u].push_back(v);
    lists_[v].push_back(u);
  }

  /// Bitmask of neighbours; only for n <= 64.
  std::uint64_t neighbor_mask(std::size_t v) const {
    std::uint64_t m = 0;
    for (std::size_t u : lists_[v]) m |= std::uint64_t{1} << u;
    return m;
  }

  friend bool operator==(const IntersectionGraph& a, const IntersectionGraph& b) {
    return a.n_ == b.n_ && a.matrix_ == b.matrix_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<std::size_t>> lists_;
};

/// O(n^2) pairwise closed-intersection tests.
inline IntersectionGraph build_intersection_graph(const GeometricInstance& inst) {
  validate(inst);
  const std::size_t n = inst.size();
  IntersectionGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (objects_intersect(inst, i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

/// Selected object indices (sorted, unique) plus an optional proper
/// 2-coloring aligned with `selected`.
struct Solution {
  std::vector<std::size_t> selected;
  std::optional<std::vector<int>> coloring;

  std::size_t size() const { return selected.size(); }
  friend bool operator==(const Solution&, const Solution&) = default;
};

namespace detail {

inline void check_subset(const IntersectionGraph& g, const std::vector<std::size_t>& subset) {
  std::vector<std::uint8_t> seen(g.size(), 0);
  for (std::size_t v : subset) {
    if (v >= g.size()) {
      throw ValidationError("vertex " + std::to_string(v) + " out of range (n = " +
                            std::to_string(g.size()) + ")");
    }
    if (seen[v]++) throw ValidationError("duplicate vertex " + std::to_string(v));
  }
}

}  // namespace detail

/// Proper 2-coloring of the subgraph induced by `subset` (aligned with the
/// subset order), or nullopt if it has an odd cycle. BFS per component,
/// components rooted at their first vertex in subset order with color 0.
inline std::optional<std::vector<int>> is_bipartite(const IntersectionGraph& g,
                                                    const std::vector<std::size_t>& subset) {
  detail::check_subset(g, subset);
  std::vector<int> pos(g.size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<int>(i);
  std::vector<int> color(subset.size(), -1);
  std::deque<std::size_t> queue;
  for (std::size_t root = 0; root < subset.size(); ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t w : g.neighbors(subset[a])) {
        int b = pos[w];
        if (b < 0) continue;
        if (color[b] == -1) {
          color[b] = 1 - color[a];
          queue.push_back(static_cast<std::size_t>(b));
        } else if (color[b] == color[a]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

/// Some induced triangle (lexicographically first, as vertex ids) or nullopt.
inline std::optional<std::array<std::size_t, 3>> is_triangle_free(
    const IntersectionGraph& g, const std::vector<std::size_t>& subset) {
  detail::check_subset(g, subset);
  std::vector<std::size_t> s = subset;
  std::sort(s.begin(), s.end());
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (!g.adjacent(s[a], s[b])) continue;
      for (std::size_t c = b + 1; c < s.size(); ++c) {
        if (g.adjacent(s[a], s[c]) && g.adjacent(s[b], s[c])) {
          return std::array<std::size_t, 3>{s[a], s[b], s[c]};
        }
      }
    }
  }
  return std::nullopt;
}

/// Some induced edge (lexicographically first) or nullopt.
inline std::optional<std::pair<std::size_t, std::size_t>> is_independent(
    const IntersectionGraph& g, const std::vector<std::size_t>& subset) {
  detail::check_subset(g, subset);
  std::vector<std::size_t> s = subset;
  std::sort(s.begin(), s.end());
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (g.adjacent(s[a], s[b])) return std::pair{s[a], s[b]};
    }
  }
  return std::nullopt;
}

/// First edge of the induced subgraph whose endpoints share a color under
/// `coloring` (aligned with `subset`), or nullopt when the coloring is proper.
inline std::optional<std::pair<std::size_t, std::size_t>> monochromatic_edge(
    const IntersectionGraph& g, const std::vector<std::size_t>& subset,
    const std::vector<int>& coloring) {
  detail::check_subset(g, subset);
  if (coloring.size() != subset.size()) throw ValidationError("coloring size mismatch");
  std::vector<int> color_of(g.size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (coloring[i] != 0 && coloring[i] != 1) throw ValidationError("color must be 0 or 1");
    color_of[subset[i]] = coloring[i];
  }
  for (std::size_t v : subset) {
    for (std::size_t w : g.neighbors(v)) {
      if (v < w && color_of[w] == color_of[v]) return std::pair{v, w};
    }
  }
  return std::nullopt;
}

/// Vertices of a shortest odd cycle through the first BFS conflict found in
/// the induced subgraph, or empty when the subset is bipartite.
inline std::vector<std::size_t> odd_cycle_witness(const IntersectionGraph& g,
                                                  const std::vector<std::size_t>& subset) {
  detail::check_subset(g, subset);
  std::vector<std::uint8_t> in(g.size(), 0);
  for (std::size_t v : subset) in[v] = 1;
  std::vector<long> depth(g.size(), -1);
  std::vector<std::size_t> parent(g.size(), 0);
  for (std::size_t root : subset) {
    if (depth[root] != -1) continue;
    depth[root] = 0;
    parent[root] = root;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t b : g.neighbors(a)) {
        if (!in[b]) continue;
        if (depth[b] == -1) {
          depth[b] = depth[a] + 1;
          parent[b] = a;
          queue.push_back(b);
        } else if (depth[b] == depth[a]) {
          // Walk both tree paths up to their common ancestor.
          std::vector<std::size_t> left{a}, right{b};
          while (left.back() != right.back()) {
            left.push_back(parent[left.back()]);
            right.push_back(parent[right.back()]);
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          return left;
        }
      }
    }
  }
  return {};
}

/// Adds, in index order, every vertex whose selected neighbours all share
/// one colour, giving it the other colour. Never shrinks the set.
inline Solution extend_bipartite(const IntersectionGraph& g, const Solution& sol) {
  std::vector<int> color(g.size(), -1);
  for (std::size_t i = 0; i < sol.size(); ++i) color[sol.selected[i]] = (*sol.coloring)[i];
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (color[v] != -1) continue;
    bool seen[2] = {false, false};
    for (std::size_t w : g.neighbors(v)) {
      if (color[w] != -1) seen[color[w]] = true;
    }
    if (seen[0] && seen[1]) continue;
    color[v] = seen[0] ? 1 : 0;
  }
  Solution out;
  std::vector<int> colors;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (color[v] == -1) continue;
    out.selected.push_back(v);
    colors.push_back(color[v]);
  }
  out.coloring = std::move(colors);
  return out;
}


}  // namespace mbs
