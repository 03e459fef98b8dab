#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mbs/error.hpp"
#include "mbs/graph.hpp"

namespace mbs {

struct OracleOptions {
  std::size_t cap = 20;
};

namespace oracle_detail {

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const IntersectionGraph& g) {
  std::vector<Mask> adj(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) adj[v] = g.neighbor_mask(v);
  return adj;
}

/// Feasibility tests on vertex masks. Each returns 0 when the mask is
/// feasible, otherwise a nonempty witness mask contained in it (every
/// superset of a witness is infeasible too).
inline Mask independent_witness(const std::vector<Mask>& adj, Mask s) {
  for (Mask rest = s; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    Mask hit = adj[v] & s;
    if (hit) return (Mask{1} << v) | (hit & -hit);
  }
  return 0;
}

inline Mask triangle_witness(const std::vector<Mask>& adj, Mask s) {
  for (Mask rest = s; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    for (Mask nb = adj[v] & s & ~((Mask{2} << v) - 1); nb; nb &= nb - 1) {
      int u = std::countr_zero(nb);
      Mask common = adj[v] & adj[u] & s;
      if (common) return (Mask{1} << v) | (Mask{1} << u) | (common & -common);
    }
  }
  return 0;
}

/// Returns 0 if bipartite (and fills `color1` with one side), else the
/// vertex mask of an odd cycle.
inline Mask odd_cycle_witness(const std::vector<Mask>& adj, Mask s, Mask* color1) {
  int depth[64];
  int parent[64];
  Mask seen = 0;
  Mask ones = 0;
  int queue[64];
  for (Mask roots = s; roots; roots &= roots - 1) {
    int r = std::countr_zero(roots);
    if (seen >> r & 1) continue;
    seen |= Mask{1} << r;
    depth[r] = 0;
    parent[r] = r;
    int head = 0, tail = 0;
    queue[tail++] = r;
    while (head < tail) {
      int a = queue[head++];
      for (Mask nb = adj[a] & s; nb; nb &= nb - 1) {
        int b = std::countr_zero(nb);
        if (!(seen >> b & 1)) {
          seen |= Mask{1} << b;
          depth[b] = depth[a] + 1;
          parent[b] = a;
          if (depth[b] & 1) ones |= Mask{1} << b;
          queue[tail++] = b;
        } else if (depth[b] == depth[a]) {
          Mask cyc = (Mask{1} << a) | (Mask{1} << b);
          int x = a, y = b;
          while (x != y) {
            x = parent[x];
            y = parent[y];
            cyc |= (Mask{1} << x) | (Mask{1} << y);
          }
          return cyc;
        }
      }
    }
  }
  if (color1) *color1 = ones;
  return 0;
}

/// Scans subsets in decreasing size, lexicographic order within a size, and
/// returns the first feasible one. A small ring of recent witnesses prunes
/// supersets before the full test runs.
template <class Witness>
Mask search_max(std::size_t n, Witness&& witness) {
  constexpr std::size_t kRing = 16;
  Mask ring[kRing] = {};
  std::size_t ring_size = 0, ring_next = 0;
  std::vector<int> idx;
  for (std::size_t s = n; s > 0; --s) {
    idx.resize(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = static_cast<int>(i);
    while (true) {
      Mask m = 0;
      for (int i : idx) m |= Mask{1} << i;
      bool pruned = false;
      for (std::size_t r = 0; r < ring_size; ++r) {
        if ((m & ring[r]) == ring[r]) {
          pruned = true;
          break;
        }
      }
      if (!pruned) {
        Mask w = witness(m);
        if (w == 0) return m;
        ring[ring_next] = w;
        ring_next = (ring_next + 1) % kRing;
        ring_size = std::min(ring_size + 1, kRing);
      }
      // Next combination in lexicographic order.
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && idx[i] == static_cast<int>(n - s) + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return 0;
}

inline std::vector<std::size_t> mask_to_indices(Mask m) {
  std::vector<std::size_t> out;
  for (; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

inline void check_cap(const IntersectionGraph& g, const OracleOptions& opt) {
  if (g.size() > opt.cap || g.size() > 63) {
    throw CapacityError("exhaustive oracle limited to " + std::to_string(std::min<std::size_t>(opt.cap, 63)) +
                        " vertices, got " + std::to_string(g.size()));
  }
}

}  // namespace oracle_detail

/// Maximum induced bipartite subgraph by exhaustive search, with its
/// coloring. Among optima the lexicographically smallest index set wins.
inline Solution exact_mbs(const IntersectionGraph& g, const OracleOptions& opt = {}) {
  using namespace oracle_detail;
  check_cap(g, opt);
  auto adj = adjacency_masks(g);
  Mask best = search_max(g.size(), [&](Mask m) { return odd_cycle_witness(adj, m, nullptr); });
  Mask ones = 0;
  odd_cycle_witness(adj, best, &ones);
  Solution sol;
  sol.selected = mask_to_indices(best);
  std::vector<int> coloring;
  for (std::size_t v : sol.selected) coloring.push_back(static_cast<int>(ones >> v & 1));
  sol.coloring = std::move(coloring);
  return sol;
}

/// Maximum induced triangle-free subgraph by exhaustive search.
inline Solution exact_mtfs(const IntersectionGraph& g, const OracleOptions& opt = {}) {
  using namespace oracle_detail;
  check_cap(g, opt);
  auto adj = adjacency_masks(g);
  Mask best = search_max(g.size(), [&](Mask m) { return triangle_witness(adj, m); });
  return Solution{mask_to_indices(best), std::nullopt};
}

/// Maximum independent set by exhaustive search.
inline Solution exact_mis(const IntersectionGraph& g, const OracleOptions& opt = {}) {
  using namespace oracle_detail;
  check_cap(g, opt);
  auto adj = adjacency_masks(g);
  Mask best = search_max(g.size(), [&](Mask m) { return independent_witness(adj, m); });
  return Solution{mask_to_indices(best), std::nullopt};
}

}  // namespace mbs
