#pragma once

// Shared helpers for the test binaries: naive reference searches and
// scene builders that the library generator does not cover.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mbs/mbs.hpp"

namespace mbs_test {

using mbs::GeometricInstance;
using mbs::IntersectionGraph;
using mbs::Rational;

// Plain bitmask adjacency rebuilt from the geometry, not from the graph type.
inline std::vector<std::uint32_t> naive_adjacency(const GeometricInstance& inst) {
  std::vector<std::uint32_t> adj(inst.size(), 0);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    for (std::size_t j = 0; j < inst.size(); ++j) {
      if (i != j && mbs::objects_intersect(inst, i, j)) adj[i] |= 1u << j;
    }
  }
  return adj;
}

inline std::vector<std::uint32_t> naive_adjacency(const IntersectionGraph& g) {
  std::vector<std::uint32_t> adj(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g.adjacent(i, j)) adj[i] |= 1u << j;
    }
  }
  return adj;
}

// Two-colors by repeated relaxation; no queue, no recursion.
inline bool naive_bipartite(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  std::vector<int> col(adj.size(), -1);
  for (std::size_t root = 0; root < adj.size(); ++root) {
    if (!(s >> root & 1) || col[root] != -1) continue;
    col[root] = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t u = 0; u < adj.size(); ++u) {
        if (!(s >> u & 1) || col[u] == -1) continue;
        for (std::size_t v = 0; v < adj.size(); ++v) {
          if (!(s >> v & 1) || !(adj[u] >> v & 1)) continue;
          if (col[v] == -1) {
            col[v] = 1 - col[u];
            changed = true;
          } else if (col[v] == col[u]) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

inline bool naive_triangle_free(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  const std::size_t n = adj.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        if ((s >> a & 1) && (s >> b & 1) && (s >> c & 1) && (adj[a] >> b & 1) && (adj[a] >> c & 1) &&
            (adj[b] >> c & 1)) {
          return false;
        }
      }
  return true;
}

inline bool naive_independent(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  for (std::size_t u = 0; u < adj.size(); ++u) {
    if ((s >> u & 1) && (adj[u] & s)) return false;
  }
  return true;
}

// Largest subset satisfying `ok`, scanning all 2^n masks.
template <class Pred>
std::size_t naive_max(std::size_t n, Pred ok) {
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    auto c = static_cast<std::size_t>(std::popcount(s));
    if (c > best && ok(s)) best = c;
  }
  return best;
}

struct NaiveOptima {
  std::size_t mbs = 0, mtfs = 0, mis = 0;
};

inline NaiveOptima naive_optima(const std::vector<std::uint32_t>& adj) {
  NaiveOptima o;
  o.mbs = naive_max(adj.size(), [&](std::uint32_t s) { return naive_bipartite(adj, s); });
  o.mtfs = naive_max(adj.size(), [&](std::uint32_t s) { return naive_triangle_free(adj, s); });
  o.mis = naive_max(adj.size(), [&](std::uint32_t s) { return naive_independent(adj, s); });
  return o;
}

// Intervals on a coarse integer grid, so shared endpoints are common.
inline GeometricInstance tied_intervals(std::size_t n, std::uint64_t seed, int range = 6) {
  std::mt19937_64 eng(seed);
  std::vector<mbs::IntervalObj> v;
  for (std::size_t i = 0; i < n; ++i) {
    int a = static_cast<int>(eng() % range);
    int len = 1 + static_cast<int>(eng() % 3);
    v.push_back({a, a + len});
  }
  return GeometricInstance::make_intervals(std::move(v));
}

// Disks or unit squares whose extent lies inside [0, k * diameter) in y.
inline GeometricInstance slab_scene(mbs::Kind kind, std::size_t n, std::uint64_t seed, std::int64_t k,
                                    int x_range = 6, int res = 4) {
  std::mt19937_64 eng(seed);
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  if (kind == mbs::Kind::unit_disks) {
    // radius 1: centre y in [1, 2k - 1)
    std::vector<mbs::DiskObj> v;
    for (std::size_t i = 0; i < n; ++i) {
      Rational x(draw(0, x_range * res), res);
      Rational y(draw(res, (2 * k - 1) * res - 1), res);
      v.push_back({{x, y}});
    }
    return GeometricInstance::make_disks(std::move(v));
  }
  // side 1: y_min in [0, k - 1)
  std::vector<mbs::RectObj> v;
  for (std::size_t i = 0; i < n; ++i) {
    Rational x(draw(0, x_range * res), res);
    Rational y(draw(0, (k - 1) * res - 1), res);
    v.push_back({x, x + 1, y, y + 1});
  }
  return GeometricInstance::make_rects(mbs::Kind::unit_squares, std::move(v));
}

// Positions of the disks sorted by centre x, ties by index.
inline std::vector<std::size_t> x_sorted(const GeometricInstance& inst) {
  std::vector<std::size_t> ord(inst.size());
  for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
  const auto& d = inst.disks();
  std::stable_sort(ord.begin(), ord.end(),
                   [&](std::size_t a, std::size_t b) { return d[a].center.x < d[b].center.x; });
  return ord;
}

// True when the subset induces a single cycle.
inline bool induces_cycle(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  if (std::popcount(s) < 3) return false;
  for (std::uint32_t m = s; m; m &= m - 1) {
    if (std::popcount(adj[std::countr_zero(m)] & s) != 2) return false;
  }
  // 2-regular: a cycle iff connected
  std::uint32_t seen = s & -s, frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t m = frontier; m; m &= m - 1) next |= adj[std::countr_zero(m)] & s;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == s;
}

inline std::size_t longest_induced_cycle(const std::vector<std::uint32_t>& adj) {
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << adj.size()); ++s) {
    auto c = static_cast<std::size_t>(std::popcount(s));
    if (c > best && induces_cycle(adj, s)) best = c;
  }
  return best;
}

// Does some vertex have four pairwise non-adjacent neighbours?
inline bool has_claw4(const std::vector<std::uint32_t>& adj) {
  const std::size_t n = adj.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> nb;
    for (std::size_t v = 0; v < n; ++v)
      if (adj[c] >> v & 1) nb.push_back(v);
    const std::size_t m = nb.size();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        if (adj[nb[a]] >> nb[b] & 1) continue;
        for (std::size_t e = b + 1; e < m; ++e) {
          if ((adj[nb[e]] >> nb[a] & 1) || (adj[nb[e]] >> nb[b] & 1)) continue;
          for (std::size_t f = e + 1; f < m; ++f) {
            std::uint32_t others = (1u << nb[a]) | (1u << nb[b]) | (1u << nb[e]);
            if (!(adj[nb[f]] & others)) return true;
          }
        }
      }
  }
  return false;
}

// Does the 4-set induce a K1,3?
inline bool is_claw3(const std::vector<std::uint32_t>& adj, const std::array<std::size_t, 4>& q) {
  for (int c = 0; c < 4; ++c) {
    bool ok = true;
    for (int a = 0; a < 4 && ok; ++a) {
      if (a == c) continue;
      if (!(adj[q[c]] >> q[a] & 1)) ok = false;
      for (int b = a + 1; b < 4 && ok; ++b) {
        if (b != c && (adj[q[a]] >> q[b] & 1)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace mbs_test
