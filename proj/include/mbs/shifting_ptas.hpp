#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mbs/error.hpp"
#include "mbs/geometry.hpp"
#include "mbs/graph.hpp"
#include "mbs/oracle.hpp"

namespace mbs {

struct PtasOptions {
  /// Largest number of objects whose centres may share one box.
  std::size_t box_cap = 16;
};

/// Centres and half-extent of a scene of equal-size disks or unit squares.
/// Two objects whose centres differ by more than one diameter in x (or in
/// y) never intersect.
struct PackingScene {
  std::vector<Point> centers;
  Rational half;
  IntersectionGraph graph;

  Rational diameter() const { return 2 * half; }
  Rational bottom(std::size_t i) const { return centers[i].y - half; }
  Rational top(std::size_t i) const { return centers[i].y + half; }
};

inline PackingScene packing_scene(const GeometricInstance& inst) {
  validate(inst);
  PackingScene s;
  if (inst.kind == Kind::unit_disks) {
    s.half = inst.disk_radius;
    for (const auto& d : inst.disks()) s.centers.push_back(d.center);
  } else if (inst.kind == Kind::unit_squares) {
    s.half = Rational(1, 2);
    for (const auto& r : inst.rects()) s.centers.push_back({r.x_min + s.half, r.y_min + s.half});
  } else {
    throw ValidationError("the shifting scheme needs unit_disks or unit_squares");
  }
  s.graph = build_intersection_graph(inst);
  return s;
}

/// One vertex of the slab DAG: a subset of one box's objects with a proper
/// 2-coloring. Masks are over the box-local object list.
struct ColoredFeasibleSet {
  std::size_t box = 0;  // position in SlabDag::boxes
  std::uint32_t members = 0;
  std::uint32_t color1 = 0;
  Rational weight;
};

/// Vertex-weighted DAG over colored feasible sets, ordered by box. Source
/// and target are implicit: s precedes and t follows every vertex. An edge
/// runs from a set in box i to a set in box j > i when j > i + 1, or when
/// j = i + 1 and the two colorings agree on every edge between them.
struct SlabDag {
  std::vector<std::int64_t> box_index;              // sorted, nonempty boxes only
  std::vector<std::vector<std::size_t>> box_items;  // box -> scene indices
  std::vector<ColoredFeasibleSet> vertices;          // grouped by box, in order
  std::vector<std::size_t> box_begin;                // vertices of box b: [begin[b], begin[b+1])
  /// cross[b][p]: mask over box b+1 of the neighbours of local object p of
  /// box b (empty unless the boxes are consecutive).
  std::vector<std::vector<std::uint32_t>> cross;

  bool consecutive(std::size_t b) const { return box_index[b + 1] == box_index[b] + 1; }

  bool compatible(const ColoredFeasibleSet& u, const ColoredFeasibleSet& v) const {
    for (std::uint32_t m = u.members; m; m &= m - 1) {
      int p = std::countr_zero(m);
      std::uint32_t hit = cross[u.box][p] & v.members;
      std::uint32_t same = (u.color1 >> p & 1) ? (hit & v.color1) : (hit & ~v.color1);
      if (same) return false;
    }
    return true;
  }

  bool has_edge(std::size_t a, std::size_t b) const {
    const auto& u = vertices[a];
    const auto& v = vertices[b];
    if (v.box <= u.box) return false;
    if (box_index[v.box] > box_index[u.box] + 1) return true;
    return compatible(u, v);
  }
};

namespace ptas_detail {

/// All proper 2-colorings of every bipartite subset of `adj` (local masks).
inline void enumerate_colored_sets(const std::vector<std::uint64_t>& adj, std::size_t box,
                                   const std::vector<Rational>& item_weight,
                                   std::vector<ColoredFeasibleSet>& out) {
  const std::size_t m = adj.size();
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << m) - 1);
  std::vector<Rational> w(std::size_t{1} << m);
  for (std::uint32_t s = 1; s <= full && m > 0; ++s) {
    w[s] = w[s & (s - 1)] + item_weight[std::countr_zero(s)];
  }
  for (std::uint64_t s64 = 0; s64 <= full; ++s64) {
    auto s = static_cast<std::uint32_t>(s64);
    std::uint64_t ones = 0;
    if (oracle_detail::odd_cycle_witness(adj, s, &ones) != 0) continue;
    // Connected components, each of which may be flipped independently.
    std::vector<std::uint32_t> comps;
    std::uint32_t left = s;
    while (left) {
      std::uint32_t comp = left & -left;
      std::uint32_t frontier = comp;
      while (frontier) {
        std::uint32_t grow = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) {
          grow |= static_cast<std::uint32_t>(adj[std::countr_zero(f)]) & s;
        }
        frontier = grow & ~comp;
        comp |= grow;
      }
      comps.push_back(comp);
      left &= ~comp;
    }
    for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << comps.size()); ++flips) {
      std::uint32_t c1 = static_cast<std::uint32_t>(ones);
      for (std::size_t q = 0; q < comps.size(); ++q) {
        if (flips >> q & 1) c1 ^= comps[q];
      }
      out.push_back({box, s, c1, w[s]});
    }
  }
}

}  // namespace ptas_detail

/// Builds the DAG for the scene objects `items`, splitting them into boxes
/// of width one diameter by centre x.
inline SlabDag build_slab_dag(const PackingScene& scene, const std::vector<std::size_t>& items,
                              std::span<const Rational> weights, const PtasOptions& opt = {}) {
  SlabDag dag;
  if (opt.box_cap > 24) throw ValidationError("box_cap above 24 is not supported");
  if (items.empty()) {
    dag.box_begin = {0};
    return dag;
  }
  Rational a = scene.centers[items.front()].x;
  for (std::size_t i : items) a = std::min(a, scene.centers[i].x);
  std::map<std::int64_t, std::vector<std::size_t>> boxes;
  for (std::size_t i : items) {
    boxes[floor_to_int64((scene.centers[i].x - a) / scene.diameter())].push_back(i);
  }
  for (auto& [b, v] : boxes) {
    if (v.size() > opt.box_cap) {
      throw CapacityError("box holds " + std::to_string(v.size()) + " objects, cap is " +
                          std::to_string(opt.box_cap));
    }
    std::sort(v.begin(), v.end());
    dag.box_index.push_back(b);
    dag.box_items.push_back(v);
  }
  const std::size_t nb = dag.box_items.size();
  for (std::size_t b = 0; b < nb; ++b) {
    const auto& v = dag.box_items[b];
    std::vector<std::uint64_t> adj(v.size(), 0);
    std::vector<Rational> w(v.size(), Rational(1));
    for (std::size_t p = 0; p < v.size(); ++p) {
      if (!weights.empty()) w[p] = weights[v[p]];
      for (std::size_t q = 0; q < v.size(); ++q) {
        if (scene.graph.adjacent(v[p], v[q])) adj[p] |= std::uint64_t{1} << q;
      }
    }
    dag.box_begin.push_back(dag.vertices.size());
    ptas_detail::enumerate_colored_sets(adj, b, w, dag.vertices);
  }
  dag.box_begin.push_back(dag.vertices.size());
  dag.cross.resize(nb);
  for (std::size_t b = 0; b + 1 < nb; ++b) {
    const auto& here = dag.box_items[b];
    const auto& there = dag.box_items[b + 1];
    dag.cross[b].assign(here.size(), 0);
    if (!dag.consecutive(b)) continue;
    for (std::size_t p = 0; p < here.size(); ++p) {
      for (std::size_t q = 0; q < there.size(); ++q) {
        if (scene.graph.adjacent(here[p], there[q])) dag.cross[b][p] |= std::uint32_t{1} << q;
      }
    }
  }
  return dag;
}

/// Structural checks: vertices grouped by increasing box, masks within the
/// box, colorings proper. Edges only ever point to a later box, so a valid
/// grouping makes the graph acyclic.
inline bool verify_slab_dag(const SlabDag& dag, const PackingScene& scene) {
  if (!std::is_sorted(dag.box_index.begin(), dag.box_index.end())) return false;
  if (std::adjacent_find(dag.box_index.begin(), dag.box_index.end()) != dag.box_index.end()) return false;
  if (dag.box_begin.size() != dag.box_items.size() + 1) return false;
  for (std::size_t b = 0; b < dag.box_items.size(); ++b) {
    const auto& items = dag.box_items[b];
    for (std::size_t v = dag.box_begin[b]; v < dag.box_begin[b + 1]; ++v) {
      const auto& f = dag.vertices[v];
      if (f.box != b) return false;
      if (items.size() < 32 && (f.members >> items.size()) != 0) return false;
      if ((f.color1 & ~f.members) != 0) return false;
      for (std::uint32_t m = f.members; m; m &= m - 1) {
        int p = std::countr_zero(m);
        for (std::uint32_t o = f.members; o; o &= o - 1) {
          int q = std::countr_zero(o);
          if (scene.graph.adjacent(items[p], items[q]) &&
              ((f.color1 >> p) & 1) == ((f.color1 >> q) & 1)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

struct PathResult {
  Rational weight;
  std::vector<std::size_t> path;  // DAG vertex ids between s and t
};

/// Maximum-weight s-t path. Predecessors in the previous consecutive box are
/// grouped by their members and colors on the objects that touch the current
/// box, since only those decide the edge.
inline PathResult max_weight_path(const SlabDag& dag) {
  const std::size_t nv = dag.vertices.size();
  const std::size_t nb = dag.box_items.size();
  std::vector<Rational> best(nv);
  std::vector<long> pred(nv, -1);

  Rational far_best = 0;  // best over boxes at least two indices back (and s)
  long far_arg = -1;
  for (std::size_t b = 0; b < nb; ++b) {
    if (b >= 1 && !dag.consecutive(b - 1)) {
      for (std::size_t u = dag.box_begin[b - 1]; u < dag.box_begin[b]; ++u) {
        if (best[u] > far_best) far_best = best[u], far_arg = static_cast<long>(u);
      }
    }
    struct Group {
      std::uint32_t forbid_if_color1;  // neighbours of color-1 boundary members
      std::uint32_t forbid_if_color0;
      Rational value;
      long arg;
    };
    std::vector<Group> groups;
    if (b >= 1 && dag.consecutive(b - 1)) {
      std::uint32_t boundary = 0;
      const auto& cr = dag.cross[b - 1];
      for (std::size_t p = 0; p < cr.size(); ++p) {
        if (cr[p]) boundary |= std::uint32_t{1} << p;
      }
      std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> index;
      for (std::size_t u = dag.box_begin[b - 1]; u < dag.box_begin[b]; ++u) {
        const auto& f = dag.vertices[u];
        auto key = std::make_pair(f.members & boundary, f.color1 & boundary);
        auto [it, fresh] = index.emplace(key, groups.size());
        if (fresh) {
          std::uint32_t f1 = 0, f0 = 0;
          for (std::uint32_t m = key.first; m; m &= m - 1) {
            int p = std::countr_zero(m);
            // A color-1 object forbids color-1 neighbours, and vice versa.
            ((key.second >> p) & 1 ? f1 : f0) |= cr[p];
          }
          groups.push_back({f1, f0, best[u], static_cast<long>(u)});
        } else if (best[u] > groups[it->second].value) {
          groups[it->second].value = best[u];
          groups[it->second].arg = static_cast<long>(u);
        }
      }
    }
    for (std::size_t v = dag.box_begin[b]; v < dag.box_begin[b + 1]; ++v) {
      const auto& f = dag.vertices[v];
      Rational in = far_best;
      long arg = far_arg;
      for (const auto& g : groups) {
        if ((g.forbid_if_color1 & f.members & f.color1) != 0) continue;
        if ((g.forbid_if_color0 & f.members & ~f.color1) != 0) continue;
        if (g.value > in) in = g.value, arg = g.arg;
      }
      best[v] = in + f.weight;
      pred[v] = arg;
    }
    if (b >= 1 && dag.consecutive(b - 1)) {
      for (std::size_t u = dag.box_begin[b - 1]; u < dag.box_begin[b]; ++u) {
        if (best[u] > far_best) far_best = best[u], far_arg = static_cast<long>(u);
      }
    }
  }

  PathResult res;
  res.weight = 0;
  long end = -1;
  for (std::size_t v = 0; v < nv; ++v) {
    if (best[v] > res.weight) res.weight = best[v], end = static_cast<long>(v);
  }
  for (long v = end; v >= 0; v = pred[v]) res.path.push_back(static_cast<std::size_t>(v));
  std::reverse(res.path.begin(), res.path.end());
  return res;
}

struct WeightedSolution {
  Solution solution;
  Rational weight;
};

namespace ptas_detail {

inline WeightedSolution solve_items(const PackingScene& scene, const std::vector<std::size_t>& items,
                                    std::span<const Rational> weights, const PtasOptions& opt) {
  SlabDag dag = build_slab_dag(scene, items, weights, opt);
  if (!verify_slab_dag(dag, scene)) throw std::logic_error("malformed slab DAG");
  PathResult path = max_weight_path(dag);
  std::vector<std::pair<std::size_t, int>> tagged;
  for (std::size_t v : path.path) {
    const auto& f = dag.vertices[v];
    const auto& box = dag.box_items[f.box];
    for (std::uint32_t m = f.members; m; m &= m - 1) {
      int p = std::countr_zero(m);
      tagged.emplace_back(box[p], static_cast<int>((f.color1 >> p) & 1));
    }
  }
  std::sort(tagged.begin(), tagged.end());
  WeightedSolution out;
  std::vector<int> colors;
  for (auto [i, c] : tagged) {
    out.solution.selected.push_back(i);
    colors.push_back(c);
  }
  out.solution.coloring = std::move(colors);
  out.weight = path.weight;
  return out;
}

inline void check_weights(const GeometricInstance& inst, std::span<const Rational> weights) {
  if (weights.empty()) return;
  if (weights.size() != inst.size()) throw ValidationError("one weight per object required");
  for (const auto& w : weights) {
    if (w < 0) throw ValidationError("weights must be nonnegative");
  }
}

}  // namespace ptas_detail

/// Exact (weighted) MBS of a scene lying inside the slab
/// [slab_bottom, slab_bottom + k * diameter). Every object must satisfy
/// bottom >= slab_bottom and top < slab_bottom + k * diameter.
inline WeightedSolution solve_slab(const GeometricInstance& inst, const Rational& slab_bottom,
                                   std::int64_t k, std::span<const Rational> weights = {},
                                   const PtasOptions& opt = {}) {
  if (k < 1) throw ValidationError("slab height k must be >= 1");
  PackingScene scene = packing_scene(inst);
  ptas_detail::check_weights(inst, weights);
  const Rational top = slab_bottom + scene.diameter() * k;
  std::vector<std::size_t> items;
  for (std::size_t i = 0; i < scene.centers.size(); ++i) {
    if (scene.bottom(i) < slab_bottom || scene.top(i) >= top) {
      throw ValidationError("object " + std::to_string(i) + " crosses the slab boundary");
    }
    items.push_back(i);
  }
  return ptas_detail::solve_items(scene, items, weights, opt);
}

/// Smallest integer k with 1/k <= epsilon.
inline std::int64_t shifting_k(const Rational& epsilon) {
  if (epsilon <= 0) throw ValidationError("epsilon must be > 0");
  BigInt k = ceil_big(1 / epsilon);
  return k.convert_to<std::int64_t>();
}

struct PtasResult {
  WeightedSolution best;
  std::int64_t k = 0;
  std::int64_t offset = 0;
};

/// Shifting scheme: for each of the k offsets of a grid of horizontal slabs
/// of height k diameters, drop objects crossing a slab boundary, solve each
/// slab exactly, and keep the heaviest union.
inline PtasResult solve_ptas_detailed(const GeometricInstance& inst, const Rational& epsilon,
                                      std::span<const Rational> weights = {},
                                      const PtasOptions& opt = {}) {
  PtasResult res;
  res.k = shifting_k(epsilon);
  PackingScene scene = packing_scene(inst);
  ptas_detail::check_weights(inst, weights);
  res.best.solution.coloring = std::vector<int>{};
  res.best.weight = 0;
  if (scene.centers.empty()) return res;

  const Rational d = scene.diameter();
  const Rational height = d * res.k;
  Rational origin = scene.bottom(0);
  for (std::size_t i = 1; i < scene.centers.size(); ++i) origin = std::min(origin, scene.bottom(i));

  bool have = false;
  for (std::int64_t s = 0; s < res.k; ++s) {
    const Rational base = origin + d * s;
    std::map<std::int64_t, std::vector<std::size_t>> slabs;
    for (std::size_t i = 0; i < scene.centers.size(); ++i) {
      std::int64_t m = floor_to_int64((scene.bottom(i) - base) / height);
      if (scene.top(i) < base + height * (m + 1)) slabs[m].push_back(i);
    }
    std::vector<std::pair<std::size_t, int>> tagged;
    Rational total = 0;
    for (const auto& [m, items] : slabs) {
      WeightedSolution part = ptas_detail::solve_items(scene, items, weights, opt);
      total += part.weight;
      for (std::size_t q = 0; q < part.solution.size(); ++q) {
        tagged.emplace_back(part.solution.selected[q], (*part.solution.coloring)[q]);
      }
    }
    if (!have || total > res.best.weight) {
      have = true;
      std::sort(tagged.begin(), tagged.end());
      Solution sol;
      std::vector<int> colors;
      for (auto [i, c] : tagged) {
        sol.selected.push_back(i);
        colors.push_back(c);
      }
      sol.coloring = std::move(colors);
      res.best = {std::move(sol), total};
      res.offset = s;
    }
  }
  return res;
}

inline Solution solve_ptas(const GeometricInstance& inst, const Rational& epsilon,
                           const PtasOptions& opt = {}) {
  return solve_ptas_detailed(inst, epsilon, {}, opt).best.solution;
}

inline WeightedSolution solve_ptas_weighted(const GeometricInstance& inst,
                                            std::span<const Rational> weights,
                                            const Rational& epsilon, const PtasOptions& opt = {}) {
  if (weights.size() != inst.size()) throw ValidationError("one weight per object required");
  return solve_ptas_detailed(inst, epsilon, weights, opt).best;
}

}  // namespace mbs
