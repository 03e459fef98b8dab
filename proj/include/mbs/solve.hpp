#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mbs/circular_arc_solver.hpp"
#include "mbs/error.hpp"
#include "mbs/geometry.hpp"
#include "mbs/graph.hpp"
#include "mbs/interval_solver.hpp"
#include "mbs/oracle.hpp"
#include "mbs/rect_solver.hpp"
#include "mbs/shifting_ptas.hpp"
#include "mbs/unit_disk_general.hpp"
#include "mbs/unit_disk_line.hpp"

namespace mbs {

enum class Algorithm { automatic, interval, arc, one_sided, two_sided, three_approx, logn, ptas, unit_height, exact };

inline std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::automatic: return "auto";
    case Algorithm::interval: return "interval";
    case Algorithm::arc: return "arc";
    case Algorithm::one_sided: return "one-sided";
    case Algorithm::two_sided: return "two-sided";
    case Algorithm::three_approx: return "3approx";
    case Algorithm::logn: return "logn";
    case Algorithm::ptas: return "ptas";
    case Algorithm::unit_height: return "unit-height";
    case Algorithm::exact: return "exact";
  }
  return "?";
}

inline Algorithm parse_algorithm(std::string_view s) {
  for (Algorithm a : {Algorithm::automatic, Algorithm::interval, Algorithm::arc, Algorithm::one_sided,
                      Algorithm::two_sided, Algorithm::three_approx, Algorithm::logn, Algorithm::ptas,
                      Algorithm::unit_height, Algorithm::exact}) {
    if (algorithm_name(a) == s) return a;
  }
  throw ValidationError("unknown algorithm '" + std::string(s) + "'");
}

struct SolveParams {
  /// Horizontal stabbing line for the line-based disk algorithms; chosen
  /// automatically when absent.
  std::optional<Rational> line_y;
  Rational epsilon = Rational(1, 2);
  bool perturb = false;
  OracleOptions oracle;
  PtasOptions ptas;
};

struct SolveResult {
  Algorithm algorithm = Algorithm::automatic;
  Solution solution;
  std::optional<Rational> weight;
};

namespace solve_detail {

inline std::pair<Rational, Rational> center_y_range(const GeometricInstance& inst) {
  Rational lo = inst.disks().front().center.y, hi = lo;
  for (const auto& d : inst.disks()) {
    lo = std::min(lo, d.center.y);
    hi = std::max(hi, d.center.y);
  }
  return {lo, hi};
}

}  // namespace solve_detail

/// Strongest algorithm applicable to the scene.
inline Algorithm choose_algorithm(const GeometricInstance& inst, const SolveParams& p) {
  switch (inst.kind) {
    case Kind::intervals: return Algorithm::interval;
    case Kind::arcs: return Algorithm::arc;
    case Kind::unit_squares:
    case Kind::unit_height_rects: return Algorithm::unit_height;
    case Kind::rects: return Algorithm::exact;
    case Kind::unit_disks: {
      if (inst.empty()) return Algorithm::three_approx;
      auto [lo, hi] = solve_detail::center_y_range(inst);
      const Rational& r = inst.disk_radius;
      if (p.line_y) {
        bool stabbed = *p.line_y - lo <= r && hi - *p.line_y <= r;
        if (stabbed && lo >= *p.line_y) return Algorithm::one_sided;
        if (stabbed) return Algorithm::two_sided;
        return Algorithm::three_approx;
      }
      if (hi - lo <= r) return Algorithm::one_sided;
      if (hi - lo <= 2 * r) return Algorithm::two_sided;
      return Algorithm::three_approx;
    }
  }
  return Algorithm::exact;
}

inline Rational default_line(const GeometricInstance& inst, Algorithm a) {
  auto [lo, hi] = solve_detail::center_y_range(inst);
  return a == Algorithm::one_sided ? lo : (lo + hi) / 2;
}

inline SolveResult run_algorithm(const GeometricInstance& inst, Algorithm algo,
                                 const SolveParams& p = {},
                                 std::span<const Rational> weights = {}) {
  validate(inst);
  SolveResult res;
  res.algorithm = algo == Algorithm::automatic ? choose_algorithm(inst, p) : algo;
  switch (res.algorithm) {
    case Algorithm::interval:
      res.solution = solve_intervals(inst, IntervalOptions{.presorted = false, .perturb = p.perturb});
      break;
    case Algorithm::arc: res.solution = solve_arcs(inst); break;
    case Algorithm::one_sided:
    case Algorithm::two_sided: {
      require_nonempty(inst);
      Rational line = p.line_y.value_or(default_line(inst, res.algorithm));
      res.solution = res.algorithm == Algorithm::one_sided ? solve_one_sided(inst, line)
                                                           : solve_two_sided(inst, line);
      break;
    }
    case Algorithm::three_approx: res.solution = solve_3approx(inst); break;
    case Algorithm::logn: res.solution = solve_logn(inst); break;
    case Algorithm::ptas: {
      auto r = solve_ptas_detailed(inst, p.epsilon, weights, p.ptas);
      res.solution = std::move(r.best.solution);
      if (!weights.empty()) res.weight = r.best.weight;
      break;
    }
    case Algorithm::unit_height: res.solution = solve_unit_height(inst); break;
    case Algorithm::exact: res.solution = exact_mbs(build_intersection_graph(inst), p.oracle); break;
    case Algorithm::automatic: break;
  }
  return res;
}

/// True when `size` meets the algorithm's proven guarantee against the
/// optimum `opt` of an n-object scene.
inline bool within_guarantee(Algorithm a, std::size_t size, std::size_t opt, std::size_t n,
                             const Rational& epsilon = Rational(1, 2)) {
  if (size > opt) return false;
  switch (a) {
    case Algorithm::interval:
    case Algorithm::one_sided:
    case Algorithm::exact: return size == opt;
    case Algorithm::arc: return size + 1 >= opt;
    case Algorithm::two_sided:
    case Algorithm::unit_height: return 2 * size >= opt;
    case Algorithm::three_approx: return 3 * size >= opt;
    case Algorithm::logn: return logn_factor(n) * static_cast<double>(size) >= static_cast<double>(opt);
    case Algorithm::ptas: {
      auto k = static_cast<std::size_t>(shifting_k(epsilon));
      return k * size >= (k - 1) * opt;
    }
    case Algorithm::automatic: return false;
  }
  return false;
}

}  // namespace mbs
