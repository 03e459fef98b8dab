#pragma once

#include <variant>

#include "mbs/geometry.hpp"

namespace mbs {

/// Every object duplicated in place: object i keeps index i and its copy
/// gets index i + n. With closed intersection a copy meets its original and
/// everything the original meets, so the intersection graph is the doubled
/// graph used to transfer MIS hardness to MBS: MBS(double) = 2 * MIS(original).
inline GeometricInstance double_instance(const GeometricInstance& inst) {
  GeometricInstance out = inst;
  std::visit(
      [](auto& v) {
        const std::size_t n = v.size();
        v.reserve(2 * n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(v[i]);
      },
      out.objects);
  return out;
}

}  // namespace mbs
