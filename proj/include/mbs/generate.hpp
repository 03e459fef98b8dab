#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mbs/error.hpp"
#include "mbs/geometry.hpp"

namespace mbs {

enum class DiskMode { general, one_sided, two_sided };

inline DiskMode parse_disk_mode(std::string_view s) {
  if (s == "general") return DiskMode::general;
  if (s == "one_sided" || s == "one-sided") return DiskMode::one_sided;
  if (s == "two_sided" || s == "two-sided") return DiskMode::two_sided;
  throw ValidationError("unknown disk mode '" + std::string(s) + "'");
}

struct GeneratorParams {
  Kind kind = Kind::intervals;
  std::size_t n = 8;
  std::uint64_t seed = 1;
  /// Coordinates range over [0, spread]; defaults to a value that gives
  /// moderately dense scenes for the kind and n.
  std::optional<Rational> spread;
  /// Coordinates are multiples of 1/resolution (arcs: of 1/(resolution*n)).
  std::int64_t resolution = 8;
  /// Longest interval / rectangle side; for arcs, longest arc as a turn fraction.
  std::optional<Rational> max_length;
  Rational radius = 1;
  DiskMode disk_mode = DiskMode::general;
};

namespace gen_detail {

/// Platform-independent draws on top of mt19937_64 (std distributions are
/// implementation-defined).
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : eng_(seed) {}
  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(eng_() % span);
  }

 private:
  std::mt19937_64 eng_;
};

inline std::int64_t grid_steps(const Rational& length, std::int64_t res) {
  return std::max<std::int64_t>(1, floor_to_int64(length * res));
}

}  // namespace gen_detail

/// Deterministic pseudo-random scene: same params, same scene.
inline GeometricInstance generate(const GeneratorParams& p) {
  if (p.n < 1) throw ValidationError("n must be >= 1");
  if (p.resolution < 1) throw ValidationError("resolution must be >= 1");
  if (p.radius <= 0) throw ValidationError("radius must be > 0");
  gen_detail::Stream rng(p.seed);
  const auto n = static_cast<std::int64_t>(p.n);
  const std::int64_t res = p.resolution;
  auto grid = [&](std::int64_t steps) { return Rational(steps, res); };

  switch (p.kind) {
    case Kind::intervals: {
      Rational spread = p.spread.value_or(Rational(n + 2, 2));
      Rational max_len = p.max_length.value_or(Rational(3));
      std::int64_t range = gen_detail::grid_steps(spread, res);
      std::int64_t len = gen_detail::grid_steps(max_len, res);
      if (range + len + 1 < 2 * n) throw ValidationError("spread too small for distinct endpoints");
      std::set<std::int64_t> used;
      std::vector<IntervalObj> v;
      for (std::int64_t tries = 0; static_cast<std::int64_t>(v.size()) < n; ++tries) {
        if (tries > 1000 * n) throw ValidationError("spread too small for distinct endpoints");
        std::int64_t a = rng.between(0, range);
        std::int64_t b = a + rng.between(1, len);
        if (used.count(a) || used.count(b)) continue;
        used.insert(a);
        used.insert(b);
        v.push_back({grid(a), grid(b)});
      }
      return GeometricInstance::make_intervals(std::move(v));
    }
    case Kind::arcs: {
      const std::int64_t turn = res * n;
      Rational max_len = p.max_length.value_or(Rational(2, 5));
      std::int64_t len = std::min(turn - 1, gen_detail::grid_steps(max_len * turn, 1));
      std::vector<ArcObj> v;
      for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t s = rng.between(0, turn - 1);
        std::int64_t e = (s + rng.between(1, len)) % turn;
        v.push_back({Rational(s, turn), Rational(e, turn)});
      }
      return GeometricInstance::make_arcs(std::move(v));
    }
    case Kind::unit_disks: {
      const Rational& r = p.radius;
      Rational spread = p.spread.value_or(r * (n + 2) / 2);
      std::int64_t range = gen_detail::grid_steps(spread, res);
      std::vector<DiskObj> v;
      for (std::int64_t i = 0; i < n; ++i) {
        Rational x = grid(rng.between(0, range));
        Rational y;
        switch (p.disk_mode) {
          case DiskMode::general: y = grid(rng.between(0, range)); break;
          case DiskMode::one_sided: y = r * rng.between(0, res) / res; break;
          case DiskMode::two_sided: y = r * rng.between(-res, res) / res; break;
        }
        v.push_back({{x, y}});
      }
      return GeometricInstance::make_disks(std::move(v), r);
    }
    case Kind::unit_squares:
    case Kind::unit_height_rects:
    case Kind::rects: {
      Rational spread = p.spread.value_or(Rational(n + 2, 2));
      Rational max_len = p.max_length.value_or(Rational(2));
      std::int64_t range = gen_detail::grid_steps(spread, res);
      std::int64_t len = gen_detail::grid_steps(max_len, res);
      std::vector<RectObj> v;
      for (std::int64_t i = 0; i < n; ++i) {
        Rational x = grid(rng.between(0, range));
        Rational y = grid(rng.between(0, range));
        Rational w = p.kind == Kind::unit_squares ? Rational(1) : grid(rng.between(1, len));
        Rational h = p.kind == Kind::rects ? grid(rng.between(1, len)) : Rational(1);
        v.push_back({x, x + w, y, y + h});
      }
      return GeometricInstance::make_rects(p.kind, std::move(v));
    }
  }
  throw ValidationError("unsupported kind");
}

}  // namespace mbs
