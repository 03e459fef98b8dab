#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mbs/error.hpp"
#include "mbs/rational.hpp"

namespace mbs {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Closed interval [left, right] with left < right.
struct IntervalObj {
  Rational left;
  Rational right;
  friend bool operator==(const IntervalObj&, const IntervalObj&) = default;
};

/// Closed arc of the unit circle swept clockwise from `start` to `end`.
/// Angles are fractions of a full turn in [0, 1); clockwise means increasing
/// angle modulo 1.
struct ArcObj {
  Rational start;
  Rational end;
  friend bool operator==(const ArcObj&, const ArcObj&) = default;
};

/// Disk of the scene-global radius centred at `center`.
struct DiskObj {
  Point center;
  friend bool operator==(const DiskObj&, const DiskObj&) = default;
};

struct RectObj {
  Rational x_min;
  Rational x_max;
  Rational y_min;
  Rational y_max;
  friend bool operator==(const RectObj&, const RectObj&) = default;
};

enum class Kind { intervals, arcs, unit_disks, unit_squares, unit_height_rects, rects };

inline std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::intervals: return "intervals";
    case Kind::arcs: return "arcs";
    case Kind::unit_disks: return "unit_disks";
    case Kind::unit_squares: return "unit_squares";
    case Kind::unit_height_rects: return "unit_height_rects";
    case Kind::rects: return "rects";
  }
  return "?";
}

inline Kind parse_kind(std::string_view s) {
  for (Kind k : {Kind::intervals, Kind::arcs, Kind::unit_disks, Kind::unit_squares,
                 Kind::unit_height_rects, Kind::rects}) {
    if (kind_name(k) == s) return k;
  }
  throw ValidationError("unknown kind '" + std::string(s) + "'");
}

inline bool is_rect_kind(Kind k) {
  return k == Kind::unit_squares || k == Kind::unit_height_rects || k == Kind::rects;
}

/// A scene of objects of one kind. The payload alternative must match the
/// kind; `validate()` enforces this together with the per-kind shape rules.
struct GeometricInstance {
  using Payload = std::variant<std::vector<IntervalObj>, std::vector<ArcObj>,
                               std::vector<DiskObj>, std::vector<RectObj>>;

  Kind kind = Kind::intervals;
  Payload objects = std::vector<IntervalObj>{};
  Rational disk_radius = 1;

  static GeometricInstance make_intervals(std::vector<IntervalObj> v) {
    return {Kind::intervals, std::move(v), 1};
  }
  static GeometricInstance make_arcs(std::vector<ArcObj> v) {
    return {Kind::arcs, std::move(v), 1};
  }
  static GeometricInstance make_disks(std::vector<DiskObj> v, Rational radius = 1) {
    return {Kind::unit_disks, std::move(v), std::move(radius)};
  }
  static GeometricInstance make_rects(Kind kind, std::vector<RectObj> v) {
    return {kind, std::move(v), 1};
  }

  std::size_t size() const {
    return std::visit([](const auto& v) { return v.size(); }, objects);
  }
  bool empty() const { return size() == 0; }

  const std::vector<IntervalObj>& intervals() const { return get<IntervalObj>(); }
  const std::vector<ArcObj>& arcs() const { return get<ArcObj>(); }
  const std::vector<DiskObj>& disks() const { return get<DiskObj>(); }
  const std::vector<RectObj>& rects() const { return get<RectObj>(); }

  friend bool operator==(const GeometricInstance&, const GeometricInstance&) = default;

 private:
  template <class T>
  const std::vector<T>& get() const {
    const auto* p = std::get_if<std::vector<T>>(&objects);
    if (p == nullptr) {
      throw ValidationError("instance of kind " + std::string(kind_name(kind)) +
                            " does not hold the requested object type");
    }
    return *p;
  }
};

/// Throws ValidationError unless the instance is well formed for its kind.
inline void validate(const GeometricInstance& inst) {
  auto fail = [&](std::size_t i, const std::string& what) {
    throw ValidationError(std::string(kind_name(inst.kind)) + " object " + std::to_string(i) +
                          ": " + what);
  };
  switch (inst.kind) {
    case Kind::intervals: {
      const auto& v = inst.intervals();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i].left < v[i].right)) fail(i, "left must be < right");
      }
      break;
    }
    case Kind::arcs: {
      const auto& v = inst.arcs();
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (const Rational* a : {&v[i].start, &v[i].end}) {
          if (*a < 0 || *a >= 1) fail(i, "angle outside [0, 1)");
        }
        if (v[i].start == v[i].end) fail(i, "start == end");
      }
      break;
    }
    case Kind::unit_disks: {
      (void)inst.disks();
      if (inst.disk_radius <= 0) throw ValidationError("disk_radius must be > 0");
      break;
    }
    case Kind::unit_squares:
    case Kind::unit_height_rects:
    case Kind::rects: {
      const auto& v = inst.rects();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i].x_min < v[i].x_max) || !(v[i].y_min < v[i].y_max)) {
          fail(i, "empty extent");
        }
        if (inst.kind != Kind::rects && v[i].y_max - v[i].y_min != 1) fail(i, "height != 1");
        if (inst.kind == Kind::unit_squares && v[i].x_max - v[i].x_min != 1) {
          fail(i, "width != 1");
        }
      }
      break;
    }
  }
}

inline void require_nonempty(const GeometricInstance& inst) {
  if (inst.empty()) throw ValidationError("instance has no objects");
}

// Closed-object intersection predicates. Tangency counts as intersection.

inline bool intersects(const IntervalObj& a, const IntervalObj& b) {
  return a.left <= b.right && b.left <= a.right;
}

/// True iff angle `p` lies on the closed clockwise sweep of `a`.
inline bool arc_contains(const ArcObj& a, const Rational& p) {
  if (a.start < a.end) return a.start <= p && p <= a.end;
  return p >= a.start || p <= a.end;
}

/// Two proper arcs meet iff one of them contains the other's start.
inline bool intersects(const ArcObj& a, const ArcObj& b) {
  return arc_contains(a, b.start) || arc_contains(b, a.start);
}

inline Rational squared_distance(const Point& a, const Point& b) {
  Rational dx = a.x - b.x;
  Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline bool disks_intersect(const Point& a, const Point& b, const Rational& radius) {
  Rational diameter = 2 * radius;
  return squared_distance(a, b) <= diameter * diameter;
}

inline bool intersects(const RectObj& a, const RectObj& b) {
  return a.x_min <= b.x_max && b.x_min <= a.x_max && a.y_min <= b.y_max &&
         b.y_min <= a.y_max;
}

/// Objects `i` and `j` of the instance intersect.
inline bool objects_intersect(const GeometricInstance& inst, std::size_t i, std::size_t j) {
  switch (inst.kind) {
    case Kind::intervals: return intersects(inst.intervals()[i], inst.intervals()[j]);
    case Kind::arcs: return intersects(inst.arcs()[i], inst.arcs()[j]);
    case Kind::unit_disks:
      return disks_intersect(inst.disks()[i].center, inst.disks()[j].center, inst.disk_radius);
    default: return intersects(inst.rects()[i], inst.rects()[j]);
  }
}

/// Copy of the instance restricted to `indices`, in that order.
inline GeometricInstance subinstance(const GeometricInstance& inst,
                                     const std::vector<std::size_t>& indices) {
  GeometricInstance out{inst.kind, {}, inst.disk_radius};
  std::visit(
      [&](const auto& v) {
        std::remove_cvref_t<decltype(v)> picked;
        picked.reserve(indices.size());
        for (std::size_t i : indices) {
          if (i >= v.size()) throw ValidationError("index out of range");
          picked.push_back(v[i]);
        }
        out.objects = std::move(picked);
      },
      inst.objects);
  return out;
}

inline GeometricInstance translate(const GeometricInstance& inst, const Rational& dx,
                                   const Rational& dy) {
  GeometricInstance out = inst;
  switch (inst.kind) {
    case Kind::intervals:
      for (auto& o : std::get<std::vector<IntervalObj>>(out.objects)) {
        o.left += dx;
        o.right += dx;
      }
      break;
    case Kind::arcs:
      // Rotation by dx turns (mod 1).
      for (auto& o : std::get<std::vector<ArcObj>>(out.objects)) {
        for (Rational* a : {&o.start, &o.end}) {
          *a += dx;
          *a -= Rational(floor_big(*a));
        }
      }
      break;
    case Kind::unit_disks:
      for (auto& o : std::get<std::vector<DiskObj>>(out.objects)) {
        o.center.x += dx;
        o.center.y += dy;
      }
      break;
    default:
      for (auto& o : std::get<std::vector<RectObj>>(out.objects)) {
        o.x_min += dx;
        o.x_max += dx;
        o.y_min += dy;
        o.y_max += dy;
      }
      break;
  }
  return out;
}

}  // namespace mbs
