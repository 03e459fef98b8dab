#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mbs/error.hpp"
#include "mbs/geometry.hpp"
#include "mbs/graph.hpp"
#include "mbs/rational.hpp"

namespace mbs {

using Json = nlohmann::ordered_json;

/// An instance plus the optional per-object weights stored alongside it.
struct InstanceFile {
  GeometricInstance instance;
  std::vector<Rational> weights;
  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

struct SolutionFile {
  Kind kind = Kind::intervals;
  std::string algorithm;
  Solution solution;
  std::optional<Rational> weight;
};

namespace io_detail {

inline Rational rational_field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  const Json& v = obj.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw ValidationError(std::string("field '") + key + "' must be a rational string or integer");
}

inline Rational rational_value(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw ValidationError("expected a rational string or integer");
}

inline Json str(const Rational& q) { return format_rational(q); }

}  // namespace io_detail

inline Json instance_to_json(const InstanceFile& file) {
  using io_detail::str;
  const auto& inst = file.instance;
  Json j;
  j["kind"] = std::string(kind_name(inst.kind));
  if (inst.kind == Kind::unit_disks) j["disk_radius"] = str(inst.disk_radius);
  Json objs = Json::array();
  switch (inst.kind) {
    case Kind::intervals:
      for (const auto& o : inst.intervals()) objs.push_back({{"left", str(o.left)}, {"right", str(o.right)}});
      break;
    case Kind::arcs:
      for (const auto& o : inst.arcs()) objs.push_back({{"start", str(o.start)}, {"end", str(o.end)}});
      break;
    case Kind::unit_disks:
      for (const auto& o : inst.disks()) objs.push_back({{"x", str(o.center.x)}, {"y", str(o.center.y)}});
      break;
    default:
      for (const auto& o : inst.rects()) {
        objs.push_back({{"x_min", str(o.x_min)}, {"x_max", str(o.x_max)},
                        {"y_min", str(o.y_min)}, {"y_max", str(o.y_max)}});
      }
      break;
  }
  j["objects"] = std::move(objs);
  if (!file.weights.empty()) {
    Json w = Json::array();
    for (const auto& q : file.weights) w.push_back(str(q));
    j["weights"] = std::move(w);
  }
  return j;
}

inline InstanceFile instance_from_json(const Json& j) {
  using io_detail::rational_field;
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ValidationError("instance needs a string 'kind'");
  }
  if (!j.contains("objects") || !j.at("objects").is_array()) {
    throw ValidationError("instance needs an 'objects' array");
  }
  InstanceFile file;
  auto& inst = file.instance;
  inst.kind = parse_kind(j.at("kind").get<std::string>());
  const Json& objs = j.at("objects");
  switch (inst.kind) {
    case Kind::intervals: {
      std::vector<IntervalObj> v;
      for (const auto& o : objs) v.push_back({rational_field(o, "left"), rational_field(o, "right")});
      inst.objects = std::move(v);
      break;
    }
    case Kind::arcs: {
      std::vector<ArcObj> v;
      for (const auto& o : objs) v.push_back({rational_field(o, "start"), rational_field(o, "end")});
      inst.objects = std::move(v);
      break;
    }
    case Kind::unit_disks: {
      inst.disk_radius = rational_field(j, "disk_radius");
      std::vector<DiskObj> v;
      for (const auto& o : objs) v.push_back({{rational_field(o, "x"), rational_field(o, "y")}});
      inst.objects = std::move(v);
      break;
    }
    default: {
      std::vector<RectObj> v;
      for (const auto& o : objs) {
        v.push_back({rational_field(o, "x_min"), rational_field(o, "x_max"),
                     rational_field(o, "y_min"), rational_field(o, "y_max")});
      }
      inst.objects = std::move(v);
      break;
    }
  }
  if (j.contains("weights")) {
    if (!j.at("weights").is_array()) throw ValidationError("'weights' must be an array");
    for (const auto& w : j.at("weights")) file.weights.push_back(io_detail::rational_value(w));
    if (file.weights.size() != inst.size()) throw ValidationError("one weight per object required");
    for (const auto& w : file.weights) {
      if (w < 0) throw ValidationError("weights must be nonnegative");
    }
  }
  validate(inst);
  return file;
}

inline Json solution_to_json(const SolutionFile& f) {
  Json j;
  j["kind"] = std::string(kind_name(f.kind));
  j["algorithm"] = f.algorithm;
  j["size"] = f.solution.size();
  j["selected"] = f.solution.selected;
  if (f.solution.coloring) j["coloring"] = *f.solution.coloring;
  if (f.weight) j["weight"] = format_rational(*f.weight);
  return j;
}

inline SolutionFile solution_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("selected") || !j.at("selected").is_array()) {
    throw ValidationError("solution needs a 'selected' array");
  }
  SolutionFile f;
  if (j.contains("kind")) f.kind = parse_kind(j.at("kind").get<std::string>());
  if (j.contains("algorithm")) f.algorithm = j.at("algorithm").get<std::string>();
  for (const auto& v : j.at("selected")) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      throw ValidationError("selected entries must be nonnegative integers");
    }
    f.solution.selected.push_back(v.get<std::size_t>());
  }
  if (j.contains("coloring")) {
    if (!j.at("coloring").is_array()) throw ValidationError("'coloring' must be an array");
    std::vector<int> c;
    for (const auto& v : j.at("coloring")) {
      if (!v.is_number_integer()) throw ValidationError("coloring entries must be 0 or 1");
      c.push_back(v.get<int>());
    }
    f.solution.coloring = std::move(c);
  }
  if (j.contains("size")) {
    if (!j.at("size").is_number_integer() || j.at("size").get<std::size_t>() != f.solution.size()) {
      throw ValidationError("'size' does not match the number of selected objects");
    }
  }
  if (j.contains("weight")) f.weight = io_detail::rational_value(j.at("weight"));
  return f;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse '" + path + "': " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
}

inline InstanceFile load_instance(const std::string& path) {
  try {
    return instance_from_json(read_json_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("malformed instance '" + path + "': " + e.what());
  }
}

inline SolutionFile load_solution(const std::string& path) {
  try {
    return solution_from_json(read_json_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("malformed solution '" + path + "': " + e.what());
  }
}

}  // namespace mbs
