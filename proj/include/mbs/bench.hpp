#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mbs/generate.hpp"
#include "mbs/io.hpp"
#include "mbs/oracle.hpp"
#include "mbs/solve.hpp"

namespace mbs {

struct BenchConfig {
  GeneratorParams generator;  // seed of the first instance; instance i uses seed + i
  std::size_t count = 10;
  bool with_oracle = true;
  std::vector<Algorithm> algorithms;  // empty: default suite for the kind
  SolveParams params;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct BenchRow {
  std::string instance_id;
  Algorithm algorithm = Algorithm::automatic;
  std::size_t n = 0;
  std::size_t size = 0;
  std::optional<std::size_t> optimum;
  std::optional<double> ratio;  // optimum / size
  std::optional<bool> within_guarantee;
  double time_ms = 0;
  std::string error;  // nonempty when the algorithm raised
};

struct BenchAggregate {
  Algorithm algorithm = Algorithm::automatic;
  std::size_t rows = 0;
  std::size_t rated = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  double max_ratio = 0;
  double mean_ratio = 0;
  std::size_t violations = 0;
  std::size_t errors = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchAggregate> aggregates;

  bool all_within_guarantee() const {
    for (const auto& a : aggregates) {
      if (a.violations || a.errors) return false;
    }
    return true;
  }
};

inline std::vector<Algorithm> default_suite(Kind kind, DiskMode mode) {
  switch (kind) {
    case Kind::intervals: return {Algorithm::interval};
    case Kind::arcs: return {Algorithm::arc};
    case Kind::unit_squares: return {Algorithm::unit_height, Algorithm::ptas};
    case Kind::unit_height_rects: return {Algorithm::unit_height};
    case Kind::rects: return {Algorithm::exact};
    case Kind::unit_disks:
      switch (mode) {
        case DiskMode::one_sided:
          return {Algorithm::one_sided, Algorithm::two_sided, Algorithm::three_approx, Algorithm::logn,
                  Algorithm::ptas};
        case DiskMode::two_sided:
          return {Algorithm::two_sided, Algorithm::three_approx, Algorithm::logn, Algorithm::ptas};
        case DiskMode::general: return {Algorithm::three_approx, Algorithm::logn, Algorithm::ptas};
      }
  }
  return {};
}

inline std::string format_bench_id(std::size_t i) {
  std::ostringstream s;
  s << "inst-" << std::setw(5) << std::setfill('0') << i;
  return s.str();
}

/// Generates the corpus, runs every algorithm on every instance and, when
/// enabled, compares against the exhaustive optimum.
inline BenchReport run_bench(const BenchConfig& cfg) {
  auto algos = cfg.algorithms.empty() ? default_suite(cfg.generator.kind, cfg.generator.disk_mode)
                                      : cfg.algorithms;
  SolveParams params = cfg.params;
  if (cfg.generator.kind == Kind::unit_disks && cfg.generator.disk_mode != DiskMode::general &&
      !params.line_y) {
    params.line_y = Rational(0);
  }

  std::vector<std::vector<BenchRow>> per_instance(cfg.count);
  auto work = [&](std::size_t i) {
    GeneratorParams gp = cfg.generator;
    gp.seed = cfg.generator.seed + i;
    GeometricInstance inst = generate(gp);
    std::optional<std::size_t> opt;
    if (cfg.with_oracle && inst.size() <= params.oracle.cap) {
      opt = exact_mbs(build_intersection_graph(inst), params.oracle).size();
    }
    for (Algorithm a : algos) {
      BenchRow row;
      row.instance_id = format_bench_id(i);
      row.algorithm = a;
      row.n = inst.size();
      row.optimum = opt;
      auto t0 = std::chrono::steady_clock::now();
      try {
        row.size = run_algorithm(inst, a, params).solution.size();
      } catch (const Error& e) {
        row.error = std::string(e.category()) + ": " + e.what();
      }
      row.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      if (opt && row.error.empty()) {
        row.ratio = row.size == 0 ? (*opt == 0 ? 1.0 : std::numeric_limits<double>::infinity())
                                  : static_cast<double>(*opt) / static_cast<double>(row.size);
        row.within_guarantee = within_guarantee(a, row.size, *opt, row.n, params.epsilon);
      }
      per_instance[i].push_back(std::move(row));
    }
  };

  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cfg.count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < cfg.count; ++i) work(i);
  } else {
    std::mutex mu;
    std::size_t next = 0;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        while (true) {
          std::size_t i;
          {
            std::lock_guard lock(mu);
            if (next >= cfg.count) return;
            i = next++;
          }
          work(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  BenchReport rep;
  for (auto& rows : per_instance) {
    for (auto& r : rows) rep.rows.push_back(std::move(r));
  }
  for (Algorithm a : algos) {
    BenchAggregate agg;
    agg.algorithm = a;
    double sum = 0;
    for (const auto& r : rep.rows) {
      if (r.algorithm != a) continue;
      ++agg.rows;
      if (!r.error.empty()) ++agg.errors;
      if (r.ratio) {
        ++agg.rated;
        sum += *r.ratio;
        agg.min_ratio = std::min(agg.min_ratio, *r.ratio);
        agg.max_ratio = std::max(agg.max_ratio, *r.ratio);
      }
      if (r.within_guarantee && !*r.within_guarantee) ++agg.violations;
    }
    agg.mean_ratio = agg.rated ? sum / static_cast<double>(agg.rated) : 0;
    rep.aggregates.push_back(agg);
  }
  return rep;
}

/// Tab-separated rows, then one aggregate line per algorithm.
inline std::string bench_to_tsv(const BenchReport& rep) {
  std::ostringstream out;
  out << std::setprecision(6);
  out << "instance\talgorithm\tn\tsize\toptimum\tratio\twithin_guarantee\ttime_ms\terror\n";
  for (const auto& r : rep.rows) {
    out << r.instance_id << '\t' << algorithm_name(r.algorithm) << '\t' << r.n << '\t' << r.size << '\t';
    if (r.optimum) out << *r.optimum;
    out << '\t';
    if (r.ratio) out << *r.ratio;
    out << '\t';
    if (r.within_guarantee) out << (*r.within_guarantee ? "yes" : "no");
    out << '\t' << r.time_ms << '\t' << r.error << '\n';
  }
  out << "#aggregate\talgorithm\trows\trated\tmin_ratio\tmean_ratio\tmax_ratio\tviolations\terrors\n";
  for (const auto& a : rep.aggregates) {
    out << "#aggregate\t" << algorithm_name(a.algorithm) << '\t' << a.rows << '\t' << a.rated << '\t';
    if (a.rated) out << a.min_ratio << '\t' << a.mean_ratio << '\t' << a.max_ratio;
    else out << "\t\t";
    out << '\t' << a.violations << '\t' << a.errors << '\n';
  }
  return out.str();
}

inline Json bench_to_json(const BenchReport& rep) {
  Json j;
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json row{{"instance", r.instance_id}, {"algorithm", std::string(algorithm_name(r.algorithm))},
             {"n", r.n}, {"size", r.size}, {"time_ms", r.time_ms}};
    if (r.optimum) row["optimum"] = *r.optimum;
    if (r.ratio) row["ratio"] = *r.ratio;
    if (r.within_guarantee) row["within_guarantee"] = *r.within_guarantee;
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  Json aggs = Json::array();
  for (const auto& a : rep.aggregates) {
    Json row{{"algorithm", std::string(algorithm_name(a.algorithm))}, {"rows", a.rows}, {"rated", a.rated},
             {"violations", a.violations}, {"errors", a.errors}};
    if (a.rated) {
      row["min_ratio"] = a.min_ratio;
      row["mean_ratio"] = a.mean_ratio;
      row["max_ratio"] = a.max_ratio;
    }
    aggs.push_back(std::move(row));
  }
  j["aggregates"] = std::move(aggs);
  return j;
}

}  // namespace mbs
