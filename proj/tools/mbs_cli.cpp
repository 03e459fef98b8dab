// Command-line front end: generate, solve, oracle, verify, bench, reduce.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mbs/mbs.hpp"

namespace {

using mbs::Json;

enum Exit : int { kOk = 0, kRejected = 1, kUsage = 2, kCapacity = 3, kIo = 4, kInternal = 5 };

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    mbs::write_text_file(path, text);
  }
}

std::optional<mbs::Rational> opt_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return mbs::parse_rational(s);
}

/// Checks a solution against its instance without trusting the solver.
/// Returns the verdict document; `ok` tells whether it passed.
Json verify_solution(const mbs::InstanceFile& file, const mbs::SolutionFile& sol,
                     const std::string& problem, bool& ok) {
  const auto& inst = file.instance;
  auto g = mbs::build_intersection_graph(inst);
  const auto& sel = sol.solution.selected;
  Json out{{"size", sel.size()}};
  ok = false;
  if (sol.kind != inst.kind) {
    out["reason"] = "kind_mismatch";
    return out;
  }
  if (problem == "mis") {
    if (auto e = mbs::is_independent(g, sel)) {
      out["reason"] = "edge";
      out["witness"] = {e->first, e->second};
      return out;
    }
  } else if (problem == "mtfs") {
    if (auto t = mbs::is_triangle_free(g, sel)) {
      out["reason"] = "triangle";
      out["witness"] = *t;
      return out;
    }
  } else {
    bool proper = false;
    if (sol.solution.coloring) {
      proper = !mbs::monochromatic_edge(g, sel, *sol.solution.coloring).has_value();
    } else {
      proper = mbs::is_bipartite(g, sel).has_value();
    }
    if (!proper) {
      if (auto t = mbs::is_triangle_free(g, sel)) {
        out["reason"] = "triangle";
        out["witness"] = *t;
      } else if (auto cyc = mbs::odd_cycle_witness(g, sel); !cyc.empty()) {
        out["reason"] = "odd_cycle";
        out["witness"] = cyc;
      } else {
        auto e = mbs::monochromatic_edge(g, sel, *sol.solution.coloring);
        out["reason"] = "monochromatic_edge";
        out["witness"] = {e->first, e->second};
      }
      return out;
    }
  }
  if (sol.weight && !file.weights.empty()) {
    mbs::Rational total = 0;
    for (std::size_t i : sel) total += file.weights[i];
    if (total != *sol.weight) {
      out["reason"] = "weight_mismatch";
      out["expected_weight"] = mbs::format_rational(total);
      return out;
    }
  }
  ok = true;
  out["valid"] = true;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum bipartite subgraph solvers for geometric intersection graphs"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a pseudo-random instance");
  std::string gen_kind = "intervals", gen_spread, gen_max_len, gen_radius = "1", gen_mode = "general", gen_out;
  std::size_t gen_n = 8;
  std::uint64_t gen_seed = 1;
  std::int64_t gen_res = 8;
  bool gen_weights = false;
  gen->add_option("--kind", gen_kind, "intervals|arcs|unit_disks|unit_squares|unit_height_rects|rects");
  gen->add_option("-n,--n", gen_n, "Number of objects");
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--spread", gen_spread, "Coordinate range [0, spread] (rational)");
  gen->add_option("--resolution", gen_res, "Coordinates are multiples of 1/resolution");
  gen->add_option("--max-length", gen_max_len, "Longest interval/side (arcs: turn fraction)");
  gen->add_option("--radius", gen_radius, "Disk radius (rational)");
  gen->add_option("--disk-mode", gen_mode, "general|one_sided|two_sided (line y = 0)");
  gen->add_flag("--weights", gen_weights, "Attach random integer weights 1..5");
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  std::string solve_in, solve_algo = "auto", solve_line, solve_eps = "1/2", solve_out;
  bool solve_perturb = false;
  std::size_t solve_cap = 20, solve_box_cap = 16;
  solve->add_option("instance", solve_in, "Instance file")->required();
  solve->add_option("--algo", solve_algo,
                    "auto|interval|arc|one-sided|two-sided|3approx|logn|ptas|unit-height|exact");
  solve->add_option("--line", solve_line, "Stabbing line y for one-sided/two-sided");
  solve->add_option("--epsilon", solve_eps, "PTAS accuracy (rational)");
  solve->add_flag("--perturb", solve_perturb, "Break duplicate interval endpoints by index");
  solve->add_option("--cap", solve_cap, "Exact-oracle vertex cap");
  solve->add_option("--box-cap", solve_box_cap, "PTAS per-box object cap");
  solve->add_option("-o,--output", solve_out, "Output file (default stdout)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive exact solve (small instances)");
  std::string oracle_in, oracle_problem = "mbs", oracle_out;
  std::size_t oracle_cap = 20;
  oracle->add_option("instance", oracle_in, "Instance file")->required();
  oracle->add_option("--problem", oracle_problem, "mbs|mtfs|mis");
  oracle->add_option("--cap", oracle_cap, "Vertex cap");
  oracle->add_option("-o,--output", oracle_out, "Output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a solution file against its instance");
  std::string verify_in, verify_sol, verify_problem = "mbs";
  verify->add_option("instance", verify_in, "Instance file")->required();
  verify->add_option("solution", verify_sol, "Solution file")->required();
  verify->add_option("--problem", verify_problem, "mbs|mtfs|mis");

  // bench
  auto* bench = app.add_subcommand("bench", "Run the algorithm suite over a generated corpus");
  std::string bench_kind = "unit_disks", bench_mode = "general", bench_format = "tsv", bench_out, bench_eps = "1/2";
  std::string bench_spread, bench_radius = "1";
  std::vector<std::string> bench_algos;
  std::size_t bench_n = 10, bench_count = 20;
  std::uint64_t bench_seed = 1;
  unsigned bench_threads = 0;
  bool bench_no_oracle = false;
  bench->add_option("--kind", bench_kind, "Instance kind");
  bench->add_option("--disk-mode", bench_mode, "general|one_sided|two_sided");
  bench->add_option("-n,--n", bench_n, "Objects per instance");
  bench->add_option("--count", bench_count, "Number of instances");
  bench->add_option("--seed", bench_seed, "Seed of the first instance");
  bench->add_option("--spread", bench_spread, "Coordinate range (rational)");
  bench->add_option("--radius", bench_radius, "Disk radius (rational)");
  bench->add_option("--algo", bench_algos, "Algorithms to run (default: suite for the kind)");
  bench->add_option("--epsilon", bench_eps, "PTAS accuracy");
  bench->add_option("--threads", bench_threads, "Worker threads (0 = all cores)");
  bench->add_flag("--no-oracle", bench_no_oracle, "Skip the exhaustive optimum");
  bench->add_option("--format", bench_format, "tsv|json");
  bench->add_option("-o,--output", bench_out, "Output file (default stdout)");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Duplicate every object in place");
  std::string reduce_in, reduce_out;
  reduce->add_option("instance", reduce_in, "Instance file")->required();
  reduce->add_option("-o,--output", reduce_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      mbs::GeneratorParams p;
      p.kind = mbs::parse_kind(gen_kind);
      p.n = gen_n;
      p.seed = gen_seed;
      p.spread = opt_rational(gen_spread);
      p.resolution = gen_res;
      p.max_length = opt_rational(gen_max_len);
      p.radius = mbs::parse_rational(gen_radius);
      p.disk_mode = mbs::parse_disk_mode(gen_mode);
      mbs::InstanceFile file{mbs::generate(p), {}};
      if (gen_weights) {
        std::mt19937_64 eng(gen_seed ^ 0x9e3779b97f4a7c15ULL);
        for (std::size_t i = 0; i < file.instance.size(); ++i) file.weights.emplace_back(1 + eng() % 5);
      }
      emit(mbs::instance_to_json(file).dump(2) + "\n", gen_out);
      return kOk;
    }
    if (solve->parsed()) {
      auto file = mbs::load_instance(solve_in);
      mbs::SolveParams p;
      p.line_y = opt_rational(solve_line);
      p.epsilon = mbs::parse_rational(solve_eps);
      p.perturb = solve_perturb;
      p.oracle.cap = solve_cap;
      p.ptas.box_cap = solve_box_cap;
      auto algo = mbs::parse_algorithm(solve_algo);
      auto res = mbs::run_algorithm(file.instance, algo, p, file.weights);
      mbs::SolutionFile out{file.instance.kind, std::string(mbs::algorithm_name(res.algorithm)),
                            std::move(res.solution), res.weight};
      emit(mbs::solution_to_json(out).dump() + "\n", solve_out);
      return kOk;
    }
    if (oracle->parsed()) {
      auto file = mbs::load_instance(oracle_in);
      auto g = mbs::build_intersection_graph(file.instance);
      mbs::OracleOptions opt{oracle_cap};
      mbs::Solution s;
      if (oracle_problem == "mbs") s = mbs::exact_mbs(g, opt);
      else if (oracle_problem == "mtfs") s = mbs::exact_mtfs(g, opt);
      else if (oracle_problem == "mis") s = mbs::exact_mis(g, opt);
      else throw mbs::ValidationError("unknown problem '" + oracle_problem + "'");
      mbs::SolutionFile out{file.instance.kind, "oracle-" + oracle_problem, std::move(s), std::nullopt};
      emit(mbs::solution_to_json(out).dump() + "\n", oracle_out);
      return kOk;
    }
    if (verify->parsed()) {
      auto file = mbs::load_instance(verify_in);
      auto sol = mbs::load_solution(verify_sol);
      if (verify_problem != "mbs" && verify_problem != "mtfs" && verify_problem != "mis") {
        throw mbs::ValidationError("unknown problem '" + verify_problem + "'");
      }
      bool ok = false;
      Json verdict = verify_solution(file, sol, verify_problem, ok);
      std::cout << verdict.dump() << "\n";
      return ok ? kOk : kRejected;
    }
    if (bench->parsed()) {
      mbs::BenchConfig cfg;
      cfg.generator.kind = mbs::parse_kind(bench_kind);
      cfg.generator.n = bench_n;
      cfg.generator.seed = bench_seed;
      cfg.generator.disk_mode = mbs::parse_disk_mode(bench_mode);
      cfg.generator.spread = opt_rational(bench_spread);
      cfg.generator.radius = mbs::parse_rational(bench_radius);
      cfg.count = bench_count;
      cfg.with_oracle = !bench_no_oracle;
      cfg.threads = bench_threads;
      cfg.params.epsilon = mbs::parse_rational(bench_eps);
      for (const auto& a : bench_algos) cfg.algorithms.push_back(mbs::parse_algorithm(a));
      auto rep = mbs::run_bench(cfg);
      if (bench_format == "json") emit(mbs::bench_to_json(rep).dump(2) + "\n", bench_out);
      else if (bench_format == "tsv") emit(mbs::bench_to_tsv(rep), bench_out);
      else throw mbs::ValidationError("unknown format '" + bench_format + "'");
      return rep.all_within_guarantee() ? kOk : kRejected;
    }
    if (reduce->parsed()) {
      auto file = mbs::load_instance(reduce_in);
      mbs::InstanceFile out{mbs::double_instance(file.instance), {}};
      if (!file.weights.empty()) {
        out.weights = file.weights;
        out.weights.insert(out.weights.end(), file.weights.begin(), file.weights.end());
      }
      emit(mbs::instance_to_json(out).dump(2) + "\n", reduce_out);
      return kOk;
    }
  } catch (const mbs::Error& e) {
    std::cerr << Json{{"error", e.category()}, {"message", e.what()}}.dump() << "\n";
    std::string cat = e.category();
    return cat == "capacity" ? kCapacity : cat == "io" ? kIo : kUsage;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return kInternal;
  }
  return kUsage;
}
