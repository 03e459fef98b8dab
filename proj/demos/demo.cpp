// Solves a handful of small scenes and prints what each algorithm keeps.

#include <iostream>

#include "mbs/mbs.hpp"

namespace {

void show(const char* label, const mbs::Solution& s) {
  std::cout << label << ": kept " << s.size() << " {";
  for (std::size_t i = 0; i < s.selected.size(); ++i) std::cout << (i ? ", " : "") << s.selected[i];
  std::cout << "}\n";
}

}  // namespace

int main() {
  using mbs::Rational;

  // Three mutually overlapping intervals plus a loose one.
  auto iv = mbs::GeometricInstance::make_intervals({{0, 4}, {1, 5}, {2, 6}, {7, 8}});
  show("intervals", mbs::solve_intervals(iv));

  // Five arcs whose overlaps form a 5-cycle.
  std::vector<mbs::ArcObj> arcs;
  for (int i = 0; i < 5; ++i) arcs.push_back({Rational(2 * i, 10), Rational((2 * i + 3) % 10, 10)});
  auto ring = mbs::GeometricInstance::make_arcs(arcs);
  show("arcs", mbs::solve_arcs(ring));

  // Unit disks hanging above the x-axis.
  auto row = mbs::GeometricInstance::make_disks({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {Rational(9, 2), 1}});
  show("one-sided disks", mbs::solve_one_sided(row, 0));

  // A wider random scene through the general approximations.
  mbs::GeneratorParams p;
  p.kind = mbs::Kind::unit_disks;
  p.n = 14;
  p.seed = 7;
  auto scene = mbs::generate(p);
  auto g = mbs::build_intersection_graph(scene);
  show("3-approx", mbs::solve_3approx(scene));
  show("log n", mbs::solve_logn(scene));
  show("ptas eps=1/2", mbs::solve_ptas(scene, Rational(1, 2)));
  show("optimum", mbs::exact_mbs(g));
  return 0;
}
