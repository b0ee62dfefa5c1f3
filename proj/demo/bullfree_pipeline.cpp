// Samples bull-free chordal graphs and builds 3-expressions for them through
// the modular decomposition, printing which route each prime node took.
#include <cstdlib>
#include <iostream>

#include "cwchordal/cwchordal.hpp"

int main(int argc, char** argv) {
  using namespace cwc;
  const int count = argc > 1 ? std::atoi(argv[1]) : 5;
  GenSpec spec;
  spec.model = GenModel::HFreeChordal;
  spec.forbidden = "bull";
  spec.n = 16;
  spec.density = 0.6;
  for (int i = 0; i < count; ++i) {
    spec.seed = static_cast<std::uint64_t>(i);
    auto g = generate(spec);
    if (!g) {
      std::cout << "seed " << i << ": budget exhausted\n";
      continue;
    }
    BuildReport r = build_bullfree_chordal(*g);
    std::cout << "seed " << i << ": " << write_graph6(*g) << " width " << width(r.expression) << " routes";
    if (r.trace.empty()) std::cout << " none";
    for (const auto& [node, route] : r.trace) std::cout << ' ' << node << ':' << route;
    std::cout << '\n';
  }
}
