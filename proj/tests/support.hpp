#pragma once

#include <algorithm>
#include <random>
#include <string>

#include "cwchordal/graph.hpp"

namespace support {

inline cwc::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  cwc::GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

/// Random chordal graph by repeatedly adding a vertex whose neighbourhood is
/// a clique of the current graph. Independent of the library generators.
inline cwc::Graph random_chordal(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  cwc::GraphBuilder b(n);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    int u = pick(rng);
    if (!coin(rng) && v > 2) continue;  // start a new component now and then
    b.add_edge(u, v);
    for (int w = 0; w < v; ++w)
      if (w != u && b.adjacent(u, w) && coin(rng)) {
        bool clique = true;
        for (int x = 0; x < v && clique; ++x)
          if (x != w && b.adjacent(x, v) && !b.adjacent(x, w)) clique = false;
        if (clique) b.add_edge(w, v);
      }
  }
  return b.build();
}

inline cwc::Graph permuted(const cwc::Graph& g, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  cwc::GraphBuilder b(g.n());
  for (auto [u, v] : g.edges()) b.add_edge(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]);
  return b.build();
}

}  // namespace support
