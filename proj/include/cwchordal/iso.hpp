#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace cwc {

namespace detail {

// Order pattern vertices so that each one (after the first of its component)
// has an already-placed neighbour; high degree first inside that constraint.
inline std::vector<Vertex> search_order(const Graph& h) {
  std::vector<Vertex> order;
  VertexSet placed(h.n());
  while (static_cast<int>(order.size()) < h.n()) {
    Vertex best = -1;
    int best_conn = -1, best_deg = -1;
    for (Vertex v = 0; v < h.n(); ++v) {
      if (placed.contains(v)) continue;
      int conn = h.neighbours(v).intersection_size(placed);
      int deg = h.degree(v);
      if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
        best = v;
        best_conn = conn;
        best_deg = deg;
      }
    }
    order.push_back(best);
    placed.insert(best);
  }
  return order;
}

}  // namespace detail

/// Finds an injective map phi: V(h) -> V(g) with uv in E(h) iff phi(u)phi(v) in E(g).
/// Deterministic: candidates are tried in increasing id order.
inline std::optional<std::vector<Vertex>> induced_subgraph_isomorphic(const Graph& h, const Graph& g) {
  const int nh = h.n(), ng = g.n();
  if (nh > ng) return std::nullopt;
  if (nh == 0) return std::vector<Vertex>{};
  if (h.edge_count() > g.edge_count()) return std::nullopt;

  auto order = detail::search_order(h);
  std::vector<Vertex> phi(static_cast<std::size_t>(nh), -1);
  VertexSet used(ng);
  std::vector<VertexSet> non_nb;
  non_nb.reserve(static_cast<std::size_t>(ng));
  for (Vertex v = 0; v < ng; ++v) {
    VertexSet s = g.neighbours(v).complement();
    s.erase(v);
    non_nb.push_back(std::move(s));
  }

  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    Vertex u = order[depth];
    VertexSet cand = VertexSet::full(ng) - used;
    for (std::size_t i = 0; i < depth; ++i) {
      Vertex w = order[i];
      Vertex pw = phi[static_cast<std::size_t>(w)];
      if (h.adjacent(u, w))
        cand &= g.neighbours(pw);
      else
        cand &= non_nb[static_cast<std::size_t>(pw)];
    }
    const int du = h.degree(u), nu = nh - 1 - du;
    for (Vertex v = cand.first(); v != -1; v = cand.next(v)) {
      if (g.degree(v) < du || ng - 1 - g.degree(v) < nu) continue;
      phi[static_cast<std::size_t>(u)] = v;
      used.insert(v);
      if (self(self, depth + 1)) return true;
      used.erase(v);
    }
    phi[static_cast<std::size_t>(u)] = -1;
    return false;
  };
  if (rec(rec, 0)) return phi;
  return std::nullopt;
}

inline bool contains_induced(const Graph& g, const Graph& h) { return induced_subgraph_isomorphic(h, g).has_value(); }

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (Vertex v = 0; v < a.n(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return induced_subgraph_isomorphic(a, b).has_value();
}

/// Canonical code for graphs with n <= 8: the maximum upper-triangle bit
/// string over all vertex permutations. Equal codes iff isomorphic.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.n();
  if (n > 8) throw std::invalid_argument("canonical_code supports n <= 8");
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = 0;
  do {
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? 1u : 0u);
    best = std::max(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best | (static_cast<std::uint64_t>(n) << 60);
}

/// One representative per isomorphism class of graphs on exactly n vertices
/// (n <= 7), grown by adding a vertex to every representative on n-1.
inline std::vector<Graph> graphs_up_to_iso(int n) {
  if (n < 0 || n > 7) throw std::invalid_argument("graphs_up_to_iso supports 0 <= n <= 7");
  std::vector<Graph> level{GraphBuilder(0).build()};
  for (int m = 1; m <= n; ++m) {
    std::vector<Graph> next;
    std::set<std::uint64_t> seen;
    for (const Graph& g : level) {
      for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
        GraphBuilder b(m);
        for (auto [u, v] : g.edges()) b.add_edge(u, v);
        for (int u = 0; u < m - 1; ++u)
          if (mask >> u & 1u) b.add_edge(u, m - 1);
        Graph c = b.build();
        if (seen.insert(canonical_code(c)).second) next.push_back(c);
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace cwc
