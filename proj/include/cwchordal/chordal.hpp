#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace cwc {

using Peo = std::vector<Vertex>;

/// Maximum cardinality search; the reverse of the visit order is a PEO
/// whenever g is chordal.
inline std::vector<Vertex> mcs_order(const Graph& g) {
  const int n = g.n();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  VertexSet done(n);
  std::vector<Vertex> visit;
  visit.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!done.contains(v) && (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
        best = v;
    done.insert(best);
    visit.push_back(best);
    g.neighbours(best).for_each([&](Vertex w) {
      if (!done.contains(w)) ++weight[static_cast<std::size_t>(w)];
    });
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

/// Position of each vertex in an ordering; throws unless it is a permutation.
inline std::vector<int> order_positions(const Graph& g, const std::vector<Vertex>& order) {
  if (static_cast<int>(order.size()) != g.n()) throw std::invalid_argument("ordering has the wrong length");
  std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    if (v < 0 || v >= g.n() || pos[static_cast<std::size_t>(v)] != -1) throw std::invalid_argument("ordering is not a permutation");
    pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  return pos;
}

/// Neighbours of v that come after it in the ordering.
inline VertexSet later_neighbours(const Graph& g, const std::vector<int>& pos, Vertex v) {
  VertexSet out(g.n());
  g.neighbours(v).for_each([&](Vertex w) {
    if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) out.insert(w);
  });
  return out;
}

inline bool is_peo(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> pos;
  try {
    pos = order_positions(g, order);
  } catch (const std::invalid_argument&) {
    return false;
  }
  for (Vertex v : order) {
    VertexSet later = later_neighbours(g, pos, v);
    if (later.empty()) continue;
    Vertex parent = -1;
    later.for_each([&](Vertex w) {
      if (parent == -1 || pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(parent)]) parent = w;
    });
    later.erase(parent);
    if (!later.is_subset_of(g.neighbours(parent))) return false;
  }
  return true;
}

/// Shortest induced cycle of length >= 4, as a cyclic vertex sequence, or
/// nullopt if g is chordal.
inline std::optional<std::vector<Vertex>> shortest_hole(const Graph& g) {
  const int n = g.n();
  std::optional<std::vector<Vertex>> best;
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbours(v).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        Vertex a = nb[i], b = nb[j];
        if (g.adjacent(a, b)) continue;
        VertexSet blocked = g.neighbours(v);
        blocked.insert(v);
        blocked.erase(a);
        blocked.erase(b);
        // BFS from a to b avoiding blocked
        std::vector<Vertex> parent(static_cast<std::size_t>(n), -2);
        std::deque<Vertex> q{a};
        parent[static_cast<std::size_t>(a)] = -1;
        while (!q.empty() && parent[static_cast<std::size_t>(b)] == -2) {
          Vertex x = q.front();
          q.pop_front();
          g.neighbours(x).for_each([&](Vertex y) {
            if (blocked.contains(y) || parent[static_cast<std::size_t>(y)] != -2) return;
            parent[static_cast<std::size_t>(y)] = x;
            q.push_back(y);
          });
        }
        if (parent[static_cast<std::size_t>(b)] == -2) continue;
        std::vector<Vertex> cyc{v};
        for (Vertex x = b; x != -1; x = parent[static_cast<std::size_t>(x)]) cyc.push_back(x);
        if (!best || cyc.size() < best->size()) best = cyc;
        if (best->size() == 4) return best;
      }
  }
  return best;
}

struct ChordalCheck {
  std::optional<Peo> peo;
  std::vector<Vertex> hole;  // induced cycle of length >= 4 when peo is absent
};

inline ChordalCheck check_chordal(const Graph& g) {
  ChordalCheck out;
  Peo order = mcs_order(g);
  if (is_peo(g, order)) {
    out.peo = std::move(order);
    return out;
  }
  auto hole = shortest_hole(g);
  if (!hole) throw std::logic_error("MCS order failed but no hole found");
  out.hole = *hole;
  return out;
}

inline std::optional<Peo> chordal_peo(const Graph& g) { return check_chordal(g).peo; }
inline bool is_chordal(const Graph& g) { return chordal_peo(g).has_value(); }

inline void require_chordal(const Graph& g) {
  auto c = check_chordal(g);
  if (!c.peo) throw PreconditionError("graph is not chordal: induced cycle of length " + std::to_string(c.hole.size()), c.hole);
}

inline VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.is_clique(g.neighbours(v))) out.insert(v);
  return out;
}

/// Candidate cliques {v} + later neighbours of v; these include every maximal
/// clique of a chordal graph.
inline std::vector<VertexSet> peo_cliques(const Graph& g, const Peo& peo) {
  if (!is_peo(g, peo)) throw std::invalid_argument("not a perfect elimination ordering of the graph");
  auto pos = order_positions(g, peo);
  std::vector<VertexSet> out;
  for (Vertex v : peo) {
    VertexSet c = later_neighbours(g, pos, v);
    c.insert(v);
    out.push_back(c);
  }
  return out;
}

/// All maximal cliques of a chordal graph, sorted lexicographically.
inline std::vector<VertexSet> maximal_cliques_chordal(const Graph& g, const Peo& peo) {
  auto cands = peo_cliques(g, peo);
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cands.size() && maximal; ++j)
      if (i != j && cands[i].is_subset_of(cands[j]) && (cands[i].size() < cands[j].size() || j < i)) maximal = false;
    if (maximal) out.push_back(cands[i]);
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.lex_less(b); });
  return out;
}

/// A maximum clique; among maximum cliques the lexicographically smallest.
inline VertexSet max_clique_chordal(const Graph& g, const Peo& peo) {
  auto cands = peo_cliques(g, peo);
  VertexSet best(g.n());
  for (const auto& c : cands)
    if (c.size() > best.size() || (c.size() == best.size() && c.lex_less(best))) best = c;
  return best;
}

}  // namespace cwc
