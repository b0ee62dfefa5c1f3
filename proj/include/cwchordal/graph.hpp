#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace cwc {

inline constexpr int kMaxVertices = 4096;

/// Simple undirected graph on vertex ids 0..n-1 stored as adjacency bit rows.
/// Values are immutable once built; use GraphBuilder to assemble one.
class Graph {
 public:
  Graph() = default;

  int n() const { return static_cast<int>(rows_.size()); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbours(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return neighbours(v).size(); }
  VertexSet vertices() const { return VertexSet::full(n()); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += static_cast<std::size_t>(r.size());
    return twice / 2;
  }
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n(); ++u)
      rows_[static_cast<std::size_t>(u)].for_each([&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }
  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n(); ++v) d = std::max(d, degree(v));
    return d;
  }

  bool is_clique(const VertexSet& s) const {
    bool ok = true;
    s.for_each([&](Vertex v) {
      if (ok && !(s - neighbours(v)).is_subset_of(VertexSet(n(), {v}))) ok = false;
    });
    return ok;
  }
  bool is_independent(const VertexSet& s) const {
    bool ok = true;
    s.for_each([&](Vertex v) {
      if (ok && neighbours(v).intersects(s)) ok = false;
    });
    return ok;
  }
  /// Every vertex of a is adjacent to every vertex of b (a and b disjoint).
  bool complete_to(const VertexSet& a, const VertexSet& b) const {
    bool ok = true;
    a.for_each([&](Vertex v) {
      if (ok && !b.is_subset_of(neighbours(v))) ok = false;
    });
    return ok;
  }
  bool anticomplete_to(const VertexSet& a, const VertexSet& b) const {
    bool ok = true;
    a.for_each([&](Vertex v) {
      if (ok && neighbours(v).intersects(b)) ok = false;
    });
    return ok;
  }

  bool operator==(const Graph& o) const = default;

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> rows_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    g_.rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
  }
  explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

  int n() const { return g_.n(); }
  GraphBuilder& add_edge(Vertex u, Vertex v) {
    check(u, v);
    row(u).insert(v);
    row(v).insert(u);
    return *this;
  }
  GraphBuilder& remove_edge(Vertex u, Vertex v) {
    check(u, v);
    row(u).erase(v);
    row(v).erase(u);
    return *this;
  }
  GraphBuilder& flip_edge(Vertex u, Vertex v) {
    check(u, v);
    row(u).flip(v);
    row(v).flip(u);
    return *this;
  }
  /// Adds every edge between the disjoint sets a and b.
  GraphBuilder& connect(const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b)) throw std::invalid_argument("connect needs disjoint sets");
    a.for_each([&](Vertex u) { row(u) |= b; });
    b.for_each([&](Vertex v) { row(v) |= a; });
    return *this;
  }
  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  Graph build() const { return g_; }

 private:
  VertexSet& row(Vertex v) { return g_.rows_[static_cast<std::size_t>(v)]; }
  void check(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n())
      throw std::out_of_range("vertex id out of range: " + std::to_string(u) + "," + std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  }
  Graph g_;
};

inline Graph make_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

// ---------------------------------------------------------------------------
// Graph operations

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.n());
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

/// g + h; vertices of h are shifted by g.n().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  GraphBuilder b(g.n() + h.n());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + g.n(), v + g.n());
  return b.build();
}

/// r disjoint copies of g.
inline Graph copies(const Graph& g, int r) {
  Graph out = GraphBuilder(0).build();
  for (int i = 0; i < r; ++i) out = disjoint_union(out, g);
  return out;
}

inline VertexSet resize_set(const VertexSet& s, int n) {
  if (s.universe() == n) return s;
  VertexSet out(n);
  s.for_each([&](Vertex v) {
    if (v >= n) throw std::out_of_range("vertex id out of range: " + std::to_string(v));
    out.insert(v);
  });
  return out;
}

/// Result of removing vertices: the induced graph on the survivors plus the
/// old-id -> new-id map (-1 for removed ids) and its inverse.
struct Deletion {
  Graph graph;
  std::vector<Vertex> new_id;
  std::vector<Vertex> old_id;
};

inline Deletion delete_vertices(const Graph& g, const VertexSet& removed) {
  VertexSet s = resize_set(removed, g.n());
  Deletion d;
  d.new_id.assign(static_cast<std::size_t>(g.n()), -1);
  for (Vertex v = 0; v < g.n(); ++v)
    if (!s.contains(v)) {
      d.new_id[static_cast<std::size_t>(v)] = static_cast<Vertex>(d.old_id.size());
      d.old_id.push_back(v);
    }
  GraphBuilder b(static_cast<int>(d.old_id.size()));
  for (auto [u, v] : g.edges()) {
    Vertex a = d.new_id[static_cast<std::size_t>(u)], c = d.new_id[static_cast<std::size_t>(v)];
    if (a >= 0 && c >= 0) b.add_edge(a, c);
  }
  d.graph = b.build();
  return d;
}

/// G[s] with compacted ids (in increasing order of the original id).
inline Deletion induced_subgraph(const Graph& g, const VertexSet& s) {
  return delete_vertices(g, resize_set(s, g.n()).complement());
}

inline Graph induced(const Graph& g, const std::vector<Vertex>& order) {
  GraphBuilder b(static_cast<int>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (g.adjacent(order[i], order[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return b.build();
}

/// Flips every adjacency with both ends in s.
inline Graph subgraph_complement(const Graph& g, const VertexSet& s) {
  VertexSet t = resize_set(s, g.n());
  GraphBuilder b(g);
  auto members = t.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) b.flip_edge(members[i], members[j]);
  return b.build();
}

/// Flips every adjacency with one end in s and the other in t.
inline Graph bipartite_complement(const Graph& g, const VertexSet& s, const VertexSet& t) {
  VertexSet a = resize_set(s, g.n()), c = resize_set(t, g.n());
  if (a.intersects(c)) throw std::invalid_argument("bipartite complementation needs disjoint sides");
  GraphBuilder b(g);
  a.for_each([&](Vertex u) { c.for_each([&](Vertex v) { b.flip_edge(u, v); }); });
  return b.build();
}

inline std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> comps;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp(g.n()), frontier(g.n());
    frontier.insert(left.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(g.n());
      frontier.for_each([&](Vertex v) { next |= g.neighbours(v); });
      next &= within;
      next -= comp;
      frontier = next;
    }
    comps.push_back(comp);
    left -= comp;
  }
  return comps;
}

inline std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.vertices()); }

inline bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).size() == 1; }

inline bool is_forest(const Graph& g) {
  return g.edge_count() + connected_components(g).size() == static_cast<std::size_t>(g.n());
}

inline Graph complete_graph(int r) {
  GraphBuilder b(r);
  for (Vertex u = 0; u < r; ++u)
    for (Vertex v = u + 1; v < r; ++v) b.add_edge(u, v);
  return b.build();
}
inline Graph path_graph(int r) {
  GraphBuilder b(r);
  for (Vertex v = 0; v + 1 < r; ++v) b.add_edge(v, v + 1);
  return b.build();
}
inline Graph cycle_graph(int r) {
  if (r < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  GraphBuilder b(r);
  for (Vertex v = 0; v < r; ++v) b.add_edge(v, (v + 1) % r);
  return b.build();
}
inline Graph edgeless_graph(int r) { return GraphBuilder(r).build(); }
/// K_{1,r}: centre 0, leaves 1..r.
inline Graph star_graph(int r) {
  GraphBuilder b(r + 1);
  for (Vertex v = 1; v <= r; ++v) b.add_edge(0, v);
  return b.build();
}

}  // namespace cwc
