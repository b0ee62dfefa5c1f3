#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace cwc {

enum class MdKind { Leaf, Series, Parallel, Prime };

inline const char* to_string(MdKind k) {
  switch (k) {
    case MdKind::Leaf: return "leaf";
    case MdKind::Series: return "series";
    case MdKind::Parallel: return "parallel";
    case MdKind::Prime: return "prime";
  }
  return "?";
}

struct MdNode {
  MdKind kind = MdKind::Leaf;
  VertexSet vertices;
  std::vector<int> children;  // node indices, ordered by smallest vertex
  Vertex vertex = -1;         // leaves only
  // Internal nodes: quotient on the children, child i represented by
  // representatives[i] (its smallest vertex).
  Graph quotient;
  std::vector<Vertex> representatives;
};

struct MdTree {
  std::vector<MdNode> nodes;
  int root = -1;
  const MdNode& at(int i) const { return nodes[static_cast<std::size_t>(i)]; }
};

/// Every vertex outside m is complete or anticomplete to m.
inline bool is_module(const Graph& g, const VertexSet& m) {
  for (Vertex w = 0; w < g.n(); ++w) {
    if (m.contains(w)) continue;
    int k = g.neighbours(w).intersection_size(m);
    if (k != 0 && k != m.size()) return false;
  }
  return true;
}

namespace detail {

// Smallest module of g[within] containing seed.
inline VertexSet module_closure(const Graph& g, const VertexSet& within, VertexSet seed) {
  bool changed = true;
  while (changed) {
    changed = false;
    VertexSet outside = within - seed;
    for (Vertex w = outside.first(); w != -1; w = outside.next(w)) {
      int k = g.neighbours(w).intersection_size(seed);
      if (k != 0 && k != seed.size()) {
        seed.insert(w);
        changed = true;
      }
    }
  }
  return seed;
}

inline std::vector<VertexSet> co_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> comps;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp(g.n()), frontier(g.n());
    frontier.insert(left.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(g.n());
      frontier.for_each([&](Vertex v) { next |= (within - g.neighbours(v)); });
      next -= comp;
      frontier = next;
    }
    comps.push_back(comp);
    left -= comp;
  }
  return comps;
}

inline int build_md(const Graph& g, const VertexSet& x, MdTree& t) {
  int id = static_cast<int>(t.nodes.size());
  t.nodes.emplace_back();
  t.nodes.back().vertices = x;
  if (x.size() == 1) {
    t.nodes.back().kind = MdKind::Leaf;
    t.nodes.back().vertex = x.first();
    return id;
  }
  std::vector<VertexSet> parts;
  MdKind kind;
  auto comps = connected_components(g, x);
  if (comps.size() > 1) {
    kind = MdKind::Parallel;
    parts = comps;
  } else {
    auto cocomps = co_components(g, x);
    if (cocomps.size() > 1) {
      kind = MdKind::Series;
      parts = cocomps;
    } else {
      kind = MdKind::Prime;
      VertexSet assigned(g.n());
      for (Vertex v = x.first(); v != -1; v = x.next(v)) {
        if (assigned.contains(v)) continue;
        VertexSet part(g.n(), {v});
        for (Vertex u = x.first(); u != -1; u = x.next(u)) {
          if (u == v || part.contains(u)) continue;
          VertexSet m = module_closure(g, x, VertexSet(g.n(), {u, v}));
          if (m != x) part |= m;
        }
        parts.push_back(part);
        assigned |= part;
      }
    }
  }
  std::sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  std::vector<int> kids;
  std::vector<Vertex> reps;
  for (const auto& p : parts) {
    kids.push_back(build_md(g, p, t));
    reps.push_back(p.first());
  }
  MdNode& node = t.nodes[static_cast<std::size_t>(id)];
  node.kind = kind;
  node.children = std::move(kids);
  node.quotient = induced(g, reps);
  node.representatives = std::move(reps);
  return id;
}

}  // namespace detail

/// Modular decomposition by recursive strong-module refinement. Node ids are
/// assigned in pre-order, so the root is node 0.
inline MdTree modular_decomposition(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("modular decomposition needs at least one vertex");
  MdTree t;
  t.root = detail::build_md(g, g.vertices(), t);
  return t;
}

/// Text form: "md <n>" then one line per node in id order:
///   "node <id> <kind> <vertices> children=<ids|->" for internal nodes,
///   "node <id> leaf <vertex>" for leaves.
inline std::string serialize(const MdTree& t) {
  std::ostringstream os;
  int n = t.nodes.empty() ? 0 : t.at(t.root).vertices.universe();
  os << "md " << n << '\n';
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& nd = t.nodes[i];
    os << "node " << i << ' ' << to_string(nd.kind) << ' ';
    if (nd.kind == MdKind::Leaf) {
      os << nd.vertex << '\n';
      continue;
    }
    os << format_set(nd.vertices) << " children=";
    for (std::size_t c = 0; c < nd.children.size(); ++c) os << (c ? "," : "") << nd.children[c];
    os << '\n';
  }
  return os.str();
}

}  // namespace cwc
