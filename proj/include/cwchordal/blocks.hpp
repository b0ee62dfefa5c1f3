#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace cwc {

enum class BlockKind { TwoConnected, Bridge, Isolated };

inline const char* to_string(BlockKind k) {
  switch (k) {
    case BlockKind::TwoConnected: return "2-connected";
    case BlockKind::Bridge: return "bridge";
    case BlockKind::Isolated: return "isolated";
  }
  return "?";
}

struct Block {
  VertexSet vertices;
  BlockKind kind;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  VertexSet cut_vertices;
};

/// Hopcroft-Tarjan biconnected components. Blocks are ordered by their
/// smallest vertex, then lexicographically.
inline BlockDecomposition blocks(const Graph& g) {
  const int n = g.n();
  BlockDecomposition out{{}, VertexSet(n)};
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<Vertex, Vertex>> edge_stack;
  int timer = 0;

  auto emit = [&](Vertex u, Vertex v) {
    VertexSet comp(n);
    while (true) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      comp.insert(e.first);
      comp.insert(e.second);
      if (e == std::make_pair(u, v)) break;
    }
    out.blocks.push_back({comp, comp.size() == 2 ? BlockKind::Bridge : BlockKind::TwoConnected});
  };

  // iterative DFS: frames hold (vertex, parent, next neighbour candidate)
  struct Frame {
    Vertex v, parent, next;
    int children;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    if (g.degree(root) == 0) {
      disc[static_cast<std::size_t>(root)] = timer++;
      out.blocks.push_back({VertexSet(n, {root}), BlockKind::Isolated});
      continue;
    }
    std::vector<Frame> st{{root, -1, g.neighbours(root).first(), 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!st.empty()) {
      Frame& f = st.back();
      if (f.next != -1) {
        Vertex w = f.next;
        f.next = g.neighbours(f.v).next(w);
        auto wi = static_cast<std::size_t>(w);
        if (disc[wi] == -1) {
          edge_stack.emplace_back(f.v, w);
          ++f.children;
          disc[wi] = low[wi] = timer++;
          st.push_back({w, f.v, g.neighbours(w).first(), 0});
        } else if (w != f.parent && disc[wi] < disc[static_cast<std::size_t>(f.v)]) {
          edge_stack.emplace_back(f.v, w);
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[wi]);
        }
        continue;
      }
      Frame done = f;
      st.pop_back();
      if (st.empty()) break;
      Frame& p = st.back();
      auto vi = static_cast<std::size_t>(done.v), pi = static_cast<std::size_t>(p.v);
      low[pi] = std::min(low[pi], low[vi]);
      if (low[vi] >= disc[pi]) {
        if (p.parent != -1 || p.children > 1) out.cut_vertices.insert(p.v);
        emit(p.v, done.v);
      }
    }
  }
  std::sort(out.blocks.begin(), out.blocks.end(), [](const Block& a, const Block& b) {
    if (a.vertices.first() != b.vertices.first()) return a.vertices.first() < b.vertices.first();
    return a.vertices.lex_less(b.vertices);
  });
  return out;
}

}  // namespace cwc
