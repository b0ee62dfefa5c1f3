#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chordal.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace cwc {

// ---------------------------------------------------------------------------
// Split graphs

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

struct SplitCheck {
  std::optional<SplitPartition> partition;
  std::string obstruction;  // "C4", "C5" or "2P2" when partition is absent
  std::vector<Vertex> witness;
};

inline bool is_split_partition(const Graph& g, const SplitPartition& p) {
  return (p.clique | p.independent) == g.vertices() && !p.clique.intersects(p.independent) && g.is_clique(p.clique) &&
         g.is_independent(p.independent);
}

inline SplitCheck check_split(const Graph& g) {
  SplitCheck out;
  const int n = g.n();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(order[static_cast<std::size_t>(i)]) >= i) m = i + 1;
  long lhs = 0, rhs = static_cast<long>(m) * (m - 1);
  for (int i = 0; i < n; ++i) (i < m ? lhs : rhs) += g.degree(order[static_cast<std::size_t>(i)]);
  if (lhs == rhs) {
    SplitPartition p{VertexSet(n), VertexSet(n)};
    for (int i = 0; i < n; ++i) (i < m ? p.clique : p.independent).insert(order[static_cast<std::size_t>(i)]);
    if (!is_split_partition(g, p)) throw std::logic_error("degree test accepted a non-split partition");
    out.partition = p;
    return out;
  }
  if (auto hole = shortest_hole(g)) {
    auto& h = *hole;
    if (h.size() == 4) {
      out.obstruction = "C4";
      out.witness = h;
    } else if (h.size() == 5) {
      out.obstruction = "C5";
      out.witness = h;
    } else {
      out.obstruction = "2P2";
      out.witness = {h[0], h[1], h[3], h[4]};
    }
    return out;
  }
  Graph co = complement(g);
  auto hole = shortest_hole(co);
  if (!hole) throw std::logic_error("non-split graph with chordal complement");
  auto& h = *hole;
  if (h.size() == 4) {
    out.obstruction = "2P2";
    out.witness = {h[0], h[1], h[2], h[3]};
  } else if (h.size() == 5) {
    out.obstruction = "C5";
    out.witness = h;
  } else {
    out.obstruction = "C4";
    out.witness = {h[0], h[1], h[3], h[4]};
  }
  return out;
}

inline std::optional<SplitPartition> split_partition(const Graph& g) { return check_split(g).partition; }

// ---------------------------------------------------------------------------
// Holes of length at least min_len (exhaustive induced-path search)

inline std::optional<std::vector<Vertex>> find_hole_at_least(const Graph& g, int min_len) {
  const int n = g.n();
  std::vector<Vertex> path;
  std::optional<std::vector<Vertex>> found;

  // path[0] is the smallest cycle vertex; extend with larger vertices only
  auto rec = [&](auto&& self) -> bool {
    Vertex s = path.front(), last = path.back();
    VertexSet cand = g.neighbours(last);
    for (Vertex w = cand.first(); w != -1; w = cand.next(w)) {
      if (w <= s) continue;
      bool on_path = std::find(path.begin(), path.end(), w) != path.end();
      if (on_path) continue;
      // w must avoid every path vertex except last (and s when closing)
      bool bad = false;
      for (std::size_t i = 1; i + 1 < path.size() && !bad; ++i)
        if (g.adjacent(w, path[i])) bad = true;
      if (bad) continue;
      bool closes = path.size() >= 2 && g.adjacent(w, s);
      if (closes) {
        if (static_cast<int>(path.size()) + 1 >= min_len) {
          found = path;
          found->push_back(w);
          return true;
        }
        continue;
      }
      path.push_back(w);
      if (self(self)) return true;
      path.pop_back();
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    if (rec(rec)) return found;
  }
  return std::nullopt;
}

inline bool is_weakly_chordal(const Graph& g) {
  return !find_hole_at_least(g, 5) && !find_hole_at_least(complement(g), 5);
}

// ---------------------------------------------------------------------------
// k-webs

struct KWeb {
  int k = 0;
  std::vector<Vertex> xs, ys;
};

/// Definitional check: cliques X and Y, x_i ~ y_j iff i < j, covering V.
inline bool is_kweb(const Graph& g, const KWeb& w) {
  if (w.k < 1 || static_cast<int>(w.xs.size()) != w.k || static_cast<int>(w.ys.size()) != w.k || g.n() != 2 * w.k)
    return false;
  VertexSet seen(g.n());
  for (Vertex v : w.xs) seen.insert(v);
  for (Vertex v : w.ys) seen.insert(v);
  if (seen.size() != 2 * w.k) return false;
  if (!g.is_clique(VertexSet(g.n(), w.xs)) || !g.is_clique(VertexSet(g.n(), w.ys))) return false;
  for (int i = 0; i < w.k; ++i)
    for (int j = 0; j < w.k; ++j)
      if (g.adjacent(w.xs[static_cast<std::size_t>(i)], w.ys[static_cast<std::size_t>(j)]) != (i < j)) return false;
  return true;
}

/// The k-web graph with x_i = i-1 and y_j = k+j-1.
inline Graph kweb_graph(int k) {
  GraphBuilder b(2 * k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      b.add_edge(i, j);
      b.add_edge(k + i, k + j);
    }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) b.add_edge(i, k + j);
  return b.build();
}

inline std::optional<KWeb> detect_kweb(const Graph& g) {
  const int n = g.n();
  if (n < 4 || n % 2) return std::nullopt;
  Graph co = complement(g);
  if (!is_connected(co)) return std::nullopt;
  // 2-colour the complement
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack{0};
  side[0] = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    bool clash = false;
    co.neighbours(v).for_each([&](Vertex w) {
      auto wi = static_cast<std::size_t>(w);
      if (side[wi] == -1) {
        side[wi] = 1 - side[static_cast<std::size_t>(v)];
        stack.push_back(w);
      } else if (side[wi] == side[static_cast<std::size_t>(v)]) {
        clash = true;
      }
    });
    if (clash) return std::nullopt;
  }
  KWeb w;
  for (Vertex v = 0; v < n; ++v) (side[static_cast<std::size_t>(v)] == 0 ? w.xs : w.ys).push_back(v);
  if (w.xs.size() != w.ys.size()) return std::nullopt;
  w.k = n / 2;
  VertexSet xset(n, w.xs), yset(n, w.ys);
  auto cross = [&](Vertex v, const VertexSet& other) { return g.neighbours(v).intersection_size(other); };
  std::stable_sort(w.xs.begin(), w.xs.end(), [&](Vertex a, Vertex b) { return cross(a, yset) > cross(b, yset); });
  std::stable_sort(w.ys.begin(), w.ys.end(), [&](Vertex a, Vertex b) { return cross(a, xset) < cross(b, xset); });
  if (!is_kweb(g, w)) return std::nullopt;
  return w;
}

// ---------------------------------------------------------------------------
// Spiders

enum class SpiderKind { Thin, Thick };

struct Spider {
  SpiderKind kind = SpiderKind::Thin;
  // body[j] is matched to feet[j]; body is K, feet is I
  std::vector<Vertex> body, feet;
  VertexSet rest;
};

/// Definitional validator for both kinds.
inline bool is_spider(const Graph& g, const Spider& s) {
  const int n = g.n();
  if (s.body.size() != s.feet.size() || s.body.size() < 2) return false;
  VertexSet k(n, s.body), i(n, s.feet);
  if (k.size() != static_cast<int>(s.body.size()) || i.size() != static_cast<int>(s.feet.size())) return false;
  if (k.intersects(i) || k.intersects(s.rest) || i.intersects(s.rest) || (k | i | s.rest) != g.vertices()) return false;
  const bool thin = s.kind == SpiderKind::Thin;
  if (thin ? !(g.is_clique(k) && g.is_independent(i)) : !(g.is_independent(k) && g.is_clique(i))) return false;
  for (std::size_t a = 0; a < s.body.size(); ++a)
    for (std::size_t b = 0; b < s.feet.size(); ++b)
      if (g.adjacent(s.body[a], s.feet[b]) != (thin ? a == b : a != b)) return false;
  if (thin) return g.complete_to(s.rest, k) && g.anticomplete_to(s.rest, i);
  return g.complete_to(s.rest, i) && g.anticomplete_to(s.rest, k);
}

namespace detail {

inline std::optional<Spider> detect_thin(const Graph& g) {
  const int n = g.n();
  Spider s;
  s.kind = SpiderKind::Thin;
  VertexSet kset(n);
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 1) {
      Vertex u = g.neighbours(v).first();
      if (kset.contains(u)) return std::nullopt;
      kset.insert(u);
      s.feet.push_back(v);
      s.body.push_back(u);
    }
  if (s.feet.size() < 2) return std::nullopt;
  s.rest = g.vertices() - kset - VertexSet(n, s.feet);
  if (!is_spider(g, s)) return std::nullopt;
  return s;
}

}  // namespace detail

/// Thin spiders are tried first. With assume_prime the |R| <= 1 condition
/// that every prime spider satisfies is also enforced.
inline std::optional<Spider> detect_spider(const Graph& g, bool assume_prime = false) {
  std::optional<Spider> s = detail::detect_thin(g);
  if (!s) {
    s = detail::detect_thin(complement(g));
    if (s) s->kind = SpiderKind::Thick;
  }
  if (s && assume_prime && s->rest.size() > 1) return std::nullopt;
  return s;
}

/// Thick spider with K = {k_1..k_p} = ids p..2p-1, I = {i_1..i_p} = ids
/// 0..p-1, and an optional rest vertex 2p.
inline Graph thick_spider_graph(int p, bool with_rest) {
  GraphBuilder b(2 * p + (with_rest ? 1 : 0));
  for (int a = 0; a < p; ++a)
    for (int c = a + 1; c < p; ++c) b.add_edge(a, c);
  for (int a = 0; a < p; ++a)
    for (int c = 0; c < p; ++c)
      if (a != c) b.add_edge(a, p + c);
  if (with_rest)
    for (int a = 0; a < p; ++a) b.add_edge(2 * p, a);
  return b.build();
}

// ---------------------------------------------------------------------------
// Pendant / twin pruning (distance-hereditary certificate)

enum class PruneReason { Pendant, TrueTwin, FalseTwin };

inline const char* to_string(PruneReason r) {
  switch (r) {
    case PruneReason::Pendant: return "pendant";
    case PruneReason::TrueTwin: return "true-twin";
    case PruneReason::FalseTwin: return "false-twin";
  }
  return "?";
}

struct PruneStep {
  Vertex vertex;
  PruneReason reason;
  Vertex other;  // attachment vertex or twin
};

struct PruningSequence {
  std::vector<PruneStep> steps;
  Vertex last = -1;
};

inline std::optional<PruningSequence> pruning_sequence(const Graph& g) {
  const int n = g.n();
  if (n == 0) return std::nullopt;
  if (!is_connected(g)) throw PreconditionError("pruning sequence needs a connected graph");
  VertexSet alive = g.vertices();
  PruningSequence seq;
  while (alive.size() > 1) {
    bool removed = false;
    for (Vertex v = alive.first(); v != -1 && !removed; v = alive.next(v)) {
      VertexSet nv = g.neighbours(v) & alive;
      if (nv.size() == 1) {
        seq.steps.push_back({v, PruneReason::Pendant, nv.first()});
        alive.erase(v);
        removed = true;
        break;
      }
      for (Vertex u = alive.first(); u != -1; u = alive.next(u)) {
        if (u == v || !g.adjacent(u, v)) continue;
        VertexSet nu = g.neighbours(u) & alive;
        VertexSet a = nv, b = nu;
        a.erase(u);
        b.erase(v);
        if (a == b) {
          seq.steps.push_back({v, PruneReason::TrueTwin, u});
          alive.erase(v);
          removed = true;
          break;
        }
      }
      if (removed) break;
      for (Vertex u = alive.first(); u != -1; u = alive.next(u)) {
        if (u == v || g.adjacent(u, v)) continue;
        if ((g.neighbours(u) & alive) == nv) {
          seq.steps.push_back({v, PruneReason::FalseTwin, u});
          alive.erase(v);
          removed = true;
          break;
        }
      }
    }
    if (!removed) return std::nullopt;
  }
  seq.last = alive.first();
  return seq;
}

/// Replays the sequence, checking each stated reason at elimination time.
inline bool replay_pruning(const Graph& g, const PruningSequence& seq) {
  VertexSet alive = g.vertices();
  for (const auto& st : seq.steps) {
    if (st.vertex < 0 || st.vertex >= g.n() || st.other < 0 || st.other >= g.n()) return false;
    if (!alive.contains(st.vertex) || !alive.contains(st.other) || st.vertex == st.other) return false;
    VertexSet nv = g.neighbours(st.vertex) & alive, nu = g.neighbours(st.other) & alive;
    switch (st.reason) {
      case PruneReason::Pendant:
        if (nv != VertexSet(g.n(), {st.other})) return false;
        break;
      case PruneReason::TrueTwin:
        if (!g.adjacent(st.vertex, st.other)) return false;
        nv.erase(st.other);
        nu.erase(st.vertex);
        if (nv != nu) return false;
        break;
      case PruneReason::FalseTwin:
        if (g.adjacent(st.vertex, st.other) || nv != nu) return false;
        break;
    }
    alive.erase(st.vertex);
  }
  return alive.size() == 1 && alive.contains(seq.last);
}

/// One record per line: "<vertex> <reason> <other>", then "last <vertex>".
inline std::string serialize(const PruningSequence& seq) {
  std::ostringstream os;
  for (const auto& st : seq.steps) os << st.vertex << ' ' << to_string(st.reason) << ' ' << st.other << '\n';
  os << "last " << seq.last << '\n';
  return os.str();
}

inline bool is_distance_hereditary(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    if (!pruning_sequence(sub.graph)) return false;
  }
  return true;
}

}  // namespace cwc
