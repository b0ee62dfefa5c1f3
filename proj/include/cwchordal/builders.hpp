#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "chordal.hpp"
#include "cwexpr.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "iso.hpp"
#include "modular.hpp"
#include "recognize.hpp"

namespace cwc {

struct BuildReport {
  CwExpr expression;
  int claimed_bound = 0;
  std::string method;
  std::vector<std::pair<int, std::string>> trace;  // (prime MD node id, route)
};

/// Text form: "bound <b>", "method <m>", one "trace <node> <route>" per
/// prime node, then "expr <s-expression>".
inline std::string serialize(const BuildReport& r) {
  std::ostringstream os;
  os << "bound " << r.claimed_bound << '\n' << "method " << r.method << '\n';
  for (const auto& [node, route] : r.trace) os << "trace " << node << ' ' << route << '\n';
  os << "expr " << serialize(r.expression) << '\n';
  return os.str();
}

namespace detail {

inline BuildReport checked(const Graph& g, CwExpr e, int bound, std::string method,
                           std::vector<std::pair<int, std::string>> trace = {}) {
  if (!validate(e, g)) throw std::logic_error(method + " builder produced an expression for a different graph");
  int w = width(e);
  if (w > bound)
    throw std::logic_error(method + " builder used " + std::to_string(w) + " labels, bound is " + std::to_string(bound));
  return {std::move(e), bound, std::move(method), std::move(trace)};
}

inline CwExpr union_all(const std::vector<CwExpr>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty union");
  CwExpr e = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) e = CwExpr::unite(parts[i], e);
  return e;
}

inline void require_free_of(const Graph& g, const std::string& name) {
  if (auto w = induced_subgraph_isomorphic(catalog_lookup(name), g))
    throw PreconditionError("graph contains an induced " + name, *w);
}

inline std::vector<Vertex> find_cycle(const Graph& g) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.n()), -2);
  for (Vertex r = 0; r < g.n(); ++r) {
    if (parent[static_cast<std::size_t>(r)] != -2) continue;
    parent[static_cast<std::size_t>(r)] = -1;
    std::vector<Vertex> stack{r};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w = g.neighbours(v).first(); w != -1; w = g.neighbours(v).next(w)) {
        if (w == parent[static_cast<std::size_t>(v)]) continue;
        if (parent[static_cast<std::size_t>(w)] == -2) {
          parent[static_cast<std::size_t>(w)] = v;
          stack.push_back(w);
          continue;
        }
        // non-tree edge vw closes a cycle through the tree paths to their meeting point
        std::vector<Vertex> up_v, up_w;
        for (Vertex x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) up_v.push_back(x);
        for (Vertex x = w; x != -1; x = parent[static_cast<std::size_t>(x)]) up_w.push_back(x);
        while (up_v.size() > 1 && up_w.size() > 1 && up_v[up_v.size() - 2] == up_w[up_w.size() - 2]) {
          up_v.pop_back();
          up_w.pop_back();
        }
        std::vector<Vertex> cyc(up_v.begin(), up_v.end());
        for (std::size_t i = up_w.size() - 1; i-- > 0;) cyc.push_back(up_w[i]);
        std::reverse(cyc.begin() + static_cast<std::ptrdiff_t>(up_v.size()), cyc.end());
        return cyc;
      }
    }
  }
  return {};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Forests

namespace detail {

// Subtree of v (parent p): v labelled 2, every other vertex labelled 1.
inline CwExpr forest_sub(const Graph& g, Vertex v, Vertex p) {
  std::vector<CwExpr> kids;
  g.neighbours(v).for_each([&](Vertex c) {
    if (c != p) kids.push_back(forest_sub(g, c, v));
  });
  if (kids.empty()) return CwExpr::leaf(2, v);
  CwExpr e = CwExpr::unite(CwExpr::leaf(3, v), union_all(kids));
  e = CwExpr::join(3, 2, e);
  e = CwExpr::rename(2, 1, e);
  return CwExpr::rename(3, 2, e);
}

inline CwExpr forest_expr(const Graph& g) {
  std::vector<CwExpr> comps;
  for (const auto& comp : connected_components(g)) {
    Vertex root = comp.first();
    comps.push_back(comp.size() == 1 ? CwExpr::leaf(1, root) : forest_sub(g, root, -1));
  }
  return union_all(comps);
}

}  // namespace detail

inline BuildReport build_forest_expr(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  if (!is_forest(g)) throw PreconditionError("graph has a cycle", detail::find_cycle(g));
  return detail::checked(g, detail::forest_expr(g), 3, "forest");
}

// ---------------------------------------------------------------------------
// Cographs

namespace detail {

inline CwExpr swap_labels_12(const CwExpr& e) {
  return relabel(e, [](int l) { return l == 1 ? 2 : l == 2 ? 1 : l; });
}

// All vertices end with label 1.
inline CwExpr cograph_node(const MdTree& t, int id) {
  const MdNode& nd = t.at(id);
  if (nd.kind == MdKind::Leaf) return CwExpr::leaf(1, nd.vertex);
  if (nd.kind == MdKind::Prime) throw std::invalid_argument("prime node in cograph builder");
  std::vector<CwExpr> kids;
  for (int c : nd.children) kids.push_back(cograph_node(t, c));
  if (nd.kind == MdKind::Parallel) return union_all(kids);
  CwExpr e = kids.front();
  for (std::size_t i = 1; i < kids.size(); ++i) {
    e = CwExpr::unite(e, swap_labels_12(kids[i]));
    e = CwExpr::join(1, 2, e);
    e = CwExpr::rename(2, 1, e);
  }
  return e;
}

inline bool is_cograph_tree(const MdTree& t) {
  return std::none_of(t.nodes.begin(), t.nodes.end(), [](const MdNode& n) { return n.kind == MdKind::Prime; });
}

}  // namespace detail

inline bool is_cograph(const Graph& g) { return g.n() == 0 || detail::is_cograph_tree(modular_decomposition(g)); }

inline BuildReport build_cograph_expr(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  MdTree t = modular_decomposition(g);
  if (!detail::is_cograph_tree(t)) {
    auto w = induced_subgraph_isomorphic(path_graph(4), g);
    throw PreconditionError("graph contains an induced P4", w ? *w : std::vector<Vertex>{});
  }
  return detail::checked(g, detail::cograph_node(t, t.root), 2, "cograph");
}

// ---------------------------------------------------------------------------
// k-webs

namespace detail {

inline CwExpr kweb_expr(const KWeb& w) {
  const int k = w.k;
  auto x = [&](int j) { return w.xs[static_cast<std::size_t>(j - 1)]; };
  auto y = [&](int j) { return w.ys[static_cast<std::size_t>(j - 1)]; };
  CwExpr e = CwExpr::unite(CwExpr::leaf(1, x(k)), CwExpr::leaf(2, y(k)));
  for (int j = k - 1; j >= 1; --j) {
    e = CwExpr::unite(e, CwExpr::leaf(3, x(j)));
    e = CwExpr::join(3, 1, e);
    e = CwExpr::join(3, 2, e);
    e = CwExpr::rename(3, 1, e);
    e = CwExpr::unite(e, CwExpr::leaf(3, y(j)));
    e = CwExpr::join(3, 2, e);
    e = CwExpr::rename(3, 2, e);
  }
  return e;
}

}  // namespace detail

inline BuildReport build_kweb_expr(const Graph& g, const KWeb& w) {
  if (!is_kweb(g, w)) throw PreconditionError("not a k-web ordering of the graph");
  return detail::checked(g, detail::kweb_expr(w), 3, "kweb");
}

/// Builds from the ordering alone; ids in xs and ys must be exactly 0..2k-1.
inline BuildReport build_kweb_expr(const KWeb& w) {
  if (w.k < 1) throw std::invalid_argument("k must be positive");
  GraphBuilder b(2 * w.k);
  auto in_range = [&](Vertex v) { return v >= 0 && v < 2 * w.k; };
  if (!std::all_of(w.xs.begin(), w.xs.end(), in_range) || !std::all_of(w.ys.begin(), w.ys.end(), in_range))
    throw std::invalid_argument("k-web vertex ids must be 0..2k-1");
  for (int i = 0; i < w.k; ++i)
    for (int j = 0; j < w.k; ++j) {
      auto xi = w.xs[static_cast<std::size_t>(i)], xj = w.xs[static_cast<std::size_t>(j)];
      auto yi = w.ys[static_cast<std::size_t>(i)], yj = w.ys[static_cast<std::size_t>(j)];
      if (i < j) {
        b.add_edge(xi, xj);
        b.add_edge(yi, yj);
        b.add_edge(xi, yj);
      }
    }
  return build_kweb_expr(b.build(), w);
}

// ---------------------------------------------------------------------------
// Thick spiders

namespace detail {

inline CwExpr thick_spider_expr(const Spider& s) {
  const auto p = s.body.size();
  auto i = [&](std::size_t j) { return s.feet[j - 1]; };
  auto k = [&](std::size_t j) { return s.body[j - 1]; };
  CwExpr e = CwExpr::unite(CwExpr::leaf(1, i(1)), CwExpr::leaf(2, k(1)));
  for (std::size_t j = 1; j < p; ++j) {
    e = CwExpr::unite(e, CwExpr::unite(CwExpr::leaf(3, i(j + 1)), CwExpr::leaf(4, k(j + 1))));
    e = CwExpr::join(2, 3, e);
    e = CwExpr::join(1, 4, e);
    e = CwExpr::join(1, 3, e);
    e = CwExpr::rename(4, 2, e);
    e = CwExpr::rename(3, 1, e);
  }
  if (!s.rest.empty()) {
    e = CwExpr::unite(e, CwExpr::leaf(4, s.rest.first()));
    e = CwExpr::join(1, 4, e);
  }
  return e;
}

}  // namespace detail

inline BuildReport build_thick_spider_expr(const Graph& g, const Spider& s) {
  if (s.kind != SpiderKind::Thick) throw PreconditionError("spider is thin");
  if (s.rest.size() > 1) throw PreconditionError("spider has more than one rest vertex", s.rest.to_vector());
  if (!is_spider(g, s)) throw PreconditionError("not a spider partition of the graph");
  return detail::checked(g, detail::thick_spider_expr(s), 4, "spider");
}

namespace detail {

inline std::optional<Spider> detect_thick(const Graph& g) {
  auto s = detect_thin(complement(g));
  if (s) s->kind = SpiderKind::Thick;
  return s;
}

}  // namespace detail

inline BuildReport build_thick_spider_expr(const Graph& g) {
  auto s = detail::detect_thick(g);
  if (!s) throw PreconditionError("graph is not a thick spider");
  return build_thick_spider_expr(g, *s);
}

// ---------------------------------------------------------------------------
// Distance-hereditary graphs

namespace detail {

struct SplitTree {
  struct Node {
    int left = -1, right = -1;
    Vertex v = -1;
  };
  std::vector<Node> nodes;
  int root = 0;
};

// Replays a pruning sequence backwards: re-adding v next to u splits u's leaf
// into the pair (u, v). Every subtree X of the result has a homogeneous
// frontier: the vertices of X with neighbours outside X all see the same
// outside neighbourhood.
inline SplitTree split_tree(const Graph& g, const PruningSequence& seq) {
  SplitTree t;
  std::vector<int> leaf_of(static_cast<std::size_t>(g.n()), -1);
  t.nodes.push_back({-1, -1, seq.last});
  leaf_of[static_cast<std::size_t>(seq.last)] = 0;
  for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it) {
    int at = leaf_of[static_cast<std::size_t>(it->other)];
    int lu = static_cast<int>(t.nodes.size());
    t.nodes.push_back({-1, -1, it->other});
    int lv = static_cast<int>(t.nodes.size());
    t.nodes.push_back({-1, -1, it->vertex});
    t.nodes[static_cast<std::size_t>(at)] = {lu, lv, -1};
    leaf_of[static_cast<std::size_t>(it->other)] = lu;
    leaf_of[static_cast<std::size_t>(it->vertex)] = lv;
  }
  return t;
}

class DhBuilder {
 public:
  DhBuilder(const Graph& g, const SplitTree& t) : g_(g), t_(t) {
    sets_.resize(t.nodes.size());
    fill(t.root);
  }

  // Whole component: no frontier, everything ends with the dead label 2.
  CwExpr build() { return node(t_.root, 1).first; }

 private:
  static constexpr int kDead = 2;

  VertexSet fill(int id) {
    const auto& nd = t_.nodes[static_cast<std::size_t>(id)];
    VertexSet s(g_.n());
    if (nd.left == -1)
      s.insert(nd.v);
    else
      s = fill(nd.left) | fill(nd.right);
    sets_[static_cast<std::size_t>(id)] = s;
    return s;
  }

  VertexSet frontier(int id) const {
    const VertexSet& x = sets_[static_cast<std::size_t>(id)];
    VertexSet f(g_.n());
    x.for_each([&](Vertex v) {
      if (!g_.neighbours(v).is_subset_of(x)) f.insert(v);
    });
    return f;
  }

  // Expression for subtree id: frontier labelled f, the rest labelled 2.
  // Returns the expression and whether any vertex carries f.
  std::pair<CwExpr, bool> node(int id, int f) {
    const auto& nd = t_.nodes[static_cast<std::size_t>(id)];
    VertexSet fx = frontier(id);
    if (nd.left == -1) return {CwExpr::leaf(fx.empty() ? kDead : f, nd.v), !fx.empty()};
    const int s = f == 1 ? 3 : 1;
    auto [e1, has1] = node(nd.left, f);
    auto [e2, has2] = node(nd.right, s);
    VertexSet f1 = frontier(nd.left), f2 = frontier(nd.right);
    check_homogeneous(nd.left, f1);
    check_homogeneous(nd.right, f2);
    CwExpr e = CwExpr::unite(e1, e2);
    if (has1 && has2 && g_.adjacent(f1.first(), f2.first())) e = CwExpr::join(f, s, e);
    bool keep1 = has1 && f1.intersects(fx);
    bool keep2 = has2 && f2.intersects(fx);
    if (has1 && !keep1) e = CwExpr::rename(f, kDead, e);
    if (has2) e = CwExpr::rename(s, keep2 ? f : kDead, e);
    return {e, keep1 || keep2};
  }

  void check_homogeneous(int id, const VertexSet& f) const {
    if (f.empty()) return;
    const VertexSet& x = sets_[static_cast<std::size_t>(id)];
    VertexSet want = g_.neighbours(f.first()) - x;
    f.for_each([&](Vertex v) {
      if ((g_.neighbours(v) - x) != want) throw std::logic_error("split tree node with an inhomogeneous frontier");
    });
  }

  const Graph& g_;
  const SplitTree& t_;
  std::vector<VertexSet> sets_;
};

inline std::vector<Vertex> dh_obstruction(const Graph& g) {
  if (auto h = find_hole_at_least(g, 5)) return *h;
  for (const char* name : {"house", "gem", "domino"})
    if (auto w = induced_subgraph_isomorphic(catalog_lookup(name), g)) return *w;
  return {};
}

inline CwExpr dh_expr(const Graph& g) {
  std::vector<CwExpr> comps;
  for (const auto& comp : connected_components(g)) {
    Deletion sub = induced_subgraph(g, comp);
    auto seq = pruning_sequence(sub.graph);
    if (!seq) {
      auto w = dh_obstruction(sub.graph);
      for (auto& v : w) v = sub.old_id[static_cast<std::size_t>(v)];
      throw PreconditionError("graph is not distance-hereditary", w);
    }
    SplitTree t = split_tree(sub.graph, *seq);
    CwExpr e = DhBuilder(sub.graph, t).build();
    comps.push_back(relabel_vertices(e, sub.old_id));
  }
  return union_all(comps);
}

}  // namespace detail

inline BuildReport build_dh_expr(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  return detail::checked(g, detail::dh_expr(g), 3, "dh");
}

// ---------------------------------------------------------------------------
// Maximum degree two

inline BuildReport build_maxdeg2_expr(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) > 2) {
      auto w = g.neighbours(v).to_vector();
      w.insert(w.begin(), v);
      throw PreconditionError("vertex of degree at least 3", w);
    }
  std::vector<CwExpr> comps;
  for (const auto& comp : connected_components(g)) {
    Deletion sub = induced_subgraph(g, comp);
    if (is_forest(sub.graph)) {
      comps.push_back(relabel_vertices(detail::forest_expr(sub.graph), sub.old_id));
      continue;
    }
    // cycle: first vertex keeps 1, current end 3, finished 2, new vertex 4
    std::vector<Vertex> cyc{comp.first()};
    Vertex prev = -1, cur = comp.first();
    while (true) {
      Vertex nxt = -1;
      g.neighbours(cur).for_each([&](Vertex w) {
        if (nxt == -1 && w != prev) nxt = w;
      });
      if (nxt == cyc.front()) break;
      cyc.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    CwExpr e = CwExpr::join(1, 3, CwExpr::unite(CwExpr::leaf(1, cyc[0]), CwExpr::leaf(3, cyc[1])));
    for (std::size_t i = 2; i < cyc.size(); ++i) {
      e = CwExpr::unite(e, CwExpr::leaf(4, cyc[i]));
      e = CwExpr::join(3, 4, e);
      e = CwExpr::rename(3, 2, e);
      e = CwExpr::rename(4, 3, e);
    }
    comps.push_back(CwExpr::join(1, 3, e));
  }
  return detail::checked(g, detail::union_all(comps), 4, "maxdeg2");
}

// ---------------------------------------------------------------------------
// Chordal graphs via the elimination tree

inline int cliquetree_bound(int omega) {
  if (omega <= 1) return 1;
  return 3 * (1 << (omega - 2));
}

namespace detail {

// Elimination tree of a PEO: parent(v) is the earliest later neighbour.
// The outside neighbours of the subtree T(c) all lie in P(c), the later
// neighbours of c, and each vertex w of T(c) is labelled by its signature
// N(w) & P(c).
class CliqueTreeBuilder {
 public:
  CliqueTreeBuilder(const Graph& g, const Peo& peo, int omega) : g_(g), omega_(omega) {
    pos_ = order_positions(g, peo);
    later_.reserve(static_cast<std::size_t>(g.n()));
    children_.resize(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) later_.push_back(later_neighbours(g, pos_, v));
    for (Vertex v : peo) {
      const VertexSet& l = later_[static_cast<std::size_t>(v)];
      if (l.empty()) {
        roots_.push_back(v);
        continue;
      }
      Vertex p = -1;
      l.for_each([&](Vertex w) {
        if (p == -1 || pos_[static_cast<std::size_t>(w)] < pos_[static_cast<std::size_t>(p)]) p = w;
      });
      children_[static_cast<std::size_t>(p)].push_back(v);
    }
    subtree_.assign(static_cast<std::size_t>(g.n()), VertexSet(g.n()));
    for (Vertex v : peo) {
      subtree_[static_cast<std::size_t>(v)].insert(v);
      for (Vertex c : children_[static_cast<std::size_t>(v)]) subtree_[static_cast<std::size_t>(v)] |= subtree_[static_cast<std::size_t>(c)];
    }
  }

  CwExpr build() {
    std::vector<CwExpr> comps;
    for (Vertex r : roots_) {
      std::map<std::vector<Vertex>, int> target{{{}, 1}};
      comps.push_back(node(r, target));
    }
    return union_all(comps);
  }

 private:
  std::vector<Vertex> signature(Vertex w, const VertexSet& p) const { return (g_.neighbours(w) & p).to_vector(); }

  std::set<std::vector<Vertex>> signatures(Vertex c) const {
    const VertexSet& p = later_[static_cast<std::size_t>(c)];
    const VertexSet& t = subtree_[static_cast<std::size_t>(c)];
    std::set<std::vector<Vertex>> out;
    t.for_each([&](Vertex w) {
      if (!(g_.neighbours(w) - t).is_subset_of(p)) throw std::logic_error("subtree has a neighbour outside P(c)");
      out.insert(signature(w, p));
    });
    return out;
  }

  static int smallest_free(const std::set<int>& used) {
    int l = 1;
    while (used.count(l)) ++l;
    return l;
  }

  // Expression for T(c) in which vertex w ends with label target[N(w) & P(c)].
  CwExpr node(Vertex c, const std::map<std::vector<Vertex>, int>& target) {
    const VertexSet& p = later_[static_cast<std::size_t>(c)];
    std::set<int> reserved;
    for (const auto& [sig, l] : target) reserved.insert(l);
    const auto full_sig = p.to_vector();
    const bool shares = p.size() == omega_ - 1;
    int lc = shares ? target.at(full_sig) : smallest_free(reserved);
    CwExpr e = CwExpr::leaf(lc, c);
    std::set<int> busy = reserved;
    busy.insert(lc);
    for (Vertex d : children_[static_cast<std::size_t>(c)]) {
      std::map<std::vector<Vertex>, int> child_target;
      std::vector<std::pair<int, std::vector<Vertex>>> with_c;  // temp label, signature minus c
      std::set<int> used = busy;
      for (const auto& sig : signatures(d)) {
        std::vector<Vertex> rest;
        for (Vertex v : sig)
          if (v != c) rest.push_back(v);
        if (rest.size() == sig.size()) {
          child_target[sig] = target.at(rest);
        } else {
          int tmp = smallest_free(used);
          used.insert(tmp);
          child_target[sig] = tmp;
          with_c.emplace_back(tmp, rest);
        }
      }
      e = CwExpr::unite(e, node(d, child_target));
      for (const auto& [tmp, rest] : with_c) {
        e = CwExpr::join(tmp, lc, e);
        e = CwExpr::rename(tmp, target.at(rest), e);
      }
    }
    if (lc != target.at(full_sig)) e = CwExpr::rename(lc, target.at(full_sig), e);
    return e;
  }

  const Graph& g_;
  int omega_;
  std::vector<int> pos_;
  std::vector<VertexSet> later_, subtree_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> roots_;
};

}  // namespace detail

inline BuildReport build_cliquetree_expr(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  auto chk = check_chordal(g);
  if (!chk.peo) throw PreconditionError("graph is not chordal", chk.hole);
  const int omega = max_clique_chordal(g, *chk.peo).size();
  if (omega == g.n()) {
    auto t = modular_decomposition(g);
    return detail::checked(g, detail::cograph_node(t, t.root), std::min(2, g.n()), "cliquetree");
  }
  CwExpr e = detail::CliqueTreeBuilder(g, *chk.peo, omega).build();
  return detail::checked(g, e, cliquetree_bound(omega), "cliquetree");
}

// ---------------------------------------------------------------------------
// Composite builders over the modular decomposition

namespace detail {

using PrimeRoute = std::function<std::pair<CwExpr, std::string>(const Graph& quotient)>;

inline CwExpr md_compose(const MdTree& t, int id, const PrimeRoute& prime,
                         std::vector<std::pair<int, std::string>>& trace) {
  const MdNode& nd = t.at(id);
  if (nd.kind == MdKind::Leaf) return CwExpr::leaf(1, nd.vertex);
  std::map<Vertex, CwExpr> parts;
  for (std::size_t i = 0; i < nd.children.size(); ++i)
    parts.emplace(static_cast<Vertex>(i), md_compose(t, nd.children[i], prime, trace));
  CwExpr q = CwExpr::leaf(1, 0);
  if (nd.kind == MdKind::Prime) {
    auto [e, route] = prime(nd.quotient);
    trace.emplace_back(id, route);
    q = e;
  } else {
    MdTree qt = modular_decomposition(nd.quotient);
    q = cograph_node(qt, qt.root);
  }
  return substitute_modules(q, parts);
}

}  // namespace detail

inline BuildReport build_bullfree_chordal(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  require_chordal(g);
  detail::require_free_of(g, "bull");
  MdTree t = modular_decomposition(g);
  std::vector<std::pair<int, std::string>> trace;
  detail::PrimeRoute route = [](const Graph& q) -> std::pair<CwExpr, std::string> {
    if (is_forest(q)) return {detail::forest_expr(q), "forest"};
    if (auto w = detect_kweb(q)) return {detail::kweb_expr(*w), "kweb"};
    throw ClaimViolation("prime bull-free chordal graph is a forest or a k-web", {});
  };
  CwExpr e = detail::md_compose(t, t.root, route, trace);
  return detail::checked(g, e, 3, "bullfree", trace);
}

inline BuildReport build_cochair_chordal(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  require_chordal(g);
  detail::require_free_of(g, "co-chair");
  MdTree t = modular_decomposition(g);
  std::vector<std::pair<int, std::string>> trace;
  const Graph diamond = catalog_lookup("diamond");
  detail::PrimeRoute route = [&](const Graph& q) -> std::pair<CwExpr, std::string> {
    bool diamond_free = !contains_induced(q, diamond);
    auto thick = detail::detect_thick(q);
    if (thick && thick->rest.size() > 1) thick.reset();
    if (!diamond_free && !thick)
      throw ClaimViolation("prime co-chair-free chordal graph is diamond-free or a thick spider", {});
    if (auto seq = pruning_sequence(q)) return {detail::DhBuilder(q, detail::split_tree(q, *seq)).build(), "dh"};
    if (thick) return {detail::thick_spider_expr(*thick), "spider"};
    throw ClaimViolation("diamond-free prime chordal graph is distance-hereditary", {});
  };
  CwExpr e = detail::md_compose(t, t.root, route, trace);
  return detail::checked(g, e, 4, "cochair", trace);
}

// ---------------------------------------------------------------------------
// One label per vertex; always applicable.

inline BuildReport build_trivial_expr(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  std::vector<CwExpr> leaves;
  for (Vertex v = 0; v < g.n(); ++v) leaves.push_back(CwExpr::leaf(v + 1, v));
  CwExpr e = detail::union_all(leaves);
  for (auto [u, v] : g.edges()) e = CwExpr::join(u + 1, v + 1, e);
  return detail::checked(g, e, g.n(), "trivial");
}

// ---------------------------------------------------------------------------
// Dispatch

inline const std::vector<std::string>& builder_methods() {
  static const std::vector<std::string> m = {"cograph", "forest", "dh",       "kweb",       "bullfree",
                                             "maxdeg2", "spider", "cochair", "cliquetree", "trivial"};
  return m;
}

/// Runs one named builder; throws PreconditionError when the graph is
/// outside the builder's class.
inline BuildReport build_with(const std::string& method, const Graph& g) {
  if (method == "cograph") return build_cograph_expr(g);
  if (method == "forest") return build_forest_expr(g);
  if (method == "dh") return build_dh_expr(g);
  if (method == "kweb") {
    auto w = detect_kweb(g);
    if (!w) throw PreconditionError("graph is not a k-web");
    return build_kweb_expr(g, *w);
  }
  if (method == "bullfree") return build_bullfree_chordal(g);
  if (method == "maxdeg2") return build_maxdeg2_expr(g);
  if (method == "spider") return build_thick_spider_expr(g);
  if (method == "cochair") return build_cochair_chordal(g);
  if (method == "cliquetree") return build_cliquetree_expr(g);
  if (method == "trivial") return build_trivial_expr(g);
  throw std::invalid_argument("unknown build method " + method);
}

/// Bound each applicable builder would claim, in builder_methods() order.
inline std::vector<std::pair<std::string, int>> applicable_builders(const Graph& g) {
  std::vector<std::pair<std::string, int>> out;
  if (g.n() == 0) return out;
  auto chk = check_chordal(g);
  const bool chordal = chk.peo.has_value();
  if (is_cograph(g)) out.emplace_back("cograph", 2);
  if (is_forest(g)) out.emplace_back("forest", 3);
  if (is_distance_hereditary(g)) out.emplace_back("dh", 3);
  if (detect_kweb(g)) out.emplace_back("kweb", 3);
  if (chordal && !contains_induced(g, catalog_lookup("bull"))) out.emplace_back("bullfree", 3);
  if (g.max_degree() <= 2) out.emplace_back("maxdeg2", 4);
  if (auto s = detail::detect_thick(g); s && s->rest.size() <= 1) out.emplace_back("spider", 4);
  if (chordal && !contains_induced(g, catalog_lookup("co-chair"))) out.emplace_back("cochair", 4);
  if (chordal) {
    int omega = max_clique_chordal(g, *chk.peo).size();
    out.emplace_back("cliquetree", omega == g.n() ? std::min(2, g.n()) : cliquetree_bound(omega));
  }
  out.emplace_back("trivial", g.n());
  return out;
}

/// The applicable builder with the smallest claimed bound; ties go to the
/// earlier entry of builder_methods().
inline BuildReport build_auto(const Graph& g) {
  auto cands = applicable_builders(g);
  if (cands.empty()) throw std::invalid_argument("empty graph");
  auto best = std::min_element(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  BuildReport r = build_with(best->first, g);
  if (r.claimed_bound != best->second) throw std::logic_error("builder bound disagrees with dispatch table");
  return r;
}

}  // namespace cwc
