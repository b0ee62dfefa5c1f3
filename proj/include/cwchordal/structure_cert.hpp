#pragma once

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "blocks.hpp"
#include "catalog.hpp"
#include "chordal.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "iso.hpp"
#include "recognize.hpp"

namespace cwc {

// Decomposition certificates for co(K_{1,3}+2P_1)-free chordal graphs.
//
// Replay state: a working graph on the original ids plus a list of pieces
// (vertex sets). Every step names the piece it acts on. A block split
// consumes a piece and appends its blocks; deletions shrink a piece;
// bipartite complementations flip edges of the working graph.

enum class StepKind { BlockSplit, MaxClique, SPartition, Case, VertexDelete, BipartiteComplement };
enum class LeafClass { Clique, Forest, K7FreeChordal, SplitBoundedAttachment };

inline const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::BlockSplit: return "block-split";
    case StepKind::MaxClique: return "max-clique";
    case StepKind::SPartition: return "s-partition";
    case StepKind::Case: return "case";
    case StepKind::VertexDelete: return "delete";
    case StepKind::BipartiteComplement: return "bipartite-complement";
  }
  return "?";
}

inline const char* to_string(LeafClass c) {
  switch (c) {
    case LeafClass::Clique: return "clique";
    case LeafClass::Forest: return "forest";
    case LeafClass::K7FreeChordal: return "K_7-free-chordal";
    case LeafClass::SplitBoundedAttachment: return "split-bounded-attachment";
  }
  return "?";
}

namespace cert_tag {
inline constexpr const char* kSmallClique = "small-clique";
inline constexpr const char* kTwoP2InS = "2P2-in-S";
inline constexpr const char* kSTwoP2Free = "S-2P2-free";
}  // namespace cert_tag

namespace cert_reason {
// bipartite complementation: the first side is complete to the second
inline constexpr const char* kComplete = "complete";
// bipartite complementation: each vertex of the second side misses at most
// one vertex of the first
inline constexpr const char* kMissesAtMostOne = "misses-at-most-one";
}  // namespace cert_reason

struct CertStep {
  StepKind kind = StepKind::MaxClique;
  int piece = 0;
  VertexSet a, b;               // K; S_1,S_2; deleted set; complement sides
  std::vector<VertexSet> sets;  // block split only
  std::string text;             // case tag or reason
};

struct CertLeaf {
  int piece = 0;
  VertexSet vertices;
  LeafClass cls = LeafClass::Clique;
};

struct DecompositionCertificate {
  int n = 0;
  std::vector<CertStep> steps;
  std::vector<CertLeaf> leaves;
};

// ---------------------------------------------------------------------------
// Leaf membership tests

namespace detail {

inline bool bounded_attachment(const Graph& g, const VertexSet& c, const VertexSet& i) {
  if (!g.is_clique(c) || !g.is_independent(i)) return false;
  bool ok = true;
  i.for_each([&](Vertex v) {
    if (g.neighbours(v).intersection_size(c) > 1) ok = false;
  });
  return ok;
}

}  // namespace detail

/// A split partition exists whose independent side has at most one clique
/// neighbour per vertex. Split partitions of a graph differ from any fixed
/// one by moving at most one vertex each way, so all of those are tried.
inline bool is_split_bounded_attachment(const Graph& g) {
  auto p = split_partition(g);
  if (!p) return false;
  const VertexSet& c = p->clique;
  const VertexSet& i = p->independent;
  if (detail::bounded_attachment(g, c, i)) return true;
  std::vector<Vertex> cs = c.to_vector(), is = i.to_vector();
  cs.push_back(-1);
  is.push_back(-1);
  for (Vertex x : cs)
    for (Vertex y : is) {
      VertexSet c2 = c, i2 = i;
      if (x != -1) {
        c2.erase(x);
        i2.insert(x);
      }
      if (y != -1) {
        i2.erase(y);
        c2.insert(y);
      }
      if (detail::bounded_attachment(g, c2, i2)) return true;
    }
  return false;
}

inline bool leaf_passes(const Graph& g, LeafClass cls) {
  switch (cls) {
    case LeafClass::Clique: return g.is_clique(g.vertices());
    case LeafClass::Forest: return is_forest(g);
    case LeafClass::K7FreeChordal: {
      auto peo = chordal_peo(g);
      return peo && (g.n() == 0 || max_clique_chordal(g, *peo).size() <= 6);
    }
    case LeafClass::SplitBoundedAttachment: return is_split_bounded_attachment(g);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Decomposition

namespace detail {

inline VertexSet non_neighbours_in(const Graph& g, Vertex v, const VertexSet& k) { return k - g.neighbours(v); }

inline bool has_induced_2p2(const Graph& g, const VertexSet& s) {
  static const Graph two_p2 = copies(path_graph(2), 2);
  return contains_induced(induced_subgraph(g, s).graph, two_p2);
}

inline std::vector<VertexSet> components_with_edges(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  for (auto& c : connected_components(g, s))
    if (c.size() > 1) out.push_back(c);
  return out;
}

class CertBuilder {
 public:
  explicit CertBuilder(const Graph& g) : w_(g) { cert_.n = g.n(); }

  DecompositionCertificate run() {
    BlockDecomposition bd = blocks(w_);
    if (bd.blocks.size() <= 1) {
      pieces_.push_back(w_.vertices());
      piece(0);
    } else {
      CertStep st{StepKind::BlockSplit, 0, {}, {}, {}, {}};
      for (const auto& b : bd.blocks) st.sets.push_back(b.vertices);
      cert_.steps.push_back(st);
      pieces_.push_back(w_.vertices());
      for (const auto& b : bd.blocks) pieces_.push_back(b.vertices);
      for (std::size_t p = 1; p < pieces_.size(); ++p) piece(static_cast<int>(p));
    }
    return std::move(cert_);
  }

 private:
  void step(StepKind kind, int p, VertexSet a, VertexSet b = {}, std::string text = {}) {
    cert_.steps.push_back({kind, p, std::move(a), std::move(b), {}, std::move(text)});
  }
  void leaf(int p, VertexSet v, LeafClass c) { cert_.leaves.push_back({p, std::move(v), c}); }

  void remove(int p, const VertexSet& d, const std::string& reason) {
    if (d.empty()) return;
    step(StepKind::VertexDelete, p, d, {}, reason);
    pieces_[static_cast<std::size_t>(p)] -= d;
  }

  void complement_sides(int p, const VertexSet& k, const VertexSet& s, const char* reason) {
    if (k.empty() || s.empty()) return;
    step(StepKind::BipartiteComplement, p, k, s, reason);
    w_ = bipartite_complement(w_, k, s);
  }

  void piece(int p) {
    const VertexSet x = pieces_[static_cast<std::size_t>(p)];
    Deletion sub = induced_subgraph(w_, x);
    auto peo = chordal_peo(sub.graph);
    if (!peo) throw std::logic_error("non-chordal piece");
    VertexSet kc = max_clique_chordal(sub.graph, *peo);
    VertexSet k(w_.n());
    kc.for_each([&](Vertex v) { k.insert(sub.old_id[static_cast<std::size_t>(v)]); });
    step(StepKind::MaxClique, p, k);
    if (k.size() <= 6) {
      step(StepKind::Case, p, {}, {}, cert_tag::kSmallClique);
      leaf(p, x, LeafClass::K7FreeChordal);
      return;
    }

    VertexSet s1(w_.n()), s2(w_.n());
    (x - k).for_each([&](Vertex v) {
      int miss = non_neighbours_in(w_, v, k).size();
      if (miss == 1)
        s1.insert(v);
      else if (miss == 2)
        s2.insert(v);
      else if (miss == k.size() || miss == k.size() - 1)
        throw ClaimViolation("every vertex lies in K or has at least two neighbours in K", {v});
      else
        throw ClaimViolation("every vertex of S misses one or two vertices of K", {v});
    });
    step(StepKind::SPartition, p, s1, s2);
    check_claims(k, s1, s2);
    const VertexSet s = s1 | s2;

    if (s.empty()) {
      step(StepKind::Case, p, {}, {}, cert_tag::kSTwoP2Free);
      leaf(p, x, LeafClass::Clique);
      return;
    }
    if (has_induced_2p2(w_, s))
      two_p2_case(p, k, s1, s2);
    else
      two_p2_free_case(p, k, s1, s2);
  }

  void check_claims(const VertexSet& k, const VertexSet& s1, const VertexSet& s2) const {
    auto miss = [&](Vertex v) { return non_neighbours_in(w_, v, k); };
    auto v2 = s2.to_vector();
    for (std::size_t i = 0; i < v2.size(); ++i)
      for (std::size_t j = i + 1; j < v2.size(); ++j) {
        Vertex t = v2[i], u = v2[j];
        if (w_.adjacent(t, u) && miss(t) != miss(u))
          throw ClaimViolation("adjacent S_2 vertices have the same non-neighbours in K", {t, u});
        if (!w_.adjacent(t, u) && !miss(t).intersects(miss(u)))
          throw ClaimViolation("non-adjacent S_2 vertices share a non-neighbour in K", {t, u});
      }
    s1.for_each([&](Vertex a) {
      if (w_.neighbours(a).intersects(s1))
        throw ClaimViolation("S_1 is independent", {a, (w_.neighbours(a) & s1).first()});
      (w_.neighbours(a) & s2).for_each([&](Vertex t) {
        if (!miss(a).intersects(miss(t)))
          throw ClaimViolation("adjacent S_1 and S_2 vertices share a non-neighbour in K", {a, t});
      });
    });
    VertexSet s = s1 | s2;
    Deletion sub = induced_subgraph(w_, s);
    if (!is_forest(sub.graph)) {
      auto cyc = find_cycle_in(sub);
      throw ClaimViolation("G[S] is a forest", cyc);
    }
    // triangles s, t, w with w in K: w is complete to S minus N(s), N(t)
    s.for_each([&](Vertex a) {
      (w_.neighbours(a) & s).for_each([&](Vertex b) {
        if (b < a) return;
        VertexSet far = s - w_.neighbours(a) - w_.neighbours(b);
        far.erase(a);
        far.erase(b);
        (k & w_.neighbours(a) & w_.neighbours(b)).for_each([&](Vertex c) {
          if (!far.is_subset_of(w_.neighbours(c)))
            throw ClaimViolation("a K vertex in a triangle with two S vertices sees the rest of S",
                                 {a, b, c, (far - w_.neighbours(c)).first()});
        });
      });
    });
  }

  static std::vector<Vertex> find_cycle_in(const Deletion& sub) {
    for (auto [u, v] : sub.graph.edges()) {
      VertexSet common = sub.graph.neighbours(u) & sub.graph.neighbours(v);
      if (!common.empty())
        return {sub.old_id[static_cast<std::size_t>(u)], sub.old_id[static_cast<std::size_t>(v)],
                sub.old_id[static_cast<std::size_t>(common.first())]};
    }
    return {};
  }

  void two_p2_case(int p, const VertexSet& k0, const VertexSet& s1, VertexSet s2) {
    step(StepKind::Case, p, {}, {}, cert_tag::kTwoP2InS);
    VertexSet s = s1 | s2;
    auto comps = components_with_edges(w_, s);
    if (comps.size() == 1) {
      Vertex cut = -1;
      comps[0].for_each([&](Vertex v) {
        if (cut != -1) return;
        VertexSet rest = s;
        rest.erase(v);
        if (components_with_edges(w_, rest).size() >= 2) cut = v;
      });
      if (cut == -1) throw ClaimViolation("one deletion in S separates two edges of the S-tree", comps[0].to_vector());
      remove(p, VertexSet(w_.n(), {cut}), "separate-S-tree");
      s.erase(cut);
      s2.erase(cut);
      comps = components_with_edges(w_, s);
    }
    const VertexSet& d1 = comps[0];
    Vertex t = -1;
    (d1 & s2).for_each([&](Vertex v) {
      if (t == -1 && w_.neighbours(v).intersects(d1)) t = v;
    });
    if (t == -1) throw ClaimViolation("every edge of G[S] has an end in S_2", d1.to_vector());
    VertexSet ab = non_neighbours_in(w_, t, k0);
    VertexSet k = k0 - ab;
    if (!w_.complete_to(k, s - d1))
      throw ClaimViolation("K minus two vertices is complete to S outside a non-trivial component", ab.to_vector());
    if (!w_.complete_to(k, s)) throw ClaimViolation("K minus two vertices is complete to S", ab.to_vector());
    remove(p, ab, "non-neighbours-of-S2-vertex");
    complement_sides(p, k, s, cert_reason::kComplete);
    leaf(p, k, LeafClass::Clique);
    leaf(p, s, LeafClass::Forest);
  }

  void two_p2_free_case(int p, const VertexSet& k0, const VertexSet& s1, VertexSet s2) {
    step(StepKind::Case, p, {}, {}, cert_tag::kSTwoP2Free);
    VertexSet s = s1 | s2;
    auto comps = components_with_edges(w_, s);
    if (comps.size() > 1)
      throw ClaimViolation("G[S] has at most one component with an edge", {comps[0].first(), comps[1].first()});
    if (comps.size() == 1) {
      const VertexSet& c = comps[0];
      VertexSet centres(w_.n());
      c.for_each([&](Vertex v) {
        if (centres.empty() && (w_.neighbours(v) & c).size() == c.size() - 1) centres.insert(v);
      });
      if (centres.empty())
        c.for_each([&](Vertex v) {
          if ((w_.neighbours(v) & c).size() >= 2) centres.insert(v);
        });
      VertexSet rest = s - centres;
      if (centres.size() > 2 || !w_.is_independent(rest))
        throw ClaimViolation("deleting at most two vertices of S leaves S independent", c.to_vector());
      remove(p, centres, "centres-of-S-tree");
      s = rest;
      s2 -= centres;
    }
    VertexSet k = k0;
    if (!s2.empty()) {
      VertexSet kk = non_neighbours_in(w_, s2.first(), k0);
      remove(p, kk, "non-neighbours-of-S2-vertex");
      k -= kk;
    }
    s.for_each([&](Vertex v) {
      if (non_neighbours_in(w_, v, k).size() > 1)
        throw ClaimViolation("after deleting two K vertices each S vertex misses at most one K vertex", {v});
    });
    complement_sides(p, k, s, cert_reason::kMissesAtMostOne);
    leaf(p, k | s, LeafClass::SplitBoundedAttachment);
  }

  Graph w_;
  std::vector<VertexSet> pieces_;
  DecompositionCertificate cert_;
};

}  // namespace detail

/// Requires a chordal co(K_{1,3}+2P_1)-free graph. Graphs that are not
/// 2-connected are first split into blocks.
inline DecompositionCertificate decompose_cok13_2p1(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  require_chordal(g);
  if (auto w = induced_subgraph_isomorphic(catalog_lookup("co(K_{1,3}+2P_1)"), g))
    throw PreconditionError("graph contains an induced co(K_{1,3}+2P_1)", *w);
  return detail::CertBuilder(g).run();
}

// ---------------------------------------------------------------------------
// Replay verification

// Deletions per piece allowed by the replay: one to separate an S-tree plus
// two non-neighbours in K, or two centres plus two non-neighbours.
inline constexpr int kMaxDeletedPerPiece = 4;

inline bool verify_certificate(const Graph& g, const DecompositionCertificate& c) {
  if (c.n != g.n()) return false;
  const int n = g.n();
  Graph w = g;
  struct PieceState {
    VertexSet vertices, k, s1, s2;
    bool consumed = false, has_k = false, has_s = false;
    std::string tag = {};
    int deleted = 0;
  };
  std::vector<PieceState> pieces;
  pieces.push_back({g.vertices(), VertexSet(n), VertexSet(n), VertexSet(n)});
  auto valid = [&](const VertexSet& s) { return s.universe() == n; };
  auto large_case = [](const PieceState& ps) {
    return ps.tag == cert_tag::kTwoP2InS || ps.tag == cert_tag::kSTwoP2Free;
  };

  for (const auto& st : c.steps) {
    if (st.piece < 0 || st.piece >= static_cast<int>(pieces.size())) return false;
    PieceState& ps = pieces[static_cast<std::size_t>(st.piece)];
    if (ps.consumed) return false;
    switch (st.kind) {
      case StepKind::BlockSplit: {
        Deletion sub = induced_subgraph(w, ps.vertices);
        std::vector<VertexSet> want;
        for (const auto& b : blocks(sub.graph).blocks) {
          VertexSet v(n);
          b.vertices.for_each([&](Vertex x) { v.insert(sub.old_id[static_cast<std::size_t>(x)]); });
          want.push_back(v);
        }
        if (st.sets.size() != want.size()) return false;
        for (std::size_t i = 0; i < want.size(); ++i)
          if (!valid(st.sets[i]) || st.sets[i] != want[i]) return false;
        ps.consumed = true;
        for (const auto& b : want) pieces.push_back({b, VertexSet(n), VertexSet(n), VertexSet(n)});
        break;
      }
      case StepKind::MaxClique: {
        if (!valid(st.a) || !st.a.is_subset_of(ps.vertices) || !w.is_clique(st.a) || ps.has_k) return false;
        Deletion sub = induced_subgraph(w, ps.vertices);
        auto peo = chordal_peo(sub.graph);
        if (!peo || max_clique_chordal(sub.graph, *peo).size() != st.a.size()) return false;
        ps.k = st.a;
        ps.has_k = true;
        break;
      }
      case StepKind::SPartition: {
        if (!ps.has_k || ps.has_s || !valid(st.a) || !valid(st.b)) return false;
        VertexSet s1(n), s2(n);
        bool outside = false;
        (ps.vertices - ps.k).for_each([&](Vertex v) {
          int miss = (ps.k - w.neighbours(v)).size();
          if (miss == 1)
            s1.insert(v);
          else if (miss == 2)
            s2.insert(v);
          else
            outside = true;
        });
        if (outside || s1 != st.a || s2 != st.b) return false;
        ps.s1 = s1;
        ps.s2 = s2;
        ps.has_s = true;
        break;
      }
      case StepKind::Case: {
        if (!ps.has_k || !ps.tag.empty()) return false;
        if (st.text == cert_tag::kSmallClique) {
          if (ps.k.size() > 6) return false;
        } else if (st.text == cert_tag::kTwoP2InS || st.text == cert_tag::kSTwoP2Free) {
          if (!ps.has_s || ps.k.size() < 7) return false;
          if (detail::has_induced_2p2(w, ps.s1 | ps.s2) != (st.text == cert_tag::kTwoP2InS)) return false;
        } else {
          return false;
        }
        ps.tag = st.text;
        break;
      }
      case StepKind::VertexDelete: {
        // only a bounded number of deletions keeps the width bounded
        if (!large_case(ps) || !valid(st.a) || st.a.empty() || st.a.size() > 2 || !st.a.is_subset_of(ps.vertices))
          return false;
        ps.deleted += st.a.size();
        if (ps.deleted > kMaxDeletedPerPiece) return false;
        ps.vertices -= st.a;
        ps.k -= st.a;
        ps.s1 -= st.a;
        ps.s2 -= st.a;
        break;
      }
      case StepKind::BipartiteComplement: {
        if (!large_case(ps)) return false;
        if (!valid(st.a) || !valid(st.b) || st.a.intersects(st.b)) return false;
        if (!st.a.is_subset_of(ps.vertices) || !st.b.is_subset_of(ps.vertices)) return false;
        if (st.text == cert_reason::kComplete) {
          if (!w.complete_to(st.a, st.b)) return false;
        } else if (st.text == cert_reason::kMissesAtMostOne) {
          bool ok = true;
          st.b.for_each([&](Vertex v) {
            if ((st.a - w.neighbours(v)).size() > 1) ok = false;
          });
          if (!ok) return false;
        } else {
          return false;
        }
        w = bipartite_complement(w, st.a, st.b);
        break;
      }
    }
  }

  std::vector<VertexSet> covered(pieces.size(), VertexSet(n));
  for (const auto& lf : c.leaves) {
    if (lf.piece < 0 || lf.piece >= static_cast<int>(pieces.size())) return false;
    const PieceState& ps = pieces[static_cast<std::size_t>(lf.piece)];
    auto& cov = covered[static_cast<std::size_t>(lf.piece)];
    if (ps.consumed || !valid(lf.vertices) || lf.vertices.empty()) return false;
    if (ps.has_k && ps.tag.empty()) return false;
    if (!lf.vertices.is_subset_of(ps.vertices) || lf.vertices.intersects(cov)) return false;
    if (!w.anticomplete_to(lf.vertices, ps.vertices - lf.vertices)) return false;
    if (!leaf_passes(induced_subgraph(w, lf.vertices).graph, lf.cls)) return false;
    cov |= lf.vertices;
  }
  for (std::size_t p = 0; p < pieces.size(); ++p)
    if (!pieces[p].consumed && covered[p] != pieces[p].vertices) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Text format
//
//   certificate <n>
//   block-split <piece> <set> <set> ...
//   max-clique <piece> <K>
//   s-partition <piece> <S_1> <S_2>
//   case <piece> <tag>
//   delete <piece> <set> <reason>
//   bipartite-complement <piece> <A> <B> <reason>
//   leaf <piece> <set> <class>
//
// Sets are sorted comma-joined ids, "-" when empty.

inline std::string serialize(const DecompositionCertificate& c) {
  std::ostringstream os;
  os << "certificate " << c.n << '\n';
  for (const auto& st : c.steps) {
    os << to_string(st.kind) << ' ' << st.piece;
    switch (st.kind) {
      case StepKind::BlockSplit:
        for (const auto& s : st.sets) os << ' ' << format_set(s);
        break;
      case StepKind::MaxClique: os << ' ' << format_set(st.a); break;
      case StepKind::SPartition: os << ' ' << format_set(st.a) << ' ' << format_set(st.b); break;
      case StepKind::Case: os << ' ' << st.text; break;
      case StepKind::VertexDelete: os << ' ' << format_set(st.a) << ' ' << st.text; break;
      case StepKind::BipartiteComplement:
        os << ' ' << format_set(st.a) << ' ' << format_set(st.b) << ' ' << st.text;
        break;
    }
    os << '\n';
  }
  for (const auto& lf : c.leaves)
    os << "leaf " << lf.piece << ' ' << format_set(lf.vertices) << ' ' << to_string(lf.cls) << '\n';
  return os.str();
}

namespace detail {

inline VertexSet parse_set(const std::string& tok, int n, int line) {
  VertexSet s(n);
  if (tok == "-") return s;
  std::size_t pos = 0;
  while (pos <= tok.size()) {
    std::size_t end = tok.find(',', pos);
    if (end == std::string::npos) end = tok.size();
    int v = -1;
    auto [p, ec] = std::from_chars(tok.data() + pos, tok.data() + end, v);
    if (ec != std::errc() || p != tok.data() + end || v < 0 || v >= n)
      throw ParseError("bad vertex set '" + tok + "' on line " + std::to_string(line), pos);
    s.insert(v);
    pos = end + 1;
  }
  return s;
}

}  // namespace detail

inline DecompositionCertificate parse_certificate(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  DecompositionCertificate c;
  int lineno = 0;
  bool header = false;
  auto fail = [&](const std::string& why) -> void {
    throw ParseError(why + " on line " + std::to_string(lineno), 0);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (!header) {
      if (tok.size() != 2 || tok[0] != "certificate") fail("expected 'certificate <n>'");
      try {
        c.n = std::stoi(tok[1]);
      } catch (const std::exception&) {
        fail("bad vertex count");
      }
      if (c.n < 0 || c.n > kMaxVertices) fail("bad vertex count");
      header = true;
      continue;
    }
    if (tok.size() < 2) fail("truncated record");
    int piece = 0;
    auto [p, ec] = std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), piece);
    if (ec != std::errc() || p != tok[1].data() + tok[1].size() || piece < 0) fail("bad piece index");
    auto set = [&](std::size_t i) { return detail::parse_set(tok[i], c.n, lineno); };
    auto need = [&](std::size_t k) {
      if (tok.size() != k) fail("wrong field count for " + tok[0]);
    };
    const std::string& kind = tok[0];
    if (kind == "leaf") {
      need(4);
      CertLeaf lf{piece, set(2), LeafClass::Clique};
      bool known = false;
      for (auto cls : {LeafClass::Clique, LeafClass::Forest, LeafClass::K7FreeChordal, LeafClass::SplitBoundedAttachment})
        if (tok[3] == to_string(cls)) {
          lf.cls = cls;
          known = true;
        }
      if (!known) fail("unknown leaf class " + tok[3]);
      c.leaves.push_back(lf);
      continue;
    }
    CertStep st{StepKind::MaxClique, piece, VertexSet(c.n), VertexSet(c.n), {}, {}};
    if (kind == "block-split") {
      st.kind = StepKind::BlockSplit;
      for (std::size_t i = 2; i < tok.size(); ++i) st.sets.push_back(set(i));
    } else if (kind == "max-clique") {
      need(3);
      st.a = set(2);
    } else if (kind == "s-partition") {
      need(4);
      st.kind = StepKind::SPartition;
      st.a = set(2);
      st.b = set(3);
    } else if (kind == "case") {
      need(3);
      st.kind = StepKind::Case;
      st.text = tok[2];
    } else if (kind == "delete") {
      need(4);
      st.kind = StepKind::VertexDelete;
      st.a = set(2);
      st.text = tok[3];
    } else if (kind == "bipartite-complement") {
      need(5);
      st.kind = StepKind::BipartiteComplement;
      st.a = set(2);
      st.b = set(3);
      st.text = tok[4];
    } else {
      fail("unknown record " + kind);
    }
    c.steps.push_back(std::move(st));
  }
  if (!header) throw ParseError("missing certificate header", 0);
  return c;
}

}  // namespace cwc
