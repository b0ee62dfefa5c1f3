#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace cwc {

/// Clique-width expression: leaf i(v), disjoint union, join eta_{i,j},
/// rename rho_{i->j}. Immutable; subtrees are shared.
class CwExpr {
 public:
  enum class Op { Leaf, Union, Join, Rename };

  static CwExpr leaf(int label, Vertex v) {
    check_label(label);
    if (v < 0) throw std::invalid_argument("negative vertex id in leaf");
    return CwExpr(std::make_shared<const Node>(Node{Op::Leaf, label, 0, v, nullptr, nullptr}));
  }
  static CwExpr unite(const CwExpr& a, const CwExpr& b) {
    return CwExpr(std::make_shared<const Node>(Node{Op::Union, 0, 0, -1, a.node_, b.node_}));
  }
  static CwExpr join(int i, int j, const CwExpr& e) {
    check_pair(i, j, "join");
    return CwExpr(std::make_shared<const Node>(Node{Op::Join, i, j, -1, e.node_, nullptr}));
  }
  static CwExpr rename(int i, int j, const CwExpr& e) {
    check_pair(i, j, "rename");
    return CwExpr(std::make_shared<const Node>(Node{Op::Rename, i, j, -1, e.node_, nullptr}));
  }

  Op op() const { return node_->op; }
  /// Leaf label, or the first label of a join/rename.
  int i() const { return node_->a; }
  int j() const { return node_->b; }
  int label() const { return node_->a; }
  Vertex vertex() const { return node_->v; }
  CwExpr left() const { return CwExpr(node_->l); }
  CwExpr right() const { return CwExpr(node_->r); }
  CwExpr child() const { return CwExpr(node_->l); }

  friend bool operator==(const CwExpr& x, const CwExpr& y) { return equal(x.node_.get(), y.node_.get()); }

 private:
  struct Node {
    Op op;
    int a, b;
    Vertex v;
    std::shared_ptr<const Node> l, r;
  };
  explicit CwExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static void check_label(int l) {
    if (l < 1) throw std::invalid_argument("labels are positive integers");
  }
  static void check_pair(int i, int j, const char* what) {
    check_label(i);
    check_label(j);
    if (i == j) throw std::invalid_argument(std::string(what) + " needs two distinct labels");
  }
  static bool equal(const Node* x, const Node* y) {
    while (true) {
      if (x == y) return true;
      if (x->op != y->op || x->a != y->a || x->b != y->b || x->v != y->v) return false;
      if (x->op == Op::Union && !equal(x->r.get(), y->r.get())) return false;
      if (x->op == Op::Leaf) return true;
      x = x->l.get();
      y = y->l.get();
    }
  }

  std::shared_ptr<const Node> node_;
};

/// Applies f to every node in post-order.
template <typename F>
void for_each_node(const CwExpr& e, F&& f) {
  switch (e.op()) {
    case CwExpr::Op::Leaf: break;
    case CwExpr::Op::Union:
      for_each_node(e.left(), f);
      for_each_node(e.right(), f);
      break;
    default: for_each_node(e.child(), f);
  }
  f(e);
}

inline std::set<int> labels_used(const CwExpr& e) {
  std::set<int> out;
  for_each_node(e, [&](const CwExpr& x) {
    if (x.op() == CwExpr::Op::Leaf) out.insert(x.label());
    if (x.op() == CwExpr::Op::Join || x.op() == CwExpr::Op::Rename) {
      out.insert(x.i());
      out.insert(x.j());
    }
  });
  return out;
}

/// Number of distinct labels appearing anywhere in e.
inline int width(const CwExpr& e) { return static_cast<int>(labels_used(e).size()); }

inline std::vector<Vertex> leaf_vertices(const CwExpr& e) {
  std::vector<Vertex> out;
  for_each_node(e, [&](const CwExpr& x) {
    if (x.op() == CwExpr::Op::Leaf) out.push_back(x.vertex());
  });
  return out;
}

struct LabelledGraph {
  VertexSet vertices;          // ids that occur as leaves
  Graph graph;                 // on universe max id + 1
  std::vector<int> label;      // 0 for ids that do not occur
};

namespace detail {

using LabelClasses = std::map<int, VertexSet>;

inline LabelClasses eval_rec(const CwExpr& e, int universe, GraphBuilder& b) {
  switch (e.op()) {
    case CwExpr::Op::Leaf: {
      LabelClasses c;
      c.emplace(e.label(), VertexSet(universe, {e.vertex()}));
      return c;
    }
    case CwExpr::Op::Union: {
      LabelClasses x = eval_rec(e.left(), universe, b);
      LabelClasses y = eval_rec(e.right(), universe, b);
      for (auto& [l, s] : y) {
        auto it = x.find(l);
        if (it == x.end())
          x.emplace(l, std::move(s));
        else
          it->second |= s;
      }
      return x;
    }
    case CwExpr::Op::Join: {
      LabelClasses c = eval_rec(e.child(), universe, b);
      auto a = c.find(e.i()), d = c.find(e.j());
      if (a != c.end() && d != c.end()) b.connect(a->second, d->second);
      return c;
    }
    case CwExpr::Op::Rename: {
      LabelClasses c = eval_rec(e.child(), universe, b);
      auto a = c.find(e.i());
      if (a != c.end()) {
        VertexSet moved = std::move(a->second);
        c.erase(a);
        auto d = c.find(e.j());
        if (d == c.end())
          c.emplace(e.j(), std::move(moved));
        else
          d->second |= moved;
      }
      return c;
    }
  }
  return {};
}

}  // namespace detail

/// Bottom-up evaluation. Throws on duplicate leaf vertex ids.
inline LabelledGraph evaluate(const CwExpr& e) {
  auto leaves = leaf_vertices(e);
  Vertex top = -1;
  for (Vertex v : leaves) top = std::max(top, v);
  const int universe = top + 1;
  if (universe > kMaxVertices) throw std::invalid_argument("leaf vertex id exceeds the toolkit cap");
  VertexSet seen(universe);
  for (Vertex v : leaves) {
    if (seen.contains(v)) throw std::invalid_argument("duplicate leaf vertex id " + std::to_string(v));
    seen.insert(v);
  }
  GraphBuilder b(universe);
  auto classes = detail::eval_rec(e, universe, b);
  LabelledGraph out{seen, b.build(), std::vector<int>(static_cast<std::size_t>(universe), 0)};
  for (const auto& [l, s] : classes) s.for_each([&](Vertex v) { out.label[static_cast<std::size_t>(v)] = l; });
  return out;
}

/// Labels carried by at least one vertex of evaluate(e), ascending.
inline std::vector<int> final_labels(const CwExpr& e) {
  auto lg = evaluate(e);
  std::set<int> s;
  lg.vertices.for_each([&](Vertex v) { s.insert(lg.label[static_cast<std::size_t>(v)]); });
  return {s.begin(), s.end()};
}

/// True iff evaluate(e) has exactly g's vertex ids and exactly g's edges.
inline bool validate(const CwExpr& e, const Graph& g) {
  auto lg = evaluate(e);
  if (lg.vertices != g.vertices()) return false;
  return lg.graph == g;
}

// ---------------------------------------------------------------------------
// Text form: (v L VID) (u E E) (j L L E) (r L L E)

inline void serialize_to(const CwExpr& e, std::string& out) {
  switch (e.op()) {
    case CwExpr::Op::Leaf:
      out += "(v " + std::to_string(e.label()) + ' ' + std::to_string(e.vertex()) + ')';
      return;
    case CwExpr::Op::Union:
      out += "(u ";
      serialize_to(e.left(), out);
      out += ' ';
      serialize_to(e.right(), out);
      out += ')';
      return;
    case CwExpr::Op::Join:
    case CwExpr::Op::Rename:
      out += e.op() == CwExpr::Op::Join ? "(j " : "(r ";
      out += std::to_string(e.i()) + ' ' + std::to_string(e.j()) + ' ';
      serialize_to(e.child(), out);
      out += ')';
      return;
  }
}

inline std::string serialize(const CwExpr& e) {
  std::string out;
  serialize_to(e, out);
  return out;
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  CwExpr parse_all() {
    CwExpr e = parse();
    if (pos_ != s_.size()) fail("trailing characters");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long number() {
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000000L) {
        pos_ = start;
        fail("number too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    if (pos_ - start > 1 && s_[start] == '0') {
      pos_ = start;
      fail("leading zero");
    }
    return v;
  }

  int label() {
    std::size_t at = pos_;
    long v = number();
    if (v < 1) {
      pos_ = at;
      fail("labels are positive integers");
    }
    return static_cast<int>(v);
  }

  CwExpr parse() {
    expect('(');
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char op = s_[pos_++];
    expect(' ');
    switch (op) {
      case 'v': {
        int l = label();
        expect(' ');
        auto v = static_cast<Vertex>(number());
        expect(')');
        return CwExpr::leaf(l, v);
      }
      case 'u': {
        CwExpr a = parse();
        expect(' ');
        CwExpr b = parse();
        expect(')');
        return CwExpr::unite(a, b);
      }
      case 'j':
      case 'r': {
        std::size_t at = pos_;
        int i = label();
        expect(' ');
        int j = label();
        if (i == j) {
          pos_ = at;
          fail("operation needs two distinct labels");
        }
        expect(' ');
        CwExpr c = parse();
        expect(')');
        return op == 'j' ? CwExpr::join(i, j, c) : CwExpr::rename(i, j, c);
      }
      default:
        pos_ -= 2;
        fail(std::string("unknown operator '") + op + "'");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline CwExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Label normalisation and module substitution

/// Maps every label through f.
template <typename F>
CwExpr relabel(const CwExpr& e, F&& f) {
  switch (e.op()) {
    case CwExpr::Op::Leaf: return CwExpr::leaf(f(e.label()), e.vertex());
    case CwExpr::Op::Union: return CwExpr::unite(relabel(e.left(), f), relabel(e.right(), f));
    case CwExpr::Op::Join: return CwExpr::join(f(e.i()), f(e.j()), relabel(e.child(), f));
    case CwExpr::Op::Rename: return CwExpr::rename(f(e.i()), f(e.j()), relabel(e.child(), f));
  }
  return e;
}

/// Maps every leaf vertex v to ids[v].
inline CwExpr relabel_vertices(const CwExpr& e, const std::vector<Vertex>& ids) {
  switch (e.op()) {
    case CwExpr::Op::Leaf: return CwExpr::leaf(e.label(), ids.at(static_cast<std::size_t>(e.vertex())));
    case CwExpr::Op::Union: return CwExpr::unite(relabel_vertices(e.left(), ids), relabel_vertices(e.right(), ids));
    case CwExpr::Op::Join: return CwExpr::join(e.i(), e.j(), relabel_vertices(e.child(), ids));
    case CwExpr::Op::Rename: return CwExpr::rename(e.i(), e.j(), relabel_vertices(e.child(), ids));
  }
  return e;
}

/// Order-preserving relabelling onto 1..width(e).
inline CwExpr normalize_labels(const CwExpr& e) {
  auto used = labels_used(e);
  std::map<int, int> rank;
  for (int l : used) rank.emplace(l, static_cast<int>(rank.size()) + 1);
  bool identity = std::all_of(rank.begin(), rank.end(), [](const auto& p) { return p.first == p.second; });
  if (identity) return e;
  return relabel(e, [&](int l) { return rank.at(l); });
}

/// Replaces each quotient leaf i(v) by parts[v] followed by renames that
/// collapse all its final labels onto i. Labels of the quotient and of every
/// part are first normalised to 1..w, so the result has width exactly
/// max(width(q), max width(parts)).
inline CwExpr substitute_modules(const CwExpr& quotient, const std::map<Vertex, CwExpr>& parts,
                                 std::optional<int> width_cap = std::nullopt) {
  CwExpr q = normalize_labels(quotient);
  auto rec = [&](auto&& self, const CwExpr& e) -> CwExpr {
    switch (e.op()) {
      case CwExpr::Op::Leaf: {
        auto it = parts.find(e.vertex());
        if (it == parts.end()) throw std::invalid_argument("no part for quotient vertex " + std::to_string(e.vertex()));
        CwExpr p = normalize_labels(it->second);
        for (int l : final_labels(p))
          if (l != e.label()) p = CwExpr::rename(l, e.label(), p);
        return p;
      }
      case CwExpr::Op::Union: return CwExpr::unite(self(self, e.left()), self(self, e.right()));
      case CwExpr::Op::Join: return CwExpr::join(e.i(), e.j(), self(self, e.child()));
      case CwExpr::Op::Rename: return CwExpr::rename(e.i(), e.j(), self(self, e.child()));
    }
    return e;
  };
  CwExpr out = rec(rec, q);
  if (width_cap && width(out) > *width_cap)
    throw std::invalid_argument("substitution needs " + std::to_string(width(out)) + " labels, cap is " +
                                std::to_string(*width_cap));
  return out;
}

}  // namespace cwc
