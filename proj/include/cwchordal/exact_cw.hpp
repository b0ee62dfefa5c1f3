#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cwexpr.hpp"
#include "graph.hpp"

namespace cwc {

inline constexpr int kExactMaxVertices = 12;

namespace detail {

// Search over labelled partial constructions. A state is a built vertex set S
// with its partition into label classes. Joins are applied eagerly, so every
// G-edge inside S is already present; a state is viable only if each class is
// a set of twins with respect to V \ S (a later join or rename treats the
// class as a whole).
class CwSearch {
 public:
  using Mask = std::uint16_t;

  CwSearch(const Graph& g, int k) : n_(g.n()), k_(std::min(k, g.n())), full_(static_cast<Mask>((1u << n_) - 1)) {
    adj_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) {
      Mask m = 0;
      g.neighbours(v).for_each([&](Vertex w) { m = static_cast<Mask>(m | (1u << w)); });
      adj_[static_cast<std::size_t>(v)] = m;
    }
  }

  std::optional<CwExpr> run() {
    const std::size_t sets = std::size_t{1} << n_;
    states_.assign(sets, {});
    viable_.assign(sets, false);
    for (std::size_t s = 1; s < sets; ++s) viable_[s] = type_count(static_cast<Mask>(s)) <= k_;

    for (Vertex v = 0; v < n_; ++v) {
      Part p{};
      p.m = 1;
      p.cls[0] = static_cast<Mask>(1u << v);
      insert(p, Parent{Parent::Leaf, 0, 0});
      if (n_ == 1) return build(encode(p), {1});
      close_under_merges(static_cast<Mask>(1u << v));
    }

    std::vector<Mask> order;
    for (std::size_t s = 1; s < sets; ++s)
      if (std::popcount(static_cast<unsigned>(s)) >= 2 && viable_[s]) order.push_back(static_cast<Mask>(s));
    std::stable_sort(order.begin(), order.end(),
                     [](Mask a, Mask b) { return std::popcount(static_cast<unsigned>(a)) < std::popcount(static_cast<unsigned>(b)); });

    for (Mask s : order) {
      Mask low = static_cast<Mask>(s & -s);
      Mask rest = static_cast<Mask>(s ^ low);
      // s1 contains the lowest vertex of s; s2 = s \ s1 non-empty
      for (Mask sub = rest;; sub = static_cast<Mask>((sub - 1) & rest)) {
        Mask s1 = static_cast<Mask>(low | sub), s2 = static_cast<Mask>(s ^ s1);
        if (s2 && viable_[s1] && viable_[s2] && !states_[s1].empty() && !states_[s2].empty()) {
          if (auto done = combine(s1, s2)) return build(*done, identity_labels(*done));
        }
        if (sub == 0) break;
      }
      close_under_merges(s);
    }
    return std::nullopt;
  }

 private:
  struct Part {
    std::array<Mask, kExactMaxVertices> cls;
    int m;
  };
  struct Parent {
    enum Kind : std::uint8_t { Leaf, Union, Merge } kind;
    std::uint64_t a, b;
  };

  static Mask low_bit_order_key(Mask m) { return static_cast<Mask>(std::countr_zero(static_cast<unsigned>(m))); }

  static void canonical(Part& p) {
    std::sort(p.cls.begin(), p.cls.begin() + p.m,
              [](Mask x, Mask y) { return low_bit_order_key(x) < low_bit_order_key(y); });
  }

  // 4 bits per vertex: 0 if outside S, else 1 + class index.
  std::uint64_t encode(const Part& p) const {
    std::uint64_t key = 0;
    for (int c = 0; c < p.m; ++c)
      for (Mask m = p.cls[static_cast<std::size_t>(c)]; m; m = static_cast<Mask>(m & (m - 1)))
        key |= static_cast<std::uint64_t>(c + 1) << (4 * std::countr_zero(static_cast<unsigned>(m)));
    return key;
  }
  Part decode(std::uint64_t key) const {
    Part p{};
    p.m = 0;
    for (int v = 0; v < n_; ++v) {
      int c = static_cast<int>((key >> (4 * v)) & 15u);
      if (!c) continue;
      p.m = std::max(p.m, c);
      p.cls[static_cast<std::size_t>(c - 1)] = static_cast<Mask>(p.cls[static_cast<std::size_t>(c - 1)] | (1u << v));
    }
    return p;
  }
  static Mask support(const Part& p) {
    Mask s = 0;
    for (int c = 0; c < p.m; ++c) s = static_cast<Mask>(s | p.cls[static_cast<std::size_t>(c)]);
    return s;
  }

  Mask outside_nbhd(Vertex v, Mask s) const { return static_cast<Mask>(adj_[static_cast<std::size_t>(v)] & ~s & full_); }

  int type_count(Mask s) const {
    std::array<Mask, kExactMaxVertices> seen{};
    int t = 0;
    for (Mask m = s; m; m = static_cast<Mask>(m & (m - 1))) {
      Mask o = outside_nbhd(std::countr_zero(static_cast<unsigned>(m)), s);
      if (std::find(seen.begin(), seen.begin() + t, o) == seen.begin() + t) {
        if (t == k_) return t + 1;
        seen[static_cast<std::size_t>(t++)] = o;
      }
    }
    return t;
  }

  bool complete(Mask x, Mask y) const {
    for (Mask m = x; m; m = static_cast<Mask>(m & (m - 1)))
      if ((adj_[static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(m)))] & y) != y) return false;
    return true;
  }
  bool any_edge(Mask x, Mask y) const {
    for (Mask m = x; m; m = static_cast<Mask>(m & (m - 1)))
      if (adj_[static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(m)))] & y) return true;
    return false;
  }

  bool insert(Part p, Parent par) {
    canonical(p);
    std::uint64_t key = encode(p);
    auto [it, fresh] = parent_.emplace(key, par);
    if (fresh) states_[support(p)].push_back(key);
    return fresh;
  }

  // All coarsenings reachable by merging two classes with equal outside
  // neighbourhoods (renames).
  void close_under_merges(Mask s) {
    auto& list = states_[s];
    for (std::size_t idx = 0; idx < list.size(); ++idx) {
      std::uint64_t key = list[idx];
      Part p = decode(key);
      for (int a = 0; a < p.m; ++a)
        for (int b = a + 1; b < p.m; ++b) {
          Mask ca = p.cls[static_cast<std::size_t>(a)], cb = p.cls[static_cast<std::size_t>(b)];
          if (outside_nbhd(std::countr_zero(static_cast<unsigned>(ca)), s) !=
              outside_nbhd(std::countr_zero(static_cast<unsigned>(cb)), s))
            continue;
          Part q = p;
          q.cls[static_cast<std::size_t>(a)] = static_cast<Mask>(ca | cb);
          q.cls[static_cast<std::size_t>(b)] = q.cls[static_cast<std::size_t>(q.m - 1)];
          --q.m;
          insert(q, Parent{Parent::Merge, key, 0});
        }
    }
  }

  // Unions of every state on s1 with every state on s2; returns the key of an
  // accepting state once s1 | s2 = V.
  std::optional<std::uint64_t> combine(Mask s1, Mask s2) {
    const Mask s = static_cast<Mask>(s1 | s2);
    const bool final_layer = s == full_;
    const auto& la = states_[s1];
    const auto& lb = states_[s2];
    for (std::uint64_t ka : la) {
      Part a = decode(ka);
      for (std::uint64_t kb : lb) {
        Part b = decode(kb);
        if (a.m + b.m - std::min(a.m, b.m) > k_) continue;
        // compatible[i] = classes of b that class i of a may share a label with
        std::array<Mask, kExactMaxVertices> compat{};
        for (int i = 0; i < a.m; ++i) {
          Mask ai = a.cls[static_cast<std::size_t>(i)];
          Mask oa = outside_nbhd(std::countr_zero(static_cast<unsigned>(ai)), s);
          for (int j = 0; j < b.m; ++j) {
            Mask bj = b.cls[static_cast<std::size_t>(j)];
            if (!any_edge(ai, bj) && outside_nbhd(std::countr_zero(static_cast<unsigned>(bj)), s) == oa)
              compat[static_cast<std::size_t>(i)] = static_cast<Mask>(compat[static_cast<std::size_t>(i)] | (1u << j));
          }
        }
        std::array<int, kExactMaxVertices> match{};
        std::optional<std::uint64_t> hit;
        auto rec = [&](auto&& self, int i, Mask used, int matched) -> bool {
          if (a.m + b.m - matched - (std::min(a.m - i, b.m - std::popcount(static_cast<unsigned>(used)))) > k_) return false;
          if (i == a.m) {
            Part r{};
            r.m = 0;
            for (int x = 0; x < a.m; ++x) {
              Mask c = a.cls[static_cast<std::size_t>(x)];
              if (match[static_cast<std::size_t>(x)] >= 0) c = static_cast<Mask>(c | b.cls[static_cast<std::size_t>(match[static_cast<std::size_t>(x)])]);
              r.cls[static_cast<std::size_t>(r.m++)] = c;
            }
            for (int y = 0; y < b.m; ++y)
              if (!(used >> y & 1u)) r.cls[static_cast<std::size_t>(r.m++)] = b.cls[static_cast<std::size_t>(y)];
            for (int x = 0; x < r.m; ++x)
              for (int y = x + 1; y < r.m; ++y) {
                Mask cx = r.cls[static_cast<std::size_t>(x)], cy = r.cls[static_cast<std::size_t>(y)];
                bool cross = any_edge(static_cast<Mask>(cx & s1), static_cast<Mask>(cy & s2)) ||
                             any_edge(static_cast<Mask>(cx & s2), static_cast<Mask>(cy & s1));
                if (cross && !complete(cx, cy)) return false;
              }
            if (insert(r, Parent{Parent::Union, ka, kb}) && final_layer) {
              canonical(r);
              hit = encode(r);
              return true;
            }
            return false;
          }
          match[static_cast<std::size_t>(i)] = -1;
          if (self(self, i + 1, used, matched)) return true;
          for (Mask c = static_cast<Mask>(compat[static_cast<std::size_t>(i)] & ~used); c; c = static_cast<Mask>(c & (c - 1))) {
            int j = std::countr_zero(static_cast<unsigned>(c));
            match[static_cast<std::size_t>(i)] = j;
            if (self(self, i + 1, static_cast<Mask>(used | (1u << j)), matched + 1)) return true;
          }
          match[static_cast<std::size_t>(i)] = -1;
          return false;
        };
        if (rec(rec, 0, 0, 0)) return hit;
      }
    }
    return std::nullopt;
  }

  static std::vector<int> identity_labels(std::uint64_t key) {
    int m = 0;
    for (; key; key >>= 4) m = std::max(m, static_cast<int>(key & 15u));
    std::vector<int> l(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) l[static_cast<std::size_t>(c)] = c + 1;
    return l;
  }

  // Expression for the state `key` whose class c carries labels[c].
  CwExpr build(std::uint64_t key, const std::vector<int>& labels) const {
    const Parent& par = parent_.at(key);
    Part p = decode(key);
    auto label_of_vertex = [&](const Part& q, const std::vector<int>& ql, int v) {
      for (int c = 0; c < q.m; ++c)
        if (q.cls[static_cast<std::size_t>(c)] >> v & 1u) return ql[static_cast<std::size_t>(c)];
      return 0;
    };
    switch (par.kind) {
      case Parent::Leaf:
        return CwExpr::leaf(labels[0], std::countr_zero(static_cast<unsigned>(p.cls[0])));
      case Parent::Merge: {
        Part q = decode(par.a);
        // q has one class more; exactly one result class is split in q
        std::vector<int> ql(static_cast<std::size_t>(q.m), 0);
        std::vector<bool> taken(static_cast<std::size_t>(k_ + 2), false);
        for (int l : labels) taken[static_cast<std::size_t>(l)] = true;
        int free_label = 1;
        while (taken[static_cast<std::size_t>(free_label)]) ++free_label;
        int target = 0;
        std::vector<bool> result_used(static_cast<std::size_t>(p.m), false);
        for (int c = 0; c < q.m; ++c) {
          int v = std::countr_zero(static_cast<unsigned>(q.cls[static_cast<std::size_t>(c)]));
          int rc = 0;
          while (!(p.cls[static_cast<std::size_t>(rc)] >> v & 1u)) ++rc;
          if (!result_used[static_cast<std::size_t>(rc)]) {
            result_used[static_cast<std::size_t>(rc)] = true;
            ql[static_cast<std::size_t>(c)] = labels[static_cast<std::size_t>(rc)];
          } else {
            ql[static_cast<std::size_t>(c)] = free_label;
            target = labels[static_cast<std::size_t>(rc)];
          }
        }
        return CwExpr::rename(free_label, target, build(par.a, ql));
      }
      case Parent::Union: {
        Part a = decode(par.a), b = decode(par.b);
        std::vector<int> la(static_cast<std::size_t>(a.m)), lb(static_cast<std::size_t>(b.m));
        for (int c = 0; c < a.m; ++c)
          la[static_cast<std::size_t>(c)] = label_of_vertex(p, labels, std::countr_zero(static_cast<unsigned>(a.cls[static_cast<std::size_t>(c)])));
        for (int c = 0; c < b.m; ++c)
          lb[static_cast<std::size_t>(c)] = label_of_vertex(p, labels, std::countr_zero(static_cast<unsigned>(b.cls[static_cast<std::size_t>(c)])));
        CwExpr e = CwExpr::unite(build(par.a, la), build(par.b, lb));
        Mask s1 = support(a), s2 = support(b);
        for (int x = 0; x < p.m; ++x)
          for (int y = x + 1; y < p.m; ++y) {
            Mask cx = p.cls[static_cast<std::size_t>(x)], cy = p.cls[static_cast<std::size_t>(y)];
            if (any_edge(static_cast<Mask>(cx & s1), static_cast<Mask>(cy & s2)) ||
                any_edge(static_cast<Mask>(cx & s2), static_cast<Mask>(cy & s1)))
              e = CwExpr::join(labels[static_cast<std::size_t>(x)], labels[static_cast<std::size_t>(y)], e);
          }
        return e;
      }
    }
    throw std::logic_error("corrupt parent link");
  }

  int n_, k_;
  Mask full_;
  std::vector<Mask> adj_;
  std::vector<std::vector<std::uint64_t>> states_;
  std::vector<bool> viable_;
  std::unordered_map<std::uint64_t, Parent> parent_;
};

}  // namespace detail

/// Exact decision cw(g) <= k with a witness k-expression. Exponential; n <= 12.
inline std::optional<CwExpr> decide_cw_le(const Graph& g, int k) {
  if (g.n() < 1) throw std::invalid_argument("exact clique-width needs at least one vertex");
  if (g.n() > kExactMaxVertices)
    throw std::invalid_argument("exact clique-width supports at most " + std::to_string(kExactMaxVertices) + " vertices");
  if (k < 1) throw std::invalid_argument("k must be positive");
  return detail::CwSearch(g, k).run();
}

struct ExactCwResult {
  std::optional<int> cw;  // absent when cw > kmax
  std::optional<CwExpr> witness;
};

/// Smallest k <= kmax with cw(g) <= k, or an empty result if cw(g) > kmax.
inline ExactCwResult exact_cw(const Graph& g, int kmax) {
  if (kmax < 1) throw std::invalid_argument("kmax must be positive");
  for (int k = 1; k <= kmax; ++k)
    if (auto e = decide_cw_le(g, k)) return {k, e};
  return {};
}

}  // namespace cwc
