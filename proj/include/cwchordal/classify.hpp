#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "graph.hpp"
#include "iso.hpp"

namespace cwc {

enum class Status { Bounded, Unbounded, Open };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Bounded: return "Bounded";
    case Status::Unbounded: return "Unbounded";
    case Status::Open: return "Open";
  }
  return "?";
}

struct ClassificationVerdict {
  Status status = Status::Unbounded;
  std::optional<int> bound;
  std::string rule;
  // embedding of h into the containing catalog graph, when one fired
  std::vector<Vertex> witness;
};

/// "STATUS bound=<b|-> rule=<rule>"
inline std::string format_verdict(const ClassificationVerdict& v) {
  std::string out = to_string(v.status);
  out += " bound=" + (v.bound ? std::to_string(*v.bound) : std::string("-"));
  out += " rule=" + v.rule;
  return out;
}

namespace detail {

struct MaximalCase {
  const char* name;
  std::optional<int> bound;
};

// The maximal bounded cases for chordal hosts, in a fixed order.
inline const std::vector<MaximalCase>& chordal_cases() {
  static const std::vector<MaximalCase> cases = {
      {"bull", 3},
      {"gem", 3},
      {"co-chair", 4},
      {"co-gem", 8},
      {"co(K_{1,3}+2P_1)", std::nullopt},
      {"P_1+paw", std::nullopt},
      {"P_1+diamond", std::nullopt},
  };
  return cases;
}

inline bool is_complete_graph(const Graph& h) { return h.is_clique(h.vertices()); }

inline bool is_edgeless_graph(const Graph& h) { return h.edge_count() == 0; }

}  // namespace detail

/// Boundedness of clique-width for H-free chordal graphs.
inline ClassificationVerdict classify_chordal(const Graph& h) {
  for (const char* f : {"F_1", "F_2"})
    if (is_isomorphic(h, catalog_lookup(f))) return {Status::Open, std::nullopt, f, {}};
  ClassificationVerdict best;
  bool found = false;
  for (const auto& c : detail::chordal_cases()) {
    auto emb = induced_subgraph_isomorphic(h, catalog_lookup(c.name));
    if (!emb) continue;
    bool better = !found || (c.bound && (!best.bound || *c.bound < *best.bound));
    if (better) {
      best = {Status::Bounded, c.bound, c.name, *emb};
      found = true;
    }
  }
  if (found) return best;
  if (detail::is_complete_graph(h)) return {Status::Bounded, std::nullopt, "K_" + std::to_string(h.n()), {}};
  return {Status::Unbounded, std::nullopt, "no bounded case contains H", {}};
}

/// Boundedness of clique-width for H-free weakly chordal graphs.
inline ClassificationVerdict classify_weakly_chordal(const Graph& h) {
  if (auto emb = induced_subgraph_isomorphic(h, path_graph(4))) return {Status::Bounded, std::nullopt, "P_4", *emb};
  return {Status::Unbounded, std::nullopt, "not an induced subgraph of P_4", {}};
}

/// Boundedness of clique-width for H-free split graphs.
inline ClassificationVerdict classify_split(const Graph& h) {
  const Graph co = complement(h);
  for (const char* f : {"F_4", "F_5"}) {
    const Graph fg = catalog_lookup(f);
    if (is_isomorphic(h, fg)) return {Status::Open, std::nullopt, f, {}};
    if (is_isomorphic(co, fg)) return {Status::Open, std::nullopt, std::string("co-") + f, {}};
  }
  const std::string r = std::to_string(h.n());
  if (detail::is_edgeless_graph(h)) return {Status::Bounded, std::nullopt, r + "P_1", {}};
  if (detail::is_edgeless_graph(co)) return {Status::Bounded, std::nullopt, "co(" + r + "P_1)", {}};
  for (const char* f : {"F_4", "F_5"}) {
    const Graph fg = catalog_lookup(f);
    if (auto emb = induced_subgraph_isomorphic(h, fg)) return {Status::Bounded, std::nullopt, f, *emb};
    if (auto emb = induced_subgraph_isomorphic(co, fg)) return {Status::Bounded, std::nullopt, std::string("co-") + f, *emb};
  }
  return {Status::Unbounded, std::nullopt, "no bounded case contains H or its complement", {}};
}

}  // namespace cwc
