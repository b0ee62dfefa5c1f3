#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace cwc {

struct CatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  Graph graph;
};

class UnknownGraphName : public std::invalid_argument {
 public:
  UnknownGraphName(const std::string& name, std::vector<std::string> nearest)
      : std::invalid_argument(message(name, nearest)), nearest_(std::move(nearest)) {}
  const std::vector<std::string>& nearest() const { return nearest_; }

 private:
  static std::string message(const std::string& name, const std::vector<std::string>& nearest) {
    std::string m = "unknown graph name '" + name + "'";
    if (!nearest.empty()) {
      m += "; nearest:";
      for (const auto& s : nearest) m += " " + s;
    }
    return m;
  }
  std::vector<std::string> nearest_;
};

/// S_{h,i,j}: centre 0, then each leg listed outward from the centre.
inline Graph subdivided_claw(int h, int i, int j) {
  if (h < 0 || i < 0 || j < 0) throw std::invalid_argument("negative leg length");
  GraphBuilder b(1 + h + i + j);
  Vertex next = 1;
  for (int len : {h, i, j}) {
    Vertex prev = 0;
    for (int t = 0; t < len; ++t, ++next) {
      b.add_edge(prev, next);
      prev = next;
    }
  }
  return b.build();
}

// Vertex numbering: letters of the drawings map to ids in the order listed in
// each comment (a=0, b=1, ...).
inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> e;
    auto add = [&](std::string name, std::vector<std::string> aliases, int n,
                   std::vector<std::pair<Vertex, Vertex>> edges) {
      e.push_back({std::move(name), std::move(aliases), make_graph(n, edges)});
    };
    // triangle abc, pendants da and eb
    add("bull", {}, 5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
    // a dominating, path b-c-d-e
    add("gem", {"co(P_1+P_4)"}, 5, {{1, 2}, {2, 3}, {3, 4}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
    // P_1 + P_4: a isolated, path b-c-d-e
    add("co-gem", {"P_1+P_4"}, 5, {{1, 2}, {2, 3}, {3, 4}});
    // K_4 minus the edge ad
    add("diamond", {"co(2P_1+P_2)"}, 4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    // triangle abc, pendant da
    add("paw", {"co(P_1+P_3)"}, 4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    add("claw", {"K_{1,3}"}, 4, {{0, 1}, {0, 2}, {0, 3}});
    // triangle abc, pendants da, eb, fc
    add("net", {}, 6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
    // square a-b-c-d, roof e on ab
    add("house", {"co(P_5)"}, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}});
    // centre a, legs b, c, d-e
    add("chair", {"fork", "S_{1,1,2}"}, 5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    // triangle abe, path e-d-b closing a second triangle, pendant c on d
    add("co-chair", {"co(S_{1,1,2})"}, 5, {{0, 1}, {1, 4}, {4, 0}, {4, 3}, {3, 1}, {2, 3}});
    // K_5 on a..e, f adjacent to c and d
    add("co(K_{1,3}+2P_1)", {}, 6,
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {5, 2}, {5, 3}});
    // a isolated, paw on b..e
    add("P_1+paw", {}, 5, {{1, 2}, {2, 3}, {1, 3}, {1, 4}});
    // a isolated, diamond on b..e
    add("P_1+diamond", {}, 5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
    // K_4 on a..d, pendants ea and fd
    add("F_1", {}, 6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {5, 3}});
    // K_4 on a..d, pendant ea, f adjacent to c and d
    add("F_2", {}, 6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {5, 2}, {5, 3}});
    // K_4 on a..d; order a,b,c,d,y,z; z on a and b, y pendant on b
    add("F_3", {}, 6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {5, 0}, {5, 1}, {4, 1}});
    // order a,b,c,d,x,y,z: y-a-b-d-c-a-d-x, z isolated
    add("F_4", {}, 7, {{5, 0}, {0, 1}, {1, 3}, {3, 2}, {2, 0}, {0, 3}, {3, 4}});
    // K_5 on a..e, f on c and d, g on d and e
    add("co-F_4", {"co(F_4)"}, 7,
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {5, 2}, {5, 3}, {6, 3}, {6, 4}});
    // K_4 on a..d; order a,b,c,d,f,y,z; z on a and b, y pendant on b, f pendant on d
    add("F_5", {}, 7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {6, 0}, {6, 1}, {5, 1}, {4, 3}});
    // as F_5 but f adjacent to a and d
    add("co-F_5", {"co(F_5)"}, 7,
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {6, 0}, {6, 1}, {5, 1}, {4, 0}, {4, 3}});
    // triangle abc; d on a and b; e pendant on b; f pendant on c
    add("Q", {}, 6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 1}, {1, 4}, {2, 5}});
    // Q plus the edge ce
    add("co-Q", {"co(Q)"}, 6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 1}, {1, 4}, {2, 5}, {2, 4}});
    // triangle abc; d on a, b, c; e on b, c; f on a, c
    add("co(bull+P_1)", {}, 6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {1, 4}, {2, 5}, {2, 4}, {0, 5}, {2, 3}});
    // order x00,x01,x02,x12,x11,x10: path plus x01x11 and x11x02
    add("d-A", {}, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 4}, {4, 2}});
    // C_6 a..f with the chord be
    add("domino", {}, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}});
    add("d-domino", {}, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 4}, {4, 2}, {5, 0}});
    // C_5 on a..e, pendant f on a
    add("X_1", {}, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}});
    // path a-b-c-d-e, z on b and c
    add("xbull", {}, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 1}, {5, 2}});
    // triangle abc; d on a,b; e on b,c; f on c,a; z pendant on a
    add("X_2", {}, 7, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}, {6, 0}});
    // order x00,x01,x02,x12,x11,x10: path plus x10x01 and x01x11
    add("X_3", {}, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 4}});
    // order x00,x01,x02,x12,x11,x10: path plus x01x11
    add("A", {}, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 4}});
    return e;
  }();
  return entries;
}

namespace detail {

inline std::string normalize_name(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '{' || c == '}' || c == '-' || std::isspace(static_cast<unsigned char>(c))) continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

inline const Graph* find_entry(const std::string& norm) {
  for (const auto& e : catalog_entries()) {
    if (normalize_name(e.name) == norm) return &e.graph;
    for (const auto& a : e.aliases)
      if (normalize_name(a) == norm) return &e.graph;
  }
  return nullptr;
}

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

inline int to_int(std::string_view s) {
  if (s.size() > 4) throw std::invalid_argument("parameter too large");
  return std::stoi(std::string(s));
}

inline std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) return {};
    if (s[i] == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) return {};
  parts.push_back(s.substr(start));
  return parts;
}

inline bool wrapped(std::string_view s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i + 1 < s.size()) return false;
  }
  return true;
}

inline std::optional<Graph> resolve_expr(std::string_view s);

inline std::optional<Graph> resolve_atom(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (const Graph* g = find_entry(std::string(s))) return *g;
  if (wrapped(s)) return resolve_expr(s.substr(1, s.size() - 2));
  char kind = s[0];
  std::string_view rest = s.substr(1);
  if ((kind == 'p' || kind == 'c' || kind == 'k') && all_digits(rest)) {
    int r = to_int(rest);
    if (kind == 'p') return path_graph(r);
    if (kind == 'k') return complete_graph(r);
    if (r >= 3) return cycle_graph(r);
    return std::nullopt;
  }
  if (kind == 'k') {
    auto parts = split_top(rest, ',');
    if (parts.size() == 2 && parts[0] == "1" && all_digits(parts[1])) return star_graph(to_int(parts[1]));
    return std::nullopt;
  }
  if (kind == 's') {
    auto parts = split_top(rest, ',');
    if (parts.size() == 3 && all_digits(parts[0]) && all_digits(parts[1]) && all_digits(parts[2]))
      return subdivided_claw(to_int(parts[0]), to_int(parts[1]), to_int(parts[2]));
    if (parts.size() == 1 && rest.size() == 3 && all_digits(rest))
      return subdivided_claw(rest[0] - '0', rest[1] - '0', rest[2] - '0');
    return std::nullopt;
  }
  if (s.size() > 2 && s.substr(0, 2) == "co") {
    if (auto g = resolve_atom(s.substr(2))) return complement(*g);
  }
  return std::nullopt;
}

inline std::optional<Graph> resolve_term(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == 0) return resolve_atom(s);
  if (i == s.size()) return std::nullopt;
  int r = to_int(s.substr(0, i));
  auto g = resolve_atom(s.substr(i));
  if (!g) return std::nullopt;
  return copies(*g, r);
}

inline std::optional<Graph> resolve_expr(std::string_view s) {
  if (const Graph* g = find_entry(std::string(s))) return *g;
  auto parts = split_top(s, '+');
  if (parts.empty()) return std::nullopt;
  std::optional<Graph> out;
  for (auto p : parts) {
    auto g = resolve_term(p);
    if (!g) return std::nullopt;
    out = out ? disjoint_union(*out, *g) : *g;
  }
  return out;
}

inline std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace detail

/// Resolves a catalog name, alias, parametric family member (P_r, C_r, K_r,
/// K_{1,r}, S_{h,i,j}), multiple (rG), disjoint union (G+H) or complement
/// (co(G), co-G). Matching ignores case, underscores, braces and hyphens.
inline Graph catalog_lookup(std::string_view name) {
  std::string norm = detail::normalize_name(name);
  std::optional<Graph> g;
  try {
    g = detail::resolve_expr(norm);
  } catch (const std::invalid_argument&) {
    g.reset();
  } catch (const std::out_of_range&) {
    g.reset();
  }
  if (g) return *g;
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& e : catalog_entries()) {
    std::size_t d = detail::edit_distance(norm, detail::normalize_name(e.name));
    for (const auto& a : e.aliases) d = std::min(d, detail::edit_distance(norm, detail::normalize_name(a)));
    scored.emplace_back(d, e.name);
  }
  std::stable_sort(scored.begin(), scored.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::string> nearest;
  for (std::size_t i = 0; i < scored.size() && i < 3; ++i) nearest.push_back(scored[i].second);
  throw UnknownGraphName(std::string(name), nearest);
}

}  // namespace cwc
