#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "graph.hpp"
#include "iso.hpp"

namespace cwc {

/// SplitMix64 (Steele, Lea, Flood). Output depends only on the seed, so
/// generated graphs are identical across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return p >= 1.0 || unit() < p; }

 private:
  std::uint64_t state_;
};

enum class GenModel { Chordal, Split, HFreeChordal };

struct GenSpec {
  GenModel model = GenModel::Chordal;
  int n = 0;
  double density = 0.5;
  std::optional<std::string> forbidden;
  std::uint64_t seed = 0;
};

inline constexpr int kRejectionBudget = 2000;

namespace detail {

inline void check_spec(const GenSpec& s) {
  if (s.n < 0 || s.n > kMaxVertices) throw std::invalid_argument("n out of range");
  if (!(s.density >= 0.0 && s.density <= 1.0)) throw std::invalid_argument("density must lie in [0,1]");
}

// Host tree on n nodes (node i hangs below a uniform earlier node). Vertex v
// owns node v and grows its subtree across each boundary edge with
// probability density. Vertices are adjacent iff their subtrees meet.
inline Graph chordal_from(SplitMix64& rng, int n, double density) {
  std::vector<std::vector<int>> tree(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
    tree[static_cast<std::size_t>(i)].push_back(p);
    tree[static_cast<std::size_t>(p)].push_back(i);
  }
  std::vector<VertexSet> sub;
  sub.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    VertexSet s(n, {v});
    std::vector<int> queue{v};
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int w : tree[static_cast<std::size_t>(queue[h])])
        if (!s.contains(w) && rng.bernoulli(density)) {
          s.insert(w);
          queue.push_back(w);
        }
    sub.push_back(s);
  }
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (sub[static_cast<std::size_t>(u)].intersects(sub[static_cast<std::size_t>(v)])) b.add_edge(u, v);
  return b.build();
}

}  // namespace detail

inline Graph gen_chordal(const GenSpec& s) {
  detail::check_spec(s);
  SplitMix64 rng(s.seed);
  return detail::chordal_from(rng, s.n, s.density);
}

/// Clique size uniform in 0..n, ids shuffled, each clique/independent pair
/// adjacent with probability density.
inline Graph gen_split(const GenSpec& s) {
  detail::check_spec(s);
  SplitMix64 rng(s.seed);
  const int n = s.n;
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[static_cast<std::size_t>(i)], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
  GraphBuilder b(n);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) b.add_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  for (int i = 0; i < k; ++i)
    for (int j = k; j < n; ++j)
      if (rng.bernoulli(s.density)) b.add_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  return b.build();
}

/// Draws chordal graphs from one stream until one is free of the forbidden
/// graph; absent after kRejectionBudget attempts.
inline std::optional<Graph> gen_hfree_chordal(const GenSpec& s) {
  detail::check_spec(s);
  if (!s.forbidden) throw std::invalid_argument("hfree-chordal needs a forbidden graph");
  const Graph h = catalog_lookup(*s.forbidden);
  SplitMix64 rng(s.seed);
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    Graph g = detail::chordal_from(rng, s.n, s.density);
    if (!contains_induced(g, h)) return g;
  }
  return std::nullopt;
}

inline std::optional<Graph> generate(const GenSpec& s) {
  switch (s.model) {
    case GenModel::Chordal: return gen_chordal(s);
    case GenModel::Split: return gen_split(s);
    case GenModel::HFreeChordal: return gen_hfree_chordal(s);
  }
  return std::nullopt;
}

}  // namespace cwc
