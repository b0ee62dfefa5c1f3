#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "cwchordal/builders.hpp"
#include "cwchordal/exact_cw.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cwc;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(CWC_TEST_DATA) + "/" + name);
  std::string line;
  std::getline(in, line);
  return line;
}

// Thick spider from its definition: feet 0..p-1 form a clique, body
// p..2p-1 is independent, foot a sees every body vertex except p+a, and the
// optional rest vertex 2p sees exactly the feet.
Graph definitional_thick_spider(int p, bool rest) {
  GraphBuilder b(2 * p + (rest ? 1 : 0));
  for (int a = 0; a < p; ++a)
    for (int c = 0; c < p; ++c) {
      if (a < c) b.add_edge(a, c);
      if (a != c) b.add_edge(a, p + c);
    }
  if (rest)
    for (int a = 0; a < p; ++a) b.add_edge(a, 2 * p);
  return b.build();
}

void expect_valid(const BuildReport& r, const Graph& g) {
  ASSERT_TRUE(validate(r.expression, g)) << r.method;
  ASSERT_LE(width(r.expression), r.claimed_bound) << r.method;
}

}  // namespace

TEST(Forest, WidthAtMostThree) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    int n = 1 + static_cast<int>(rng() % 30);
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v)
      if (rng() % 5) b.add_edge(v, static_cast<int>(rng() % static_cast<unsigned>(v)));
    Graph g = b.build();
    expect_valid(build_forest_expr(g), g);
  }
  EXPECT_EQ(width(build_forest_expr(edgeless_graph(4)).expression), 1);
}

TEST(Forest, CycleWitness) {
  Graph g = disjoint_union(path_graph(3), cycle_graph(5));
  try {
    build_forest_expr(g);
    FAIL();
  } catch (const PreconditionError& e) {
    auto w = e.witness();
    ASSERT_EQ(w.size(), 5u);
    for (std::size_t i = 0; i < w.size(); ++i) EXPECT_TRUE(g.adjacent(w[i], w[(i + 1) % w.size()]));
  }
}

TEST(Cograph, WidthTwo) {
  std::mt19937_64 rng(11);
  int built = 0;
  for (int it = 0; it < 300; ++it) {
    Graph g = support::random_graph(1 + static_cast<int>(rng() % 9), 0.5, rng);
    bool p4_free = !oracle::contains_induced(g, path_graph(4));
    EXPECT_EQ(is_cograph(g), p4_free);
    if (!p4_free) continue;
    auto r = build_cograph_expr(g);
    expect_valid(r, g);
    ++built;
  }
  EXPECT_GT(built, 30);
  EXPECT_THROW(build_cograph_expr(path_graph(4)), PreconditionError);
}

TEST(KWeb, DefinitionalAdjacencyAndWidth) {
  for (int k = 1; k <= 20; ++k) {
    KWeb w{k, {}, {}};
    for (int i = 0; i < k; ++i) {
      w.xs.push_back(i);
      w.ys.push_back(k + i);
    }
    BuildReport r = build_kweb_expr(w);
    LabelledGraph lg = evaluate(r.expression);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i != j) {
          ASSERT_TRUE(lg.graph.adjacent(i, j));
          ASSERT_TRUE(lg.graph.adjacent(k + i, k + j));
        }
        ASSERT_EQ(lg.graph.adjacent(i, k + j), i < j);
      }
    if (k >= 2) {
      EXPECT_EQ(width(r.expression), 3) << k;
    }
  }
}

TEST(KWeb, PermutedDetection) {
  std::mt19937_64 rng(2);
  for (int k = 2; k <= 9; ++k) {
    Graph g = support::permuted(kweb_graph(k), rng);
    expect_valid(build_with("kweb", g), g);
  }
  EXPECT_THROW(build_with("kweb", cycle_graph(6)), PreconditionError);
}

TEST(ThickSpider, GoldenTerm) {
  Graph g = definitional_thick_spider(2, false);
  Spider s{SpiderKind::Thick, {2, 3}, {0, 1}, VertexSet(4)};
  BuildReport r = build_thick_spider_expr(g, s);
  EXPECT_EQ(serialize(r.expression), read_golden("thick_spider_p2.expr"));
}

TEST(ThickSpider, AllSizesWithAndWithoutRest) {
  for (int p = 2; p <= 8; ++p)
    for (bool rest : {false, true}) {
      Graph g = definitional_thick_spider(p, rest);
      EXPECT_TRUE(is_isomorphic(g, thick_spider_graph(p, rest)));
      BuildReport r = build_thick_spider_expr(g);
      ASSERT_TRUE(validate(r.expression, g)) << p;
      EXPECT_LE(width(r.expression), 4);
    }
  Spider thin{SpiderKind::Thin, {2, 3}, {0, 1}, VertexSet(4)};
  EXPECT_THROW(build_thick_spider_expr(definitional_thick_spider(2, false), thin), PreconditionError);
}

TEST(DistanceHereditary, RandomGemFreeChordal) {
  std::mt19937_64 rng(3);
  const Graph gem = catalog_lookup("gem");
  int built = 0;
  for (int it = 0; it < 400 && built < 120; ++it) {
    Graph g = support::random_chordal(3 + static_cast<int>(rng() % 12), 0.4, rng);
    if (contains_induced(g, gem)) continue;
    ++built;
    BuildReport r = build_dh_expr(g);
    expect_valid(r, g);
    if (g.n() <= 9) {
      EXPECT_LE(*exact_cw(g, 3).cw, 3);
    }
  }
  EXPECT_GT(built, 50);
}

TEST(DistanceHereditary, ObstructionWitness) {
  for (const char* name : {"house", "gem", "domino", "C_5", "C_6"}) {
    Graph g = catalog_lookup(name);
    try {
      build_dh_expr(g);
      FAIL() << name;
    } catch (const PreconditionError& e) {
      std::vector<int> w(e.witness().begin(), e.witness().end());
      EXPECT_FALSE(is_distance_hereditary(oracle::induced_on(g, w))) << name;
    }
  }
}

TEST(MaxDegreeTwo, PathsAndCycles) {
  for (int n = 3; n <= 12; ++n) {
    Graph g = disjoint_union(cycle_graph(n), path_graph(n));
    expect_valid(build_maxdeg2_expr(g), g);
  }
  EXPECT_THROW(build_maxdeg2_expr(star_graph(3)), PreconditionError);
}

TEST(CliqueTree, BoundFollowsCliqueNumber) {
  EXPECT_EQ(cliquetree_bound(1), 1);
  EXPECT_EQ(cliquetree_bound(2), 3);
  EXPECT_EQ(cliquetree_bound(4), 12);
  std::mt19937_64 rng(13);
  for (int it = 0; it < 200; ++it) {
    Graph g = support::random_chordal(1 + static_cast<int>(rng() % 25), 0.6, rng);
    expect_valid(build_cliquetree_expr(g), g);
  }
  EXPECT_EQ(width(build_cliquetree_expr(complete_graph(6)).expression), 2);
  try {
    build_cliquetree_expr(cycle_graph(6));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.witness().size(), 6u);
  }
}

TEST(BullFree, ComposesPrimeNodes) {
  std::mt19937_64 rng(17);
  const Graph bull = catalog_lookup("bull");
  int built = 0;
  for (int it = 0; it < 600 && built < 150; ++it) {
    Graph g = support::random_chordal(2 + static_cast<int>(rng() % 20), 0.5, rng);
    if (contains_induced(g, bull)) continue;
    ++built;
    BuildReport r = build_bullfree_chordal(g);
    expect_valid(r, g);
    for (const auto& [node, route] : r.trace) EXPECT_TRUE(route == "forest" || route == "kweb");
  }
  EXPECT_GT(built, 50);
  // 4-web with x_1 blown up into a triangle: one prime node routed to kweb
  Graph web = kweb_graph(4);
  GraphBuilder b(10);
  for (auto [u, v] : web.edges()) b.add_edge(u, v);
  for (int t : {8, 9}) {
    b.add_edge(0, t);
    web.neighbours(0).for_each([&](Vertex w) { b.add_edge(w, t); });
  }
  b.add_edge(8, 9);
  Graph g = b.build();
  BuildReport r = build_bullfree_chordal(g);
  expect_valid(r, g);
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0].second, "kweb");
  EXPECT_THROW(build_bullfree_chordal(catalog_lookup("bull")), PreconditionError);
  EXPECT_THROW(build_bullfree_chordal(cycle_graph(4)), PreconditionError);
}

TEST(CoChairFree, ComposesPrimeNodes) {
  std::mt19937_64 rng(19);
  const Graph cochair = catalog_lookup("co-chair");
  int built = 0;
  for (int it = 0; it < 600 && built < 150; ++it) {
    Graph g = support::random_chordal(2 + static_cast<int>(rng() % 20), 0.5, rng);
    if (contains_induced(g, cochair)) continue;
    ++built;
    BuildReport r = build_cochair_chordal(g);
    expect_valid(r, g);
    if (g.n() <= 8) {
      EXPECT_LE(*exact_cw(g, 4).cw, 4);
    }
  }
  EXPECT_GT(built, 50);
  // thick spiders with p >= 3 contain a diamond and are routed as spiders
  Graph s = thick_spider_graph(4, true);
  BuildReport r = build_cochair_chordal(s);
  expect_valid(r, s);
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0].second, "spider");
}

TEST(Dispatch, AutoTakesSmallestBound) {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 150; ++it) {
    Graph g = it % 2 ? support::random_chordal(1 + static_cast<int>(rng() % 12), 0.5, rng)
                     : support::random_graph(1 + static_cast<int>(rng() % 8), 0.4, rng);
    auto cands = applicable_builders(g);
    ASSERT_FALSE(cands.empty());
    int best = g.n();
    for (const auto& [m, bound] : cands) {
      BuildReport r = build_with(m, g);
      EXPECT_EQ(r.claimed_bound, bound) << m;
      expect_valid(r, g);
      best = std::min(best, bound);
    }
    BuildReport a = build_auto(g);
    EXPECT_EQ(a.claimed_bound, best);
    expect_valid(a, g);
    if (g.n() <= 8) {
      EXPECT_LE(*exact_cw(g, g.n()).cw, a.claimed_bound);
    }
  }
  EXPECT_EQ(build_auto(path_graph(4)).method, "forest");
  EXPECT_EQ(build_auto(cycle_graph(4)).method, "cograph");
  EXPECT_EQ(build_auto(cycle_graph(7)).method, "maxdeg2");
  EXPECT_THROW(build_with("nope", path_graph(2)), std::invalid_argument);
}

TEST(Report, TextForm) {
  BuildReport r = build_bullfree_chordal(kweb_graph(3));
  std::string text = serialize(r);
  EXPECT_EQ(text.rfind("bound 3\nmethod bullfree\ntrace ", 0), 0u);
  auto pos = text.find("expr ");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_TRUE(validate(parse_expr(text.substr(pos + 5, text.size() - pos - 6)), kweb_graph(3)));
}
