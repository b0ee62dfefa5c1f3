#include <gtest/gtest.h>

#include <random>

#include "cwchordal/exact_cw.hpp"
#include "cwchordal/graph_io.hpp"
#include "cwchordal/iso.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cwc;

TEST(ExactCw, AgreesWithNaiveClosureOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : graphs_up_to_iso(n)) {
      auto want = oracle::naive_clique_width(g, n);
      ExactCwResult got = exact_cw(g, n);
      ASSERT_EQ(got.cw, want) << write_graph6(g);
      ASSERT_TRUE(validate(*got.witness, g));
      ASSERT_LE(width(*got.witness), *got.cw);
    }
}

TEST(ExactCw, SmallFamilies) {
  EXPECT_EQ(exact_cw(edgeless_graph(6), 3).cw, 1);
  EXPECT_EQ(exact_cw(complete_graph(7), 3).cw, 2);
  EXPECT_EQ(exact_cw(path_graph(4), 5).cw, 3);
  // C_4 = 2P_1 join 2P_1 is a cograph
  EXPECT_EQ(exact_cw(cycle_graph(4), 5).cw, 2);
  EXPECT_EQ(exact_cw(cycle_graph(5), 5).cw, 3);
  // P_n contains P_4 and forests have 3-expressions
  for (int n = 4; n <= 12; ++n) EXPECT_EQ(exact_cw(path_graph(n), 4).cw, 3) << n;
}

TEST(ExactCw, WitnessesAndMonotoneDecisions) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 60; ++it) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = support::random_graph(n, 0.5, rng);
    ExactCwResult r = exact_cw(g, n);
    ASSERT_TRUE(r.cw);
    ASSERT_TRUE(validate(*r.witness, g));
    ASSERT_LE(width(*r.witness), *r.cw);
    for (int k = 1; k <= n; ++k) ASSERT_EQ(decide_cw_le(g, k).has_value(), k >= *r.cw);
    // deleting a vertex never increases clique-width
    Graph h = delete_vertices(g, VertexSet(n, {static_cast<Vertex>(rng() % static_cast<unsigned>(n))})).graph;
    ASSERT_LE(*exact_cw(h, n).cw, *r.cw);
    // complementation changes clique-width by at most a factor of two
    ASSERT_LE(*exact_cw(complement(g), n).cw, 2 * *r.cw);
  }
}

TEST(ExactCw, LimitsAndArguments) {
  EXPECT_FALSE(exact_cw(cycle_graph(5), 2).cw);
  EXPECT_THROW(exact_cw(path_graph(13), 4), std::invalid_argument);
  EXPECT_THROW(exact_cw(path_graph(3), 0), std::invalid_argument);
  EXPECT_THROW(decide_cw_le(edgeless_graph(0), 1), std::invalid_argument);
}
