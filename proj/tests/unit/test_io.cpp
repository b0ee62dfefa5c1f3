#include <gtest/gtest.h>

#include <random>

#include "cwchordal/cwexpr.hpp"
#include "cwchordal/graph_io.hpp"
#include "support.hpp"

using namespace cwc;

TEST(Graph6, KnownEncodings) {
  // reference strings produced by networkx.to_graph6_bytes
  EXPECT_EQ(write_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(write_graph6(path_graph(4)), "Ch");
  EXPECT_EQ(write_graph6(edgeless_graph(0)), "?");
  EXPECT_EQ(write_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(parse_graph6("Ch"), path_graph(4));
}

TEST(Graph6, RoundTripIncludingLongForm) {
  std::mt19937_64 rng(3);
  for (int n : {1, 2, 7, 62, 63, 64, 100, 300}) {
    Graph g = support::random_graph(n, 0.3, rng);
    std::string s = write_graph6(g);
    EXPECT_EQ(s[0] == '~', n >= 63) << n;
    EXPECT_EQ(parse_graph6(s), g) << n;
  }
}

TEST(Graph6, ErrorsCarryOffsets) {
  try {
    parse_graph6("C~~");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  EXPECT_THROW(parse_graph6("C"), ParseError);     // truncated
  EXPECT_THROW(parse_graph6("C\x01"), ParseError);  // byte below 63
  EXPECT_THROW(parse_graph6("B@"), ParseError);     // non-zero padding bits
  EXPECT_THROW(parse_graph6(""), ParseError);
}

TEST(EdgeList, ParseAndErrors) {
  Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(g, path_graph(4));
  EXPECT_EQ(parse_edge_list(write_edge_list(cycle_graph(6))), cycle_graph(6));
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 1\nx"), ParseError);
  EXPECT_THROW(parse_edge_list("5000 0\n"), ParseError);
}

TEST(GraphFile, DetectsFormatByFirstByte) {
  auto a = parse_graph_file("Ch\nC~\n");
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[1], complete_graph(4));
  auto b = parse_graph_file("4 3\n0 1\n1 2\n2 3\n");
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], path_graph(4));
  try {
    parse_graph_file("Ch\nC~~\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
}

TEST(ExprText, RoundTripAndGrammar) {
  const std::string p4 = "(j 3 2 (u (v 3 3) (r 3 2 (r 2 1 (j 3 2 (u (v 3 2) (j 2 1 (u (v 2 1) (v 1 0)))))))))";
  CwExpr e = parse_expr(p4);
  EXPECT_EQ(serialize(e), p4);
  EXPECT_EQ(parse_expr(serialize(e)), e);
  EXPECT_THROW(parse_expr("(v 1 0"), ParseError);
  EXPECT_THROW(parse_expr("(v 0 0)"), ParseError);
  EXPECT_THROW(parse_expr("(j 2 2 (v 2 0))"), ParseError);
  EXPECT_THROW(parse_expr("(v 01 0)"), ParseError);
  EXPECT_THROW(parse_expr("(x 1 0)"), ParseError);
  EXPECT_THROW(parse_expr("(v 1 0) "), ParseError);
  EXPECT_THROW(parse_expr("(v  1 0)"), ParseError);
  try {
    parse_expr("(u (v 1 0) (q 1 1))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 12u);
  }
}
