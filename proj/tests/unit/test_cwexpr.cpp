#include <gtest/gtest.h>

#include <random>

#include "cwchordal/cwexpr.hpp"
#include "cwchordal/exact_cw.hpp"
#include "support.hpp"

using namespace cwc;

namespace {

const char* const kP4 = "(j 3 2 (u (v 3 3) (r 3 2 (r 2 1 (j 3 2 (u (v 3 2) (j 2 1 (u (v 2 1) (v 1 0)))))))))";

// Direct composition: vertex v of q replaced by the graph parts[v]; parts are
// laid out consecutively in order of q's vertices.
Graph compose(const Graph& q, const std::vector<Graph>& parts, std::vector<int>& offset) {
  int n = 0;
  offset.clear();
  for (const auto& p : parts) {
    offset.push_back(n);
    n += p.n();
  }
  GraphBuilder b(n);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (auto [u, v] : parts[i].edges()) b.add_edge(offset[i] + u, offset[i] + v);
  for (auto [a, c] : q.edges())
    for (int u = 0; u < parts[static_cast<std::size_t>(a)].n(); ++u)
      for (int v = 0; v < parts[static_cast<std::size_t>(c)].n(); ++v)
        b.add_edge(offset[static_cast<std::size_t>(a)] + u, offset[static_cast<std::size_t>(c)] + v);
  return b.build();
}

}  // namespace

TEST(CwExpr, P4Expression) {
  CwExpr e = parse_expr(kP4);
  EXPECT_EQ(width(e), 3);
  EXPECT_TRUE(validate(e, path_graph(4)));
  EXPECT_FALSE(validate(e, cycle_graph(4)));
  LabelledGraph lg = evaluate(e);
  EXPECT_EQ(lg.label[3], 3);
  EXPECT_EQ(lg.label[0], 1);
  EXPECT_EQ(lg.label[2], 2);
  EXPECT_EQ(final_labels(e), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(leaf_vertices(e).size(), 4u);
}

TEST(CwExpr, FactoriesRejectBadLabels) {
  EXPECT_THROW(CwExpr::leaf(0, 1), std::invalid_argument);
  EXPECT_THROW(CwExpr::join(2, 2, CwExpr::leaf(1, 0)), std::invalid_argument);
  EXPECT_THROW(CwExpr::rename(1, 1, CwExpr::leaf(1, 0)), std::invalid_argument);
  EXPECT_THROW(evaluate(CwExpr::unite(CwExpr::leaf(1, 0), CwExpr::leaf(2, 0))), std::invalid_argument);
}

TEST(CwExpr, WidthCountsEveryLabelMentioned) {
  // label 5 only appears in a rename of an absent label
  CwExpr e = CwExpr::rename(5, 1, CwExpr::leaf(1, 0));
  EXPECT_EQ(width(e), 2);
  EXPECT_EQ(width(normalize_labels(CwExpr::leaf(7, 0))), 1);
  EXPECT_EQ(serialize(normalize_labels(parse_expr("(j 4 9 (u (v 4 0) (v 9 1)))"))), "(j 1 2 (u (v 1 0) (v 2 1)))");
}

TEST(CwExpr, ValidateNeedsExactVertexSet) {
  CwExpr e = parse_expr("(j 1 2 (u (v 1 0) (v 2 2)))");
  EXPECT_FALSE(validate(e, path_graph(2)));
  EXPECT_FALSE(validate(e, path_graph(3)));
}

TEST(SubstituteModules, WidthAndEvaluation) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 200; ++it) {
    int qn = 1 + static_cast<int>(rng() % 4);
    Graph q = support::random_graph(qn, 0.5, rng);
    std::vector<Graph> parts;
    int total = 0;
    for (int i = 0; i < qn; ++i) {
      int pn = 1 + static_cast<int>(rng() % std::max(1, (12 - total) / (qn - i)));
      parts.push_back(support::random_graph(pn, 0.5, rng));
      total += pn;
    }
    std::vector<int> offset;
    Graph want = compose(q, parts, offset);
    CwExpr qe = *exact_cw(q, q.n()).witness;
    std::map<Vertex, CwExpr> pe;
    int maxw = width(qe);
    for (int i = 0; i < qn; ++i) {
      auto w = exact_cw(parts[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(i)].n()).witness;
      std::vector<Vertex> ids;
      for (int v = 0; v < parts[static_cast<std::size_t>(i)].n(); ++v) ids.push_back(offset[static_cast<std::size_t>(i)] + v);
      pe.emplace(i, relabel_vertices(*w, ids));
      maxw = std::max(maxw, width(*w));
    }
    CwExpr s = substitute_modules(qe, pe);
    ASSERT_EQ(width(s), maxw);
    ASSERT_TRUE(validate(s, want));
  }
}

TEST(SubstituteModules, RenamesAppendedInAscendingOrder) {
  CwExpr q = parse_expr("(j 1 2 (u (v 1 0) (v 2 1)))");
  std::map<Vertex, CwExpr> parts;
  parts.emplace(0, parse_expr("(u (v 1 5) (u (v 2 6) (v 3 7)))"));
  parts.emplace(1, CwExpr::leaf(1, 8));
  EXPECT_EQ(serialize(substitute_modules(q, parts)),
            "(j 1 2 (u (r 3 1 (r 2 1 (u (v 1 5) (u (v 2 6) (v 3 7))))) (r 1 2 (v 1 8))))");
  EXPECT_THROW(substitute_modules(q, parts, 2), std::invalid_argument);
  parts.erase(1);
  EXPECT_THROW(substitute_modules(q, parts), std::invalid_argument);
}
