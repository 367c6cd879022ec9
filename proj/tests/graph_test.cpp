#include "rvc/graph.hpp"

#include <gtest/gtest.h>

#include "rvc/canonical.hpp"
#include "rvc/constructions.hpp"
#include "support/brute_force.hpp"

namespace rvc {
namespace {

using testing::all_labeled_graphs;
using testing::naive_diameter;
using testing::to_matrix;

TEST(FromEdgesTest, SmallestEdge) {
  const Graph k2 = Graph::from_edges(2, {{0, 1}});
  EXPECT_EQ(k2.order(), 2);
  EXPECT_TRUE(k2.adjacent(0, 1));
  EXPECT_TRUE(k2.adjacent(1, 0));
  EXPECT_TRUE(k2.is_complete());
}

TEST(FromEdgesTest, CycleWiring) {
  const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_EQ(c5.edge_count(), 5);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2);
  EXPECT_EQ(c5, cycle_graph(5));
}

TEST(FromEdgesTest, Singleton) {
  const Graph k1 = Graph::from_edges(1, {});
  EXPECT_TRUE(is_connected(k1));
  EXPECT_EQ(diameter(k1), 0);
  EXPECT_TRUE(k1.is_complete());
}

TEST(FromEdgesTest, DuplicatesCollapse) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(FromEdgesTest, Errors) {
  EXPECT_THROW(Graph::from_edges(0, {}), GraphError);
  EXPECT_THROW(Graph::from_edges(65, {}), GraphError);
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph::from_edges(3, {{-1, 2}}), GraphError);
  EXPECT_NO_THROW(Graph::from_edges(64, {{0, 63}}));
}

TEST(FromRowsTest, RejectsAsymmetryAndLoops) {
  EXPECT_THROW(Graph::from_rows({0b10, 0b00}), GraphError);
  EXPECT_THROW(Graph::from_rows({0b01, 0b00}), GraphError);
  EXPECT_THROW(Graph::from_rows({0b100, 0b000}), GraphError);
}

TEST(GraphTest, FullWidthComplement) {
  const Graph k64 = complete_graph(64);
  EXPECT_EQ(k64.edge_count(), 64 * 63 / 2);
  EXPECT_EQ(complement(k64), Graph::empty(64));
  EXPECT_EQ(diameter(k64), 1);
}

TEST(ComplementTest, CompleteToEmpty) {
  EXPECT_EQ(complement(complete_graph(4)), Graph::empty(4));
}

TEST(ComplementTest, FiveCycleIsSelfComplementary) {
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(canonical_form(complement(c5)), canonical_form(c5));
}

TEST(ComplementTest, InvolutionOnLabeledPath) {
  const Graph p6 = path_graph(6);
  EXPECT_EQ(complement(complement(p6)), p6);
}

TEST(ComplementTest, InvolutionExhaustive) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) {
      ASSERT_EQ(complement(complement(g)), g) << describe(g);
    }
  }
}

TEST(ConnectivityTest, Examples) {
  EXPECT_TRUE(is_connected(path_graph(5)));
  EXPECT_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  // K3 plus an isolated vertex.
  EXPECT_FALSE(is_connected(complement(star_graph(4))));
}

TEST(DiameterTest, Examples) {
  EXPECT_EQ(diameter(path_graph(5)), 4);
  EXPECT_EQ(diameter(complete_graph(6)), 1);
  for (int n = 5; n <= 10; ++n) {
    EXPECT_EQ(diameter(complement(path_graph(n))), 2) << "n=" << n;
  }
}

TEST(DiameterTest, DisconnectedIsAnError) {
  EXPECT_THROW(diameter(Graph::empty(3)), DisconnectedGraphError);
}

TEST(DiameterTest, AgreesWithFloydWarshall) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) {
      const int expected = naive_diameter(to_matrix(g));
      ASSERT_EQ(is_connected(g), expected >= 0) << describe(g);
      if (expected >= 0) ASSERT_EQ(diameter(g), expected) << describe(g);
    }
  }
}

// diam(G) >= 3 gives a connected complement of diameter <= 3, and
// diam(G) >= 4 brings it down to <= 2. P4 shows the first cannot be
// tightened to 2.
TEST(DiameterTest, LargeDiameterBoundsComplementDiameter) {
  int checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) {
      if (!is_connected(g) || diameter(g) < 3) continue;
      const Graph gbar = complement(g);
      ASSERT_TRUE(is_connected(gbar)) << describe(g);
      ASSERT_LE(diameter(gbar), 3) << describe(g);
      if (diameter(g) >= 4) ASSERT_LE(diameter(gbar), 2) << describe(g);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
  EXPECT_EQ(diameter(path_graph(4)), 3);
  EXPECT_EQ(diameter(complement(path_graph(4))), 3);
}

TEST(GraphTest, WithVertex) {
  const Graph g = path_graph(3).with_vertex(0b101);
  EXPECT_EQ(g, cycle_graph(4));
  EXPECT_THROW(path_graph(3).with_vertex(0b1000), GraphError);
}

TEST(GraphTest, Relabeled) {
  const Graph p3 = path_graph(3);
  const Graph moved = p3.relabeled({1, 0, 2});  // middle vertex 1 -> 0
  EXPECT_EQ(moved.degree(0), 2);
  EXPECT_THROW(p3.relabeled({0, 0, 1}), GraphError);
  EXPECT_THROW(p3.relabeled({0, 1}), GraphError);
}

}  // namespace
}  // namespace rvc
