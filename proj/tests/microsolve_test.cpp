#include <random>

#include <gtest/gtest.h>

#include "apsp/disassembly.hpp"
#include "apsp/error.hpp"
#include "apsp/microsolve.hpp"
#include "apsp/oracle.hpp"
#include "apsp/paths.hpp"
#include "support/generators.hpp"

namespace apsp {
namespace {

TEST(DijkstraTest, PathExample) {
  Graph g(3);
  g.set_edge(1, 2, Weight(1));
  g.set_edge(2, 3, Weight(2));
  const ShortestPathTree t = dijkstra(g, 1);
  EXPECT_EQ(t.distances[1], Weight(0));
  EXPECT_EQ(t.distances[2], Weight(1));
  EXPECT_EQ(t.distances[3], Weight(3));
  EXPECT_EQ(t.predecessors[1], kNoVertex);
  EXPECT_EQ(t.predecessors[2], 1u);
  EXPECT_EQ(t.predecessors[3], 2u);
}

TEST(DijkstraTest, SingleVertexAndErrors) {
  Graph g(1);
  EXPECT_EQ(dijkstra(g, 1).distances[1], Weight(0));
  EXPECT_THROW(dijkstra(g, 2), Error);
}

TEST(DijkstraTest, MatchesFloydWarshallRows) {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 50, 50 + rng() % 100, 0, 1000);
    const DistanceMatrix fw = floyd_warshall(g);
    for (VertexId s = 1; s <= 50; ++s) {
      const ShortestPathTree t = dijkstra(g, s);
      for (VertexId v = 1; v <= 50; ++v) ASSERT_EQ(t.distances[v], fw.at(s, v));
    }
  }
}

TEST(SolveResidualTest, SingleVertexOnlySetsDiagonal) {
  Graph g(3);
  g.set_edge(1, 2, Weight(1));
  g.set_edge(2, 3, Weight(1));
  g.remove_vertex(1);
  g.remove_vertex(2);
  DistanceMatrix d(3);
  PrecedenceMatrix p(3);
  p.set(3, 1, 2);
  solve_residual(g, d, p);
  EXPECT_EQ(d.at(3, 3), Weight(0));
  EXPECT_TRUE(d.at(1, 3).is_infinite());
  EXPECT_EQ(p.at(3, 1), 2u);
}

TEST(SolveResidualTest, PlainEdgeStaysUnset) {
  Graph g(2);
  g.set_edge(1, 2, Weight(9));
  DistanceMatrix d(2);
  PrecedenceMatrix p(2);
  solve_residual(g, d, p);
  EXPECT_EQ(d.at(1, 2), Weight(9));
  EXPECT_EQ(d.at(2, 1), Weight(9));
  EXPECT_EQ(d.at(1, 1), Weight(0));
  EXPECT_FALSE(p.at(1, 2).has_value());
  EXPECT_FALSE(p.at(2, 1).has_value());
}

TEST(SolveResidualTest, ShortcutEdgeKeepsRecordedPredecessor) {
  // u=1, x=2, v=3: contracting x leaves the residual edge (1, 3).
  Graph g(3);
  g.set_edge(1, 2, Weight(4));
  g.set_edge(2, 3, Weight(6));
  const Graph g0 = g;
  PrecedenceMatrix p(3);
  remove_and_preserve(g, 2, p);
  ASSERT_EQ(g.vertices(), (std::vector<VertexId>{1, 3}));
  DistanceMatrix d(3);
  solve_residual(g, d, p);
  EXPECT_EQ(d.at(1, 3), Weight(10));
  EXPECT_EQ(p.at(1, 3), 2u);
  EXPECT_EQ(reconstruct_path(p, g0, 1, 3), (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(reconstruct_path(p, g0, 3, 1), (std::vector<VertexId>{3, 2, 1}));
}

TEST(SolveResidualTest, MultiHopResidualPathExpandsLastHop) {
  // Residual path 1 - 3 - 5 where both edges are shortcuts over 2 and 4.
  Graph g(5);
  for (VertexId v = 1; v < 5; ++v) g.set_edge(v, v + 1, Weight(v));
  const Graph g0 = g;
  PrecedenceMatrix p(5);
  remove_and_preserve(g, 2, p);
  remove_and_preserve(g, 4, p);
  DistanceMatrix d(5);
  solve_residual(g, d, p);
  EXPECT_EQ(d.at(1, 5), Weight(10));
  EXPECT_EQ(p.at(1, 5), 4u);
  EXPECT_EQ(p.at(5, 1), 2u);
  EXPECT_EQ(p.at(1, 3), 2u);
}

TEST(SolveResidualTest, ResidualDistancesEqualOriginalDistances) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 4 + rng() % 60;
    const Graph g0 = testing::random_connected_graph(rng, n, n + rng() % (2 * n), 1, 1000);
    SolveParams params;
    params.max_degree = 1 + rng() % 3;
    params.min_order = 1 + rng() % n;
    PrecedenceMatrix p(n);
    const ShrinkSequence seq = disassemble(g0, params, p);
    DistanceMatrix d(n);
    solve_residual(seq.residual, d, p);
    const DistanceMatrix fw = floyd_warshall(g0);
    for (VertexId i : seq.residual.vertices()) {
      for (VertexId j : seq.residual.vertices()) ASSERT_EQ(d.at(i, j), fw.at(i, j));
    }
  }
}

}  // namespace
}  // namespace apsp
