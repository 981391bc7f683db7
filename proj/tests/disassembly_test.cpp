#include <random>

#include <gtest/gtest.h>

#include "apsp/disassembly.hpp"
#include "apsp/error.hpp"
#include "apsp/oracle.hpp"
#include "support/generators.hpp"

namespace apsp {
namespace {

// w(1,2) = w(2,3) = 1, w(1,3) = 5.
Graph triangle() {
  Graph g(3);
  g.set_edge(1, 2, Weight(1));
  g.set_edge(2, 3, Weight(1));
  g.set_edge(1, 3, Weight(5));
  return g;
}

Graph unit_path(std::size_t n) {
  Graph g(n);
  for (VertexId v = 1; v < n; ++v) g.set_edge(v, v + 1, Weight(1));
  return g;
}

// Distances among the present vertices of g, brute force.
DistanceMatrix survivor_distances(const Graph& g) { return floyd_warshall(g); }

TEST(ShortcutWeightTest, Examples) {
  Graph g(4);
  g.set_edge(1, 2, Weight(1));
  g.set_edge(2, 3, Weight(1));
  EXPECT_EQ(shortcut_weight(g, 2, 1, 3), Weight(2));
  EXPECT_TRUE(shortcut_weight(g, 2, 1, 4).is_infinite());
  g.set_edge(1, 2, Weight(3));
  g.set_edge(2, 3, Weight(4));
  EXPECT_EQ(shortcut_weight(g, 2, 1, 3), Weight(7));
}

TEST(BestAlternativeTest, Examples) {
  Graph g(5);
  g.set_edge(1, 3, Weight(1));
  g.set_edge(3, 2, Weight(1));
  EXPECT_TRUE(best_alternative_two_hop(g, 1, 2, 3).is_infinite());

  g.set_edge(1, 4, Weight(2));
  g.set_edge(4, 2, Weight(3));
  g.set_edge(1, 5, Weight(1));
  g.set_edge(5, 2, Weight(2));
  EXPECT_EQ(best_alternative_two_hop(g, 1, 2, 3), Weight(3));
  EXPECT_EQ(best_alternative_two_hop(g, 2, 1, 5), Weight(2));

  Graph apart(4);
  apart.set_edge(1, 2, Weight(1));
  apart.set_edge(3, 4, Weight(1));
  EXPECT_TRUE(best_alternative_two_hop(apart, 1, 3, 2).is_infinite());
}

TEST(EdgeDeltaTest, Examples) {
  EXPECT_EQ(edge_delta(unit_path(3), 1), -1);
  EXPECT_EQ(edge_delta(triangle(), 2), -2);

  Graph star(4);
  for (VertexId leaf = 2; leaf <= 4; ++leaf) star.set_edge(1, leaf, Weight(1));
  EXPECT_EQ(edge_delta(star, 1), 0);

  Graph lone(2);
  EXPECT_THROW(edge_delta(lone, 1), Error);
}

TEST(RemoveAndPreserveTest, TriangleWritesShortcut) {
  Graph g = triangle();
  PrecedenceMatrix p(3);
  const RemovalRecord rec = remove_and_preserve(g, 2, p);
  EXPECT_EQ(g.edge_weight(1, 3), Weight(2));
  EXPECT_EQ(p.at(1, 3), 2u);
  EXPECT_EQ(p.at(3, 1), 2u);
  EXPECT_EQ(rec.vertex, 2u);
  EXPECT_EQ(rec.incident_edges, (std::vector<Neighbor>{{1, Weight(1)}, {3, Weight(1)}}));
  ASSERT_EQ(rec.mutations.size(), 1u);
  EXPECT_EQ(rec.mutations[0], (EdgeMutation{1, 3, Weight(5), Weight(2)}));
  EXPECT_EQ(rec.edge_delta, -2);
}

TEST(RemoveAndPreserveTest, LeafRemovalWritesNothing) {
  Graph g = unit_path(3);
  g.set_edge(1, 2, Weight(4));
  PrecedenceMatrix p(3);
  const RemovalRecord rec = remove_and_preserve(g, 1, p);
  EXPECT_TRUE(rec.mutations.empty());
  EXPECT_EQ(rec.incident_edges, (std::vector<Neighbor>{{2, Weight(4)}}));
  EXPECT_EQ(rec.edge_delta, -1);
}

TEST(RemoveAndPreserveTest, SquareTieAddsNoEdge) {
  Graph g(4);
  g.set_edge(1, 2, Weight(1));
  g.set_edge(2, 3, Weight(1));
  g.set_edge(3, 4, Weight(1));
  g.set_edge(4, 1, Weight(1));
  const DistanceMatrix before = survivor_distances(g);
  PrecedenceMatrix p(4);
  const RemovalRecord rec = remove_and_preserve(g, 2, p);
  EXPECT_TRUE(rec.mutations.empty());
  EXPECT_TRUE(g.edge_weight(1, 3).is_infinite());
  EXPECT_EQ(g.edge_count(), 2u);
  const DistanceMatrix after = survivor_distances(g);
  EXPECT_EQ(before.at(1, 3), Weight(2));
  EXPECT_EQ(after.at(1, 3), Weight(2));
}

TEST(RemoveAndPreserveTest, ChainedShortcutKeepsInnerPredecessor) {
  // 1 -a- 2 -b- 3 -c- 4: removing 2 then 3 must leave P[1][4] = 3 and
  // P[4][1] = 2, the vertices adjacent to the ends on the original path.
  Graph g = unit_path(4);
  PrecedenceMatrix p(4);
  remove_and_preserve(g, 2, p);
  remove_and_preserve(g, 3, p);
  EXPECT_EQ(g.edge_weight(1, 4), Weight(3));
  EXPECT_EQ(p.at(1, 4), 3u);
  EXPECT_EQ(p.at(4, 1), 2u);
}

TEST(RemoveAndPreserveTest, DecisionsUseThePreRemovalGraph) {
  // The pure delta and the realized edge count change must agree, which only
  // holds if no decision sees a shortcut written earlier in the same removal.
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + rng() % 20;
    Graph g = testing::random_connected_graph(rng, n, n + rng() % (2 * n), 0, 10);
    const auto v = static_cast<VertexId>(rng() % n + 1);
    const std::int64_t predicted = edge_delta(g, v);
    const auto m_before = static_cast<std::int64_t>(g.edge_count());
    PrecedenceMatrix p(n);
    const RemovalRecord rec = remove_and_preserve(g, v, p);
    EXPECT_EQ(static_cast<std::int64_t>(g.edge_count()) - m_before, predicted);
    EXPECT_EQ(rec.edge_delta, predicted);
  }
}

TEST(RemoveAndPreserveTest, MutationsOnlyImproveAndLeavesNeverMutate) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 25;
    Graph g = testing::random_connected_graph(rng, n, n + rng() % n, 0, 30);
    PrecedenceMatrix p(n);
    const ShrinkSequence seq = disassemble(g, SolveParams{}, p);
    for (const RemovalRecord& rec : seq.records) {
      if (rec.incident_edges.size() == 1) EXPECT_TRUE(rec.mutations.empty());
      std::int64_t created = 0;
      for (const EdgeMutation& m : rec.mutations) {
        EXPECT_LT(m.new_weight, m.old_weight);
        if (m.old_weight.is_infinite()) ++created;
      }
      EXPECT_EQ(rec.edge_delta, created - static_cast<std::int64_t>(rec.incident_edges.size()));
    }
  }
}

TEST(RemoveAndPreserveTest, PreservesSurvivorDistances) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + rng() % 40;
    Graph g = testing::random_connected_graph(rng, n, n + rng() % (2 * n), 0, 100);
    PrecedenceMatrix p(n);
    for (int step = 0; step < 6 && g.vertex_count() > 1; ++step) {
      const auto vs = g.vertices();
      const VertexId v = vs[rng() % vs.size()];
      const DistanceMatrix before = survivor_distances(g);
      remove_and_preserve(g, v, p);
      const DistanceMatrix after = survivor_distances(g);
      for (VertexId x : g.vertices()) {
        for (VertexId y : g.vertices()) ASSERT_EQ(after.at(x, y), before.at(x, y));
      }
    }
  }
}

TEST(DisassembleTest, PathCascadesThroughWorkStack) {
  PrecedenceMatrix p(4);
  std::vector<VertexId> order;
  const ShrinkSequence seq = disassemble(unit_path(4), SolveParams{}, p,
                                         [&](const Graph&, const RemovalRecord& r) {
                                           order.push_back(r.vertex);
                                         });
  EXPECT_EQ(order, (std::vector<VertexId>{1, 2, 3}));
  ASSERT_EQ(seq.records.size(), 3u);
  EXPECT_EQ(seq.residual.vertices(), std::vector<VertexId>{4});
}

TEST(DisassembleTest, SingleVertexIsUntouched) {
  PrecedenceMatrix p(1);
  const ShrinkSequence seq = disassemble(Graph(1), SolveParams{}, p);
  EXPECT_TRUE(seq.records.empty());
  EXPECT_EQ(seq.residual, Graph(1));
}

TEST(DisassembleTest, LongPathCascadesFromOneEnd) {
  const std::size_t n = 3000;
  PrecedenceMatrix p(n);
  std::size_t last = 0;
  bool in_order = true;
  const ShrinkSequence seq = disassemble(unit_path(n), SolveParams{}, p,
                                         [&](const Graph&, const RemovalRecord& r) {
                                           in_order = in_order && r.vertex == last + 1;
                                           last = r.vertex;
                                         });
  EXPECT_TRUE(in_order);
  EXPECT_EQ(seq.records.size(), n - 1);
  EXPECT_EQ(seq.max_removed_degree(), 1u);
}

TEST(DisassembleTest, FullContractionLeavesOneVertex) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 60;
    const Graph g = testing::random_connected_graph(rng, n, n + rng() % (2 * n), 0, 100);
    PrecedenceMatrix p(n);
    const ShrinkSequence seq = disassemble(g, SolveParams{}, p);
    EXPECT_EQ(seq.residual.vertex_count(), 1u);
    EXPECT_EQ(seq.records.size(), n - 1);
  }
}

TEST(DisassembleTest, SequenceInvariants) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 50;
    const Graph g = testing::random_connected_graph(rng, n, n + rng() % (2 * n), 1, 100);
    SolveParams params;
    params.max_degree = 1 + rng() % 4;
    params.max_edge_growth = static_cast<std::int64_t>(rng() % 3) - 1;
    params.min_order = 1 + rng() % n;
    PrecedenceMatrix p(n);
    const ShrinkSequence seq = disassemble(g, params, p);
    std::vector<int> seen(n + 1, 0);
    for (const RemovalRecord& r : seq.records) {
      EXPECT_EQ(seen[r.vertex]++, 0);
      EXPECT_FALSE(seq.residual.contains(r.vertex));
      EXPECT_LE(r.incident_edges.size(), *params.max_degree);
      EXPECT_LE(r.edge_delta, *params.max_edge_growth);
    }
    EXPECT_EQ(seq.residual.vertex_count() + seq.records.size(), n);
    EXPECT_GE(seq.residual.vertex_count(), std::min(params.min_order, n));
  }
}

TEST(DisassembleTest, StopsAtMinOrder) {
  PrecedenceMatrix p(10);
  SolveParams params;
  params.min_order = 4;
  const ShrinkSequence seq = disassemble(unit_path(10), params, p);
  EXPECT_EQ(seq.residual.vertex_count(), 4u);
}

TEST(DisassembleTest, NegativeGrowthLimitBlocksDegreeTwo) {
  // On a cycle every vertex has degree 2 and removal creates one shortcut:
  // delta is -1, so I_max = -2 blocks everything.
  Graph cycle(5);
  for (VertexId v = 1; v <= 5; ++v) cycle.set_edge(v, v % 5 + 1, Weight(1));
  SolveParams params;
  params.max_edge_growth = -2;
  PrecedenceMatrix p(5);
  EXPECT_TRUE(disassemble(cycle, params, p).records.empty());
}

TEST(DisassembleTest, RejectsBadInput) {
  Graph two(4);
  two.set_edge(1, 2, Weight(1));
  two.set_edge(3, 4, Weight(1));
  PrecedenceMatrix p(4);
  try {
    disassemble(two, SolveParams{}, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }
  SolveParams zero_floor;
  zero_floor.min_order = 0;
  EXPECT_THROW(disassemble(unit_path(4), zero_floor, p), Error);
  SolveParams zero_degree;
  zero_degree.max_degree = 0;
  EXPECT_THROW(disassemble(unit_path(4), zero_degree, p), Error);
  PrecedenceMatrix wrong(3);
  EXPECT_THROW(disassemble(unit_path(4), SolveParams{}, wrong), Error);
}

}  // namespace
}  // namespace apsp
