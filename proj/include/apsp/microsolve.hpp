#pragma once

#include <vector>

#include "apsp/graph.hpp"
#include "apsp/matrix.hpp"

namespace apsp {

/// Single-source result, indexed by vertex id (slot 0 unused). Absent or
/// unreachable vertices have infinite distance; the source and unreached
/// vertices have predecessor kNoVertex.
struct ShortestPathTree {
  std::vector<Weight> distances;
  std::vector<VertexId> predecessors;
};

/// Binary-heap Dijkstra over the present vertices of g.
ShortestPathTree dijkstra(const Graph& g, VertexId source);

/// Exact APSP on the residual graph, written into the residual rows and
/// columns of `dist`, then merged into `pred`: for each residual pair (i, j)
/// whose residual shortest path ends with the hop (q, j), q != i, the
/// predecessor of j becomes the one recorded for the edge (q, j) (q itself
/// when that edge is an input edge). A residual path that is a single edge
/// keeps the entry recorded for that edge. A one-vertex residual only gets
/// its zero diagonal.
void solve_residual(const Graph& residual, DistanceMatrix& dist, PrecedenceMatrix& pred);

}  // namespace apsp
