#pragma once

#include <cstddef>

#include "apsp/graph.hpp"
#include "apsp/matrix.hpp"

namespace apsp {

// Reference solvers. Neither shares traversal code with the contraction
// pipeline: both work on their own flattened copy of the edge set.

struct ApspResult {
  DistanceMatrix distances;
  PrecedenceMatrix predecessors;
};

/// Binary-heap Dijkstra from every vertex. Sources are split across
/// `threads` workers (each writes its own rows). Predecessors equal to the
/// source are stored unset, matching the direct-edge convention.
ApspResult apsp_dijkstra(const Graph& g, unsigned threads = 1);

inline constexpr std::size_t kFloydWarshallDefaultCap = 512;

/// Triple-loop Floyd-Warshall. Refuses graphs above `max_order` vertices.
DistanceMatrix floyd_warshall(const Graph& g, std::size_t max_order = kFloydWarshallDefaultCap);

}  // namespace apsp
