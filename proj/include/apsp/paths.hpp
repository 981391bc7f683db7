#pragma once

#include <span>
#include <vector>

#include "apsp/graph.hpp"
#include "apsp/matrix.hpp"

namespace apsp {

/// Vertex sequence i, ..., j read back to front from row i of `pred`. Every
/// consecutive pair is checked against `g0`; a repeated vertex, a non-edge or
/// more than n steps raise kCorrupt. reconstruct_path(p, g, i, i) is [i].
std::vector<VertexId> reconstruct_path(const PrecedenceMatrix& pred, const Graph& g0, VertexId i,
                                       VertexId j);

/// Sum of edge weights along `path`; infinity if a consecutive pair is not
/// adjacent in g0. A single vertex has length 0.
Weight path_weight(const Graph& g0, std::span<const VertexId> path);

}  // namespace apsp
