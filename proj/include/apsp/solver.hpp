#pragma once

#include <cstddef>

#include "apsp/disassembly.hpp"
#include "apsp/graph.hpp"
#include "apsp/matrix.hpp"

namespace apsp {

/// Hop counts share the 64-bit cost word with path lengths (see solve), so
/// the order is bounded to keep every hop count of a two-edge walk below
/// 2^16.
inline constexpr std::size_t kMaxSolveOrder = 32768;

struct SolveSummary {
  std::size_t removals = 0;
  std::size_t residual_order = 0;
  std::size_t max_removed_degree = 0;
};

struct Solution {
  DistanceMatrix distances;
  PrecedenceMatrix predecessors;
  SolveSummary summary;
};

/// All-pairs shortest paths by contraction: disassemble, solve the residual
/// exactly, then assemble back to the full graph.
///
/// Internally every edge costs (weight << 16) + 1, so among paths of equal
/// length the one with fewer edges is strictly cheaper. This keeps the
/// predecessor structure acyclic when zero weights create ties; the
/// reported distances are the plain weight sums.
Solution solve(const Graph& g, const SolveParams& params);

}  // namespace apsp
