#include "apsp/paths.hpp"

#include <algorithm>
#include <string>

#include "apsp/error.hpp"

namespace apsp {

std::vector<VertexId> reconstruct_path(const PrecedenceMatrix& pred, const Graph& g0, VertexId i,
                                       VertexId j) {
  const std::size_t n = pred.order();
  if (n != g0.original_order()) {
    throw Error(ErrorCode::kInvalidArgument, "precedence matrix order does not match the graph");
  }
  if (!g0.contains(i) || !g0.contains(j)) {
    throw Error(ErrorCode::kVertexNotPresent,
                "path endpoints " + std::to_string(i) + ", " + std::to_string(j) + " not in graph");
  }
  std::vector<VertexId> path{j};
  if (i == j) return path;

  std::vector<std::uint8_t> seen(n + 1, 0);
  seen[j] = 1;
  VertexId current = j;
  while (current != i) {
    const VertexId prev = pred.at(i, current).value_or(i);
    if (g0.edge_weight(prev, current).is_infinite()) {
      throw Error(ErrorCode::kCorrupt, "path " + std::to_string(i) + "->" + std::to_string(j) +
                                           " steps over non-edge (" + std::to_string(prev) + ", " +
                                           std::to_string(current) + ")");
    }
    if (seen[prev] != 0) {
      throw Error(ErrorCode::kCorrupt, "path " + std::to_string(i) + "->" + std::to_string(j) +
                                           " revisits vertex " + std::to_string(prev));
    }
    seen[prev] = 1;
    path.push_back(prev);
    current = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Weight path_weight(const Graph& g0, std::span<const VertexId> path) {
  if (path.empty()) throw Error(ErrorCode::kInvalidArgument, "empty path");
  Weight total(0);
  for (std::size_t k = 1; k < path.size(); ++k) {
    total = total + g0.edge_weight(path[k - 1], path[k]);
    if (total.is_infinite()) break;
  }
  return total;
}

}  // namespace apsp
