#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "apsp/graph.hpp"
#include "apsp/matrix.hpp"

namespace apsp {

/// Contraction limits. An empty optional means unbounded.
struct SolveParams {
  /// Largest degree a vertex may have when it is removed.
  std::optional<std::size_t> max_degree;
  /// Largest allowed net edge growth caused by removing a single vertex.
  std::optional<std::int64_t> max_edge_growth;
  /// Contraction stops once this many vertices remain.
  std::size_t min_order = 1;

  /// Throws kInvalidArgument unless min_order >= 1 and max_degree >= 1.
  void validate() const;
};

struct EdgeMutation {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  Weight old_weight;  // infinity when the edge was created
  Weight new_weight;

  friend bool operator==(const EdgeMutation&, const EdgeMutation&) = default;
};

/// Everything the assembly stage needs to put one vertex back.
struct RemovalRecord {
  VertexId vertex = kNoVertex;
  /// Edges of the vertex at removal time, ascending neighbor id.
  std::vector<Neighbor> incident_edges;
  std::vector<EdgeMutation> mutations;
  /// Net change in edge count: created shortcuts minus incident edges.
  std::int64_t edge_delta = 0;
};

struct ShrinkSequence {
  std::vector<RemovalRecord> records;  // removal order
  Graph residual;

  std::size_t max_removed_degree() const;
};

/// w(a, via) + w(via, b); infinity if either edge is missing.
Weight shortcut_weight(const Graph& g, VertexId via, VertexId a, VertexId b);

/// Cheapest two-edge connection a - h - b over common neighbors h != excluded.
Weight best_alternative_two_hop(const Graph& g, VertexId a, VertexId b, VertexId excluded);

/// Net edge count change that remove_and_preserve(g, v) would cause. Pure.
/// Throws for an isolated vertex.
std::int64_t edge_delta(const Graph& g, VertexId v);

/// Removes v while keeping every distance between the remaining vertices.
///
/// For each pair of neighbors (a, b) the path a - v - b is written as an edge
/// when it is strictly shorter than both the current edge (a, b) and every
/// other two-edge connection between a and b. All decisions are taken on the
/// graph as it was before the call. For every shortcut written, the
/// predecessor of b on a -> b becomes the predecessor of b on v -> b (v when
/// that is a plain edge), and symmetrically for b -> a.
RemovalRecord remove_and_preserve(Graph& g, VertexId v, PrecedenceMatrix& pred);

using RemovalObserver = std::function<void(const Graph& after, const RemovalRecord& record)>;

/// Contracts g by removing vertices in ascending degree order (ascending id
/// within a degree) until min_order vertices remain or nothing more can be
/// removed under the limits. After each removal the removed vertex's
/// neighbors whose degree dropped to the current level are handled first,
/// using an explicit stack. `pred` must be an all-unset matrix of g's
/// original order; it receives the shortcut predecessors.
ShrinkSequence disassemble(Graph g, const SolveParams& params, PrecedenceMatrix& pred,
                           const RemovalObserver& observer = {});

}  // namespace apsp
