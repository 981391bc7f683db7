#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "apsp/weight.hpp"

namespace apsp {

struct Neighbor {
  VertexId id = kNoVertex;
  Weight weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Undirected simple graph with finite non-negative weights.
///
/// Vertices keep their original ids for the lifetime of the object; removal
/// only clears a vertex's membership, so every intermediate graph of a
/// contraction can be indexed by the ids of the input graph. Each adjacency
/// list is kept sorted by neighbor id, which gives logarithmic weight lookup
/// and deterministic iteration order.
class Graph {
 public:
  Graph() = default;
  /// Graph on vertices 1..order with no edges.
  explicit Graph(std::size_t order);

  /// Order of the graph this one was created as (the id range).
  std::size_t original_order() const { return adjacency_.size(); }
  std::size_t vertex_count() const { return present_count_; }
  std::size_t edge_count() const { return edge_count_; }

  bool contains(VertexId v) const {
    return v != kNoVertex && v <= adjacency_.size() && present_[v - 1] != 0;
  }
  std::size_t degree(VertexId v) const { return list(v).size(); }
  std::span<const Neighbor> neighbors(VertexId v) const { return list(v); }

  /// Weight of edge (u, v), or infinity when the pair is not adjacent.
  /// (u, u) is always infinity: the graph has no loops.
  Weight edge_weight(VertexId u, VertexId v) const;

  /// Inserts or overwrites edge (u, v) in both directions.
  void set_edge(VertexId u, VertexId v, Weight w);

  /// Deletes edge (u, v); no-op when the pair is not adjacent.
  void remove_edge(VertexId u, VertexId v);

  /// Removes v and its incident edges. Returns the incident edges as they were,
  /// sorted by neighbor id. Weights between surviving vertices are untouched.
  std::vector<Neighbor> remove_vertex(VertexId v);

  /// Inverse of remove_vertex: makes v present again with the given edges.
  void restore_vertex(VertexId v, std::span<const Neighbor> edges);

  /// Present vertex ids in ascending order.
  std::vector<VertexId> vertices() const;

  /// Calls fn(u, v, w) once per undirected edge with u < v, ascending (u, v).
  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    for (std::size_t i = 0; i < adjacency_.size(); ++i) {
      const auto u = static_cast<VertexId>(i + 1);
      for (const Neighbor& nb : adjacency_[i]) {
        if (u < nb.id) fn(u, nb.id, nb.weight);
      }
    }
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  const std::vector<Neighbor>& list(VertexId v) const;
  std::vector<Neighbor>& list(VertexId v);

  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::uint8_t> present_;
  std::size_t present_count_ = 0;
  std::size_t edge_count_ = 0;
};

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;

  /// 2m/n; zero for the empty graph.
  double average_degree() const {
    return n == 0 ? 0.0 : 2.0 * static_cast<double>(m) / static_cast<double>(n);
  }
};

GraphStats stats(const Graph& g);

/// A pair of present vertices with no path between them, or nullopt when g is
/// connected. Throws on an empty graph.
std::optional<std::pair<VertexId, VertexId>> find_unreachable_pair(const Graph& g);

bool is_connected(const Graph& g);

struct Subgraph {
  Graph graph;
  /// original_ids[k] is the id in the source graph of vertex k + 1.
  std::vector<VertexId> original_ids;
};

/// Induced subgraph on the first `size` vertices reached by a breadth-first
/// search from a start vertex chosen by `seed`. Neighbors are visited in
/// ascending id order and the selected vertices are relabeled 1..size keeping
/// their relative id order, so the result is connected and deterministic.
Subgraph extract_connected_subgraph(const Graph& g, std::size_t size, std::uint64_t seed);

}  // namespace apsp
