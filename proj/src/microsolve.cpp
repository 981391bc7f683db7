#include "apsp/microsolve.hpp"

#include <functional>
#include <queue>
#include <string>

#include "apsp/error.hpp"

namespace apsp {
namespace {

class DijkstraRunner {
 public:
  explicit DijkstraRunner(const Graph& g)
      : g_(g),
        tree_{std::vector<Weight>(g.original_order() + 1, Weight::infinity()),
              std::vector<VertexId>(g.original_order() + 1, kNoVertex)} {}

  const ShortestPathTree& run(VertexId source) {
    if (!g_.contains(source)) {
      throw Error(ErrorCode::kVertexNotPresent, "vertex " + std::to_string(source) + " is not present");
    }
    std::fill(tree_.distances.begin(), tree_.distances.end(), Weight::infinity());
    std::fill(tree_.predecessors.begin(), tree_.predecessors.end(), kNoVertex);

    using Entry = std::pair<Weight, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    tree_.distances[source] = Weight(0);
    heap.emplace(Weight(0), source);
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d > tree_.distances[u]) continue;
      for (const Neighbor& nb : g_.neighbors(u)) {
        const Weight cand = d + nb.weight;
        if (cand < tree_.distances[nb.id]) {
          tree_.distances[nb.id] = cand;
          tree_.predecessors[nb.id] = u;
          heap.emplace(cand, nb.id);
        }
      }
    }
    return tree_;
  }

 private:
  const Graph& g_;
  ShortestPathTree tree_;
};

}  // namespace

ShortestPathTree dijkstra(const Graph& g, VertexId source) {
  DijkstraRunner runner(g);
  return runner.run(source);
}

void solve_residual(const Graph& residual, DistanceMatrix& dist, PrecedenceMatrix& pred) {
  if (dist.order() != residual.original_order() || pred.order() != residual.original_order()) {
    throw Error(ErrorCode::kInvalidArgument, "matrix order does not match the graph");
  }
  const auto vs = residual.vertices();
  if (vs.size() == 1) {
    dist.set(vs.front(), vs.front(), Weight(0));
    return;
  }

  // Entries recorded for residual edges, taken before any row is rewritten.
  const std::size_t r = vs.size();
  std::vector<std::size_t> local(residual.original_order() + 1, 0);
  for (std::size_t k = 0; k < r; ++k) local[vs[k]] = k;
  std::vector<VertexId> recorded(r * r, kNoVertex);
  for (VertexId q : vs) {
    for (const Neighbor& nb : residual.neighbors(q)) {
      const VertexId p = pred.raw(q, nb.id);
      recorded[local[q] * r + local[nb.id]] = p != kNoVertex ? p : q;
    }
  }

  DijkstraRunner runner(residual);
  for (VertexId i : vs) {
    const ShortestPathTree& tree = runner.run(i);
    for (VertexId j : vs) {
      dist.set(i, j, tree.distances[j]);
      if (j == i) continue;
      const VertexId q = tree.predecessors[j];
      if (q == i || q == kNoVertex) continue;
      pred.set(i, j, recorded[local[q] * r + local[j]]);
    }
  }
}

}  // namespace apsp
