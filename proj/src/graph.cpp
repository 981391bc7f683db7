#include "apsp/graph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <string>

#include "apsp/error.hpp"

namespace apsp {
namespace {

auto find_neighbor(std::vector<Neighbor>& adj, VertexId v) {
  return std::lower_bound(adj.begin(), adj.end(), v,
                          [](const Neighbor& nb, VertexId id) { return nb.id < id; });
}

auto find_neighbor(const std::vector<Neighbor>& adj, VertexId v) {
  return std::lower_bound(adj.begin(), adj.end(), v,
                          [](const Neighbor& nb, VertexId id) { return nb.id < id; });
}

void erase_neighbor(std::vector<Neighbor>& adj, VertexId v) {
  auto it = find_neighbor(adj, v);
  if (it != adj.end() && it->id == v) adj.erase(it);
}

[[noreturn]] void throw_absent(VertexId v) {
  throw Error(ErrorCode::kVertexNotPresent, "vertex " + std::to_string(v) + " is not present");
}

}  // namespace

Graph::Graph(std::size_t order)
    : adjacency_(order), present_(order, 1), present_count_(order) {}

const std::vector<Neighbor>& Graph::list(VertexId v) const {
  if (!contains(v)) throw_absent(v);
  return adjacency_[v - 1];
}

std::vector<Neighbor>& Graph::list(VertexId v) {
  if (!contains(v)) throw_absent(v);
  return adjacency_[v - 1];
}

Weight Graph::edge_weight(VertexId u, VertexId v) const {
  const auto& adj = list(u);
  if (!contains(v)) throw_absent(v);
  auto it = find_neighbor(adj, v);
  if (it == adj.end() || it->id != v) return Weight::infinity();
  return it->weight;
}

void Graph::set_edge(VertexId u, VertexId v, Weight w) {
  if (u == v) throw Error(ErrorCode::kInvalidArgument, "self-loop on vertex " + std::to_string(u));
  if (w.is_infinite()) throw Error(ErrorCode::kInvalidArgument, "edge weight must be finite");
  auto& adj_u = list(u);
  auto& adj_v = list(v);

  auto it = find_neighbor(adj_u, v);
  if (it != adj_u.end() && it->id == v) {
    it->weight = w;
    find_neighbor(adj_v, u)->weight = w;
    return;
  }
  adj_u.insert(it, Neighbor{v, w});
  adj_v.insert(find_neighbor(adj_v, u), Neighbor{u, w});
  ++edge_count_;
}

void Graph::remove_edge(VertexId u, VertexId v) {
  auto& adj_u = list(u);
  auto& adj_v = list(v);
  auto it = find_neighbor(adj_u, v);
  if (it == adj_u.end() || it->id != v) return;
  adj_u.erase(it);
  erase_neighbor(adj_v, u);
  --edge_count_;
}

std::vector<Neighbor> Graph::remove_vertex(VertexId v) {
  std::vector<Neighbor> incident = std::move(list(v));
  adjacency_[v - 1].clear();
  for (const Neighbor& nb : incident) erase_neighbor(adjacency_[nb.id - 1], v);
  edge_count_ -= incident.size();
  present_[v - 1] = 0;
  --present_count_;
  return incident;
}

void Graph::restore_vertex(VertexId v, std::span<const Neighbor> edges) {
  if (v == kNoVertex || v > adjacency_.size()) throw_absent(v);
  if (present_[v - 1] != 0) {
    throw Error(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " is already present");
  }
  present_[v - 1] = 1;
  ++present_count_;
  for (const Neighbor& nb : edges) set_edge(v, nb.id, nb.weight);
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(present_count_);
  for (std::size_t i = 0; i < present_.size(); ++i) {
    if (present_[i] != 0) out.push_back(static_cast<VertexId>(i + 1));
  }
  return out;
}

GraphStats stats(const Graph& g) {
  GraphStats s;
  s.n = g.vertex_count();
  s.m = g.edge_count();
  for (VertexId v : g.vertices()) s.max_degree = std::max(s.max_degree, g.degree(v));
  return s;
}

std::optional<std::pair<VertexId, VertexId>> find_unreachable_pair(const Graph& g) {
  const auto vs = g.vertices();
  if (vs.empty()) throw Error(ErrorCode::kInvalidArgument, "connectivity of an empty graph");

  std::vector<std::uint8_t> seen(g.original_order() + 1, 0);
  std::vector<VertexId> stack{vs.front()};
  seen[vs.front()] = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : g.neighbors(u)) {
      if (seen[nb.id] == 0) {
        seen[nb.id] = 1;
        stack.push_back(nb.id);
      }
    }
  }
  for (VertexId v : vs) {
    if (seen[v] == 0) return std::pair{vs.front(), v};
  }
  return std::nullopt;
}

bool is_connected(const Graph& g) { return !find_unreachable_pair(g).has_value(); }

Subgraph extract_connected_subgraph(const Graph& g, std::size_t size, std::uint64_t seed) {
  const auto vs = g.vertices();
  if (size == 0) throw Error(ErrorCode::kInvalidArgument, "subgraph size must be at least 1");
  if (size > vs.size()) {
    throw Error(ErrorCode::kInvalidArgument, "subgraph size " + std::to_string(size) +
                                                 " exceeds graph order " + std::to_string(vs.size()));
  }
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "source graph is not connected");

  // mt19937_64 output is fixed by the standard; distributions are not, so the
  // start index is taken by plain reduction.
  std::mt19937_64 rng(seed);
  const VertexId start = vs[rng() % vs.size()];

  std::vector<std::uint8_t> seen(g.original_order() + 1, 0);
  std::vector<VertexId> picked;
  picked.reserve(size);
  std::deque<VertexId> queue{start};
  seen[start] = 1;
  while (!queue.empty() && picked.size() < size) {
    const VertexId u = queue.front();
    queue.pop_front();
    picked.push_back(u);
    for (const Neighbor& nb : g.neighbors(u)) {
      if (seen[nb.id] == 0) {
        seen[nb.id] = 1;
        queue.push_back(nb.id);
      }
    }
  }

  std::sort(picked.begin(), picked.end());
  std::vector<VertexId> relabel(g.original_order() + 1, kNoVertex);
  for (std::size_t k = 0; k < picked.size(); ++k) relabel[picked[k]] = static_cast<VertexId>(k + 1);

  Subgraph out{Graph(size), picked};
  for (VertexId u : picked) {
    for (const Neighbor& nb : g.neighbors(u)) {
      if (u < nb.id && relabel[nb.id] != kNoVertex) {
        out.graph.set_edge(relabel[u], relabel[nb.id], nb.weight);
      }
    }
  }
  return out;
}

}  // namespace apsp
