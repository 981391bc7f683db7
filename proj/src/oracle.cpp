#include "apsp/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <thread>
#include <vector>

#include "apsp/error.hpp"

namespace apsp {
namespace {

constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

// Compressed adjacency over ids 1..n.
struct Csr {
  std::vector<std::size_t> offsets;
  std::vector<VertexId> targets;
  std::vector<std::uint64_t> weights;
};

Csr flatten(const Graph& g) {
  const std::size_t n = g.original_order();
  Csr csr;
  csr.offsets.assign(n + 2, 0);
  g.for_each_edge([&](VertexId u, VertexId v, Weight) {
    ++csr.offsets[u + 1];
    ++csr.offsets[v + 1];
  });
  for (std::size_t k = 1; k < csr.offsets.size(); ++k) csr.offsets[k] += csr.offsets[k - 1];
  csr.targets.resize(csr.offsets.back());
  csr.weights.resize(csr.offsets.back());
  std::vector<std::size_t> fill(csr.offsets.begin(), csr.offsets.end() - 1);
  g.for_each_edge([&](VertexId u, VertexId v, Weight w) {
    csr.targets[fill[u]] = v;
    csr.weights[fill[u]++] = w.value();
    csr.targets[fill[v]] = u;
    csr.weights[fill[v]++] = w.value();
  });
  return csr;
}

void run_sources(const Csr& csr, std::size_t n, VertexId first, VertexId last, ApspResult& out) {
  std::vector<std::uint64_t> dist(n + 1);
  std::vector<VertexId> prev(n + 1);
  using Entry = std::pair<std::uint64_t, VertexId>;
  std::vector<Entry> storage;
  storage.reserve(csr.targets.size() + 1);
  // Lazy deletion: stale entries are skipped on pop. The heap drains fully
  // for every source, so its buffer is reused.
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap(std::greater<>{},
                                                                      std::move(storage));
  for (VertexId s = first; s <= last; ++s) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(prev.begin(), prev.end(), kNoVertex);
    dist[s] = 0;
    heap.emplace(0, s);
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d != dist[u]) continue;
      for (std::size_t e = csr.offsets[u]; e < csr.offsets[u + 1]; ++e) {
        const VertexId v = csr.targets[e];
        const std::uint64_t cand = d + csr.weights[e];
        if (cand < dist[v]) {
          dist[v] = cand;
          prev[v] = u;
          heap.emplace(cand, v);
        }
      }
    }
    auto row = out.distances.row(s);
    for (VertexId v = 1; v <= n; ++v) {
      row[v - 1] = dist[v] == kInf ? Weight::infinity() : Weight(dist[v]);
      if (prev[v] != s) out.predecessors.set(s, v, prev[v]);
    }
  }
}

}  // namespace

ApspResult apsp_dijkstra(const Graph& g, unsigned threads) {
  const std::size_t n = g.original_order();
  if (g.vertex_count() != n) {
    throw Error(ErrorCode::kInvalidArgument, "baseline expects every vertex to be present");
  }
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty graph");
  if (auto gap = find_unreachable_pair(g)) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected: no path between " +
                                              std::to_string(gap->first) + " and " +
                                              std::to_string(gap->second));
  }
  const Csr csr = flatten(g);
  ApspResult out{DistanceMatrix(n), PrecedenceMatrix(n)};

  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(n));
  if (threads == 1) {
    run_sources(csr, n, 1, static_cast<VertexId>(n), out);
    return out;
  }
  std::vector<std::jthread> workers;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t begin = 1; begin <= n; begin += chunk) {
    const auto first = static_cast<VertexId>(begin);
    const auto last = static_cast<VertexId>(std::min(n, begin + chunk - 1));
    workers.emplace_back([&csr, n, first, last, &out] { run_sources(csr, n, first, last, out); });
  }
  return out;
}

DistanceMatrix floyd_warshall(const Graph& g, std::size_t max_order) {
  const std::size_t n = g.original_order();
  if (n > max_order) {
    throw Error(ErrorCode::kTooLarge, "Floyd-Warshall oracle limited to " + std::to_string(max_order) +
                                          " vertices, graph has " + std::to_string(n));
  }
  std::vector<std::uint64_t> d(n * n, kInf);
  for (std::size_t i = 0; i < n; ++i) {
    if (g.contains(static_cast<VertexId>(i + 1))) d[i * n + i] = 0;
  }
  g.for_each_edge([&](VertexId u, VertexId v, Weight w) {
    d[(u - 1) * n + (v - 1)] = w.value();
    d[(v - 1) * n + (u - 1)] = w.value();
  });
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t ik = d[i * n + k];
      if (ik == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t kj = d[k * n + j];
        if (kj != kInf && ik + kj < d[i * n + j]) d[i * n + j] = ik + kj;
      }
    }
  }
  DistanceMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t v = d[i * n + j];
      out.set(static_cast<VertexId>(i + 1), static_cast<VertexId>(j + 1),
              v == kInf ? Weight::infinity() : Weight(v));
    }
  }
  return out;
}

}  // namespace apsp
