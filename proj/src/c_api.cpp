#include "apsp/apsp.h"

#include <algorithm>
#include <new>
#include <string>
#include <utility>

#include "apsp/dimacs.hpp"
#include "apsp/error.hpp"
#include "apsp/graph.hpp"
#include "apsp/matrix.hpp"
#include "apsp/oracle.hpp"
#include "apsp/paths.hpp"
#include "apsp/solver.hpp"

struct apsp_graph {
  apsp::Graph graph;
};

struct apsp_solution {
  apsp::DistanceMatrix distances;
  apsp::PrecedenceMatrix predecessors;
};

namespace {

thread_local std::string last_error;

apsp_status status_of(apsp::ErrorCode code) {
  switch (code) {
    case apsp::ErrorCode::kInvalidArgument: return APSP_ERR_INVALID_ARGUMENT;
    case apsp::ErrorCode::kParse: return APSP_ERR_PARSE;
    case apsp::ErrorCode::kIo: return APSP_ERR_IO;
    case apsp::ErrorCode::kVertexNotPresent: return APSP_ERR_VERTEX_NOT_PRESENT;
    case apsp::ErrorCode::kDisconnected: return APSP_ERR_DISCONNECTED;
    case apsp::ErrorCode::kTooLarge: return APSP_ERR_TOO_LARGE;
    case apsp::ErrorCode::kCorrupt: return APSP_ERR_CORRUPT;
  }
  return APSP_ERR_INTERNAL;
}

apsp_status fail(apsp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
apsp_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const apsp::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(APSP_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(APSP_ERR_INTERNAL, e.what());
  }
}

#define APSP_REQUIRE(cond, what) \
  if (!(cond)) return fail(APSP_ERR_INVALID_ARGUMENT, what)

apsp::SolveParams to_params(const apsp_params& p) {
  apsp::SolveParams out;
  if (p.d_max != APSP_UNBOUNDED) {
    if (p.d_max < 1) throw apsp::Error(apsp::ErrorCode::kInvalidArgument, "d_max must be at least 1");
    out.max_degree = static_cast<std::size_t>(p.d_max);
  }
  if (p.i_max != APSP_UNBOUNDED) out.max_edge_growth = p.i_max;
  out.min_order = p.n_min;
  return out;
}

bool in_range(const apsp_solution* s, uint32_t i, uint32_t j) {
  return i >= 1 && j >= 1 && i <= s->distances.order() && j <= s->distances.order();
}

}  // namespace

extern "C" {

const char* apsp_status_name(apsp_status status) {
  switch (status) {
    case APSP_OK: return "ok";
    case APSP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case APSP_ERR_PARSE: return "parse error";
    case APSP_ERR_IO: return "i/o error";
    case APSP_ERR_VERTEX_NOT_PRESENT: return "vertex not present";
    case APSP_ERR_DISCONNECTED: return "graph not connected";
    case APSP_ERR_TOO_LARGE: return "too large";
    case APSP_ERR_CORRUPT: return "corrupt data";
    case APSP_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case APSP_ERR_OUT_OF_MEMORY: return "out of memory";
    case APSP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* apsp_last_error(void) { return last_error.c_str(); }

apsp_status apsp_graph_create(uint32_t order, apsp_graph** out) {
  APSP_REQUIRE(out != nullptr, "null output handle");
  APSP_REQUIRE(order > 0, "graph order must be at least 1");
  return guarded([&] {
    *out = new apsp_graph{apsp::Graph(order)};
    return APSP_OK;
  });
}

apsp_status apsp_graph_parse_dimacs(const char* text, size_t length, apsp_graph** out) {
  APSP_REQUIRE(out != nullptr && (text != nullptr || length == 0), "null argument");
  return guarded([&] {
    *out = new apsp_graph{apsp::parse_dimacs(std::string_view(text, length))};
    return APSP_OK;
  });
}

apsp_status apsp_graph_read_dimacs(const char* path, apsp_graph** out) {
  APSP_REQUIRE(out != nullptr && path != nullptr, "null argument");
  return guarded([&] {
    *out = new apsp_graph{apsp::read_dimacs_file(path)};
    return APSP_OK;
  });
}

apsp_status apsp_graph_write_dimacs(const apsp_graph* graph, const char* path) {
  APSP_REQUIRE(graph != nullptr && path != nullptr, "null argument");
  return guarded([&] {
    apsp::write_dimacs_file(graph->graph, path);
    return APSP_OK;
  });
}

void apsp_graph_destroy(apsp_graph* graph) { delete graph; }

apsp_status apsp_graph_set_edge(apsp_graph* graph, uint32_t u, uint32_t v, uint64_t weight) {
  APSP_REQUIRE(graph != nullptr, "null graph");
  APSP_REQUIRE(weight <= apsp::kMaxInputWeight, "weight exceeds 2^32 - 1");
  return guarded([&] {
    graph->graph.set_edge(u, v, apsp::Weight(weight));
    return APSP_OK;
  });
}

apsp_status apsp_graph_edge_weight(const apsp_graph* graph, uint32_t u, uint32_t v, uint64_t* weight) {
  APSP_REQUIRE(graph != nullptr && weight != nullptr, "null argument");
  return guarded([&] {
    *weight = graph->graph.edge_weight(u, v).value();
    return APSP_OK;
  });
}

apsp_status apsp_graph_get_stats(const apsp_graph* graph, apsp_graph_stats* stats) {
  APSP_REQUIRE(graph != nullptr && stats != nullptr, "null argument");
  return guarded([&] {
    const apsp::GraphStats s = apsp::stats(graph->graph);
    stats->n = static_cast<uint32_t>(s.n);
    stats->m = s.m;
    stats->avg_degree = s.average_degree();
    stats->max_degree = static_cast<uint32_t>(s.max_degree);
    return APSP_OK;
  });
}

apsp_status apsp_graph_connectivity(const apsp_graph* graph, int* connected, uint32_t* a, uint32_t* b) {
  APSP_REQUIRE(graph != nullptr && connected != nullptr, "null argument");
  return guarded([&] {
    const auto gap = apsp::find_unreachable_pair(graph->graph);
    *connected = gap ? 0 : 1;
    if (gap && a != nullptr) *a = gap->first;
    if (gap && b != nullptr) *b = gap->second;
    return APSP_OK;
  });
}

apsp_status apsp_graph_extract_subgraph(const apsp_graph* graph, uint32_t size, uint64_t seed,
                                        apsp_graph** out, uint32_t* original_ids) {
  APSP_REQUIRE(graph != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    apsp::Subgraph sub = apsp::extract_connected_subgraph(graph->graph, size, seed);
    if (original_ids != nullptr) std::copy(sub.original_ids.begin(), sub.original_ids.end(), original_ids);
    *out = new apsp_graph{std::move(sub.graph)};
    return APSP_OK;
  });
}

void apsp_params_default(apsp_params* params) {
  if (params == nullptr) return;
  params->d_max = APSP_UNBOUNDED;
  params->i_max = APSP_UNBOUNDED;
  params->n_min = 1;
}

apsp_status apsp_solve(const apsp_graph* graph, const apsp_params* params, apsp_solution** out,
                       apsp_solve_info* info) {
  APSP_REQUIRE(graph != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    apsp_params defaults;
    apsp_params_default(&defaults);
    apsp::Solution sol = apsp::solve(graph->graph, to_params(params != nullptr ? *params : defaults));
    if (info != nullptr) {
      info->removals = static_cast<uint32_t>(sol.summary.removals);
      info->residual_order = static_cast<uint32_t>(sol.summary.residual_order);
      info->max_removed_degree = static_cast<uint32_t>(sol.summary.max_removed_degree);
    }
    *out = new apsp_solution{std::move(sol.distances), std::move(sol.predecessors)};
    return APSP_OK;
  });
}

apsp_status apsp_solve_dijkstra(const apsp_graph* graph, uint32_t threads, apsp_solution** out) {
  APSP_REQUIRE(graph != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    apsp::ApspResult res = apsp::apsp_dijkstra(graph->graph, std::max<uint32_t>(threads, 1));
    *out = new apsp_solution{std::move(res.distances), std::move(res.predecessors)};
    return APSP_OK;
  });
}

apsp_status apsp_solve_floyd_warshall(const apsp_graph* graph, uint32_t max_order, apsp_solution** out) {
  APSP_REQUIRE(graph != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    apsp::DistanceMatrix d = apsp::floyd_warshall(graph->graph, max_order);
    const std::size_t n = d.order();
    *out = new apsp_solution{std::move(d), apsp::PrecedenceMatrix(n)};
    return APSP_OK;
  });
}

void apsp_solution_destroy(apsp_solution* solution) { delete solution; }

uint32_t apsp_solution_order(const apsp_solution* solution) {
  return solution == nullptr ? 0 : static_cast<uint32_t>(solution->distances.order());
}

apsp_status apsp_solution_distance(const apsp_solution* solution, uint32_t i, uint32_t j,
                                   uint64_t* distance) {
  APSP_REQUIRE(solution != nullptr && distance != nullptr, "null argument");
  if (!in_range(solution, i, j)) return fail(APSP_ERR_VERTEX_NOT_PRESENT, "vertex id out of range");
  *distance = solution->distances.at(i, j).value();
  return APSP_OK;
}

apsp_status apsp_solution_predecessor(const apsp_solution* solution, uint32_t i, uint32_t j,
                                      uint32_t* predecessor) {
  APSP_REQUIRE(solution != nullptr && predecessor != nullptr, "null argument");
  if (!in_range(solution, i, j)) return fail(APSP_ERR_VERTEX_NOT_PRESENT, "vertex id out of range");
  *predecessor = solution->predecessors.raw(i, j);
  return APSP_OK;
}

apsp_status apsp_solution_path(const apsp_solution* solution, const apsp_graph* graph, uint32_t i,
                               uint32_t j, uint32_t* path, size_t capacity, size_t* length) {
  APSP_REQUIRE(solution != nullptr && graph != nullptr && length != nullptr, "null argument");
  APSP_REQUIRE(path != nullptr || capacity == 0, "null path buffer");
  return guarded([&] {
    const auto seq = apsp::reconstruct_path(solution->predecessors, graph->graph, i, j);
    *length = seq.size();
    if (seq.size() > capacity) return fail(APSP_ERR_BUFFER_TOO_SMALL, "path buffer too small");
    std::copy(seq.begin(), seq.end(), path);
    return APSP_OK;
  });
}

apsp_status apsp_path_weight(const apsp_graph* graph, const uint32_t* path, size_t length,
                             uint64_t* weight) {
  APSP_REQUIRE(graph != nullptr && path != nullptr && weight != nullptr, "null argument");
  return guarded([&] {
    *weight = apsp::path_weight(graph->graph, std::span<const uint32_t>(path, length)).value();
    return APSP_OK;
  });
}

apsp_status apsp_solution_write_distances(const apsp_solution* solution, const char* path) {
  APSP_REQUIRE(solution != nullptr && path != nullptr, "null argument");
  return guarded([&] {
    apsp::write_distance_matrix(solution->distances, path);
    return APSP_OK;
  });
}

apsp_status apsp_solution_write_predecessors(const apsp_solution* solution, const char* path) {
  APSP_REQUIRE(solution != nullptr && path != nullptr, "null argument");
  return guarded([&] {
    apsp::write_precedence_matrix(solution->predecessors, path);
    return APSP_OK;
  });
}

apsp_status apsp_solution_read_distances(const char* path, apsp_solution** out) {
  APSP_REQUIRE(path != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    apsp::DistanceMatrix d = apsp::read_distance_matrix(path);
    const std::size_t n = d.order();
    *out = new apsp_solution{std::move(d), apsp::PrecedenceMatrix(n)};
    return APSP_OK;
  });
}

apsp_status apsp_solution_compare_distances(const apsp_solution* a, const apsp_solution* b, int* equal,
                                            uint32_t* i, uint32_t* j) {
  APSP_REQUIRE(a != nullptr && b != nullptr && equal != nullptr, "null argument");
  const std::size_t n = a->distances.order();
  if (b->distances.order() != n) {
    return fail(APSP_ERR_INVALID_ARGUMENT, "matrices have different orders: " + std::to_string(n) +
                                               " and " + std::to_string(b->distances.order()));
  }
  *equal = 1;
  for (uint32_t r = 1; r <= n; ++r) {
    const auto ra = a->distances.row(r);
    const auto rb = b->distances.row(r);
    const auto mismatch = std::mismatch(ra.begin(), ra.end(), rb.begin());
    if (mismatch.first != ra.end()) {
      *equal = 0;
      if (i != nullptr) *i = r;
      if (j != nullptr) *j = static_cast<uint32_t>(mismatch.first - ra.begin()) + 1;
      break;
    }
  }
  return APSP_OK;
}

}  // extern "C"
