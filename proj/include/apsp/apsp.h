/* C interface to the contraction APSP solver.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Every fallible call returns an apsp_status;
 * on failure apsp_last_error() describes the problem for the calling thread.
 * Vertex ids are 1-based. APSP_INFINITY marks missing edges and unreachable
 * pairs; predecessor 0 means "unset" (the path's last hop is a direct edge
 * from the row's source). */
#ifndef APSP_APSP_H
#define APSP_APSP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(APSP_BUILDING_LIBRARY)
#define APSP_API __declspec(dllexport)
#else
#define APSP_API __declspec(dllimport)
#endif
#else
#define APSP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum apsp_status {
  APSP_OK = 0,
  APSP_ERR_INVALID_ARGUMENT = 1,
  APSP_ERR_PARSE = 2,
  APSP_ERR_IO = 3,
  APSP_ERR_VERTEX_NOT_PRESENT = 4,
  APSP_ERR_DISCONNECTED = 5,
  APSP_ERR_TOO_LARGE = 6,
  APSP_ERR_CORRUPT = 7,
  APSP_ERR_BUFFER_TOO_SMALL = 8,
  APSP_ERR_OUT_OF_MEMORY = 9,
  APSP_ERR_INTERNAL = 10
} apsp_status;

#define APSP_INFINITY UINT64_MAX
#define APSP_UNBOUNDED INT64_MAX

typedef struct apsp_graph apsp_graph;
typedef struct apsp_solution apsp_solution;

typedef struct apsp_params {
  int64_t d_max; /* APSP_UNBOUNDED or >= 1 */
  int64_t i_max; /* APSP_UNBOUNDED or any value */
  uint32_t n_min; /* >= 1 */
} apsp_params;

typedef struct apsp_graph_stats {
  uint32_t n;
  uint64_t m;
  double avg_degree;
  uint32_t max_degree;
} apsp_graph_stats;

typedef struct apsp_solve_info {
  uint32_t removals;
  uint32_t residual_order;
  uint32_t max_removed_degree;
} apsp_solve_info;

APSP_API const char* apsp_status_name(apsp_status status);
APSP_API const char* apsp_last_error(void);

/* Graphs */
APSP_API apsp_status apsp_graph_create(uint32_t order, apsp_graph** out);
APSP_API apsp_status apsp_graph_parse_dimacs(const char* text, size_t length, apsp_graph** out);
APSP_API apsp_status apsp_graph_read_dimacs(const char* path, apsp_graph** out);
APSP_API apsp_status apsp_graph_write_dimacs(const apsp_graph* graph, const char* path);
APSP_API void apsp_graph_destroy(apsp_graph* graph);
APSP_API apsp_status apsp_graph_set_edge(apsp_graph* graph, uint32_t u, uint32_t v, uint64_t weight);
APSP_API apsp_status apsp_graph_edge_weight(const apsp_graph* graph, uint32_t u, uint32_t v,
                                            uint64_t* weight);
APSP_API apsp_status apsp_graph_get_stats(const apsp_graph* graph, apsp_graph_stats* stats);
/* *connected = 1, or 0 with a witness pair in *a, *b (either may be NULL). */
APSP_API apsp_status apsp_graph_connectivity(const apsp_graph* graph, int* connected, uint32_t* a,
                                             uint32_t* b);
/* original_ids, when not NULL, receives `size` ids of the source graph. */
APSP_API apsp_status apsp_graph_extract_subgraph(const apsp_graph* graph, uint32_t size, uint64_t seed,
                                                 apsp_graph** out, uint32_t* original_ids);

/* Solvers */
APSP_API void apsp_params_default(apsp_params* params);
APSP_API apsp_status apsp_solve(const apsp_graph* graph, const apsp_params* params,
                                apsp_solution** out, apsp_solve_info* info);
APSP_API apsp_status apsp_solve_dijkstra(const apsp_graph* graph, uint32_t threads,
                                         apsp_solution** out);
/* Distances only; predecessors are all unset. */
APSP_API apsp_status apsp_solve_floyd_warshall(const apsp_graph* graph, uint32_t max_order,
                                               apsp_solution** out);

/* Solutions */
APSP_API void apsp_solution_destroy(apsp_solution* solution);
APSP_API uint32_t apsp_solution_order(const apsp_solution* solution);
APSP_API apsp_status apsp_solution_distance(const apsp_solution* solution, uint32_t i, uint32_t j,
                                            uint64_t* distance);
APSP_API apsp_status apsp_solution_predecessor(const apsp_solution* solution, uint32_t i, uint32_t j,
                                               uint32_t* predecessor);
/* Writes the i -> j vertex sequence into path[0..capacity). *length always
 * receives the full length; APSP_ERR_BUFFER_TOO_SMALL if it does not fit. */
APSP_API apsp_status apsp_solution_path(const apsp_solution* solution, const apsp_graph* graph,
                                        uint32_t i, uint32_t j, uint32_t* path, size_t capacity,
                                        size_t* length);
APSP_API apsp_status apsp_path_weight(const apsp_graph* graph, const uint32_t* path, size_t length,
                                      uint64_t* weight);
APSP_API apsp_status apsp_solution_write_distances(const apsp_solution* solution, const char* path);
APSP_API apsp_status apsp_solution_write_predecessors(const apsp_solution* solution,
                                                      const char* path);
/* Loads a distance matrix file; predecessors of the result are unset. */
APSP_API apsp_status apsp_solution_read_distances(const char* path, apsp_solution** out);
/* *equal = 1 when every distance cell matches; otherwise the first differing
 * cell in row-major order is reported through i and j (either may be NULL). */
APSP_API apsp_status apsp_solution_compare_distances(const apsp_solution* a, const apsp_solution* b,
                                                     int* equal, uint32_t* i, uint32_t* j);

#ifdef __cplusplus
}
#endif

#endif /* APSP_APSP_H */
