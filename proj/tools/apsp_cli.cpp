// Command-line front end over the C API: solve, verify, bench, subgraph, stats.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "apsp/apsp.h"

namespace {

struct GraphDeleter {
  void operator()(apsp_graph* g) const { apsp_graph_destroy(g); }
};
struct SolutionDeleter {
  void operator()(apsp_solution* s) const { apsp_solution_destroy(s); }
};
using GraphHandle = std::unique_ptr<apsp_graph, GraphDeleter>;
using SolutionHandle = std::unique_ptr<apsp_solution, SolutionDeleter>;

class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(apsp_status status, const std::string& context) {
  if (status == APSP_OK) return;
  std::string msg = context + ": " + apsp_status_name(status);
  const std::string detail = apsp_last_error();
  if (!detail.empty()) msg += " (" + detail + ")";
  throw CommandError(msg);
}

int64_t parse_bound(const std::string& text, const char* flag) {
  if (text == "inf" || text == "INF" || text == "infinity") return APSP_UNBOUNDED;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw CommandError(std::string(flag) + " expects an integer or 'inf', got '" + text + "'");
  }
}

struct CommonOptions {
  std::string input;
  std::string dmax = "inf";
  std::string imax = "inf";
  uint32_t nmin = 1;
  uint32_t max_n = 15000;

  apsp_params params() const {
    apsp_params p;
    apsp_params_default(&p);
    p.d_max = parse_bound(dmax, "--dmax");
    p.i_max = parse_bound(imax, "--imax");
    p.n_min = nmin;
    return p;
  }
};

void add_solver_options(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--input", o.input, "DIMACS .gr file")->required();
  cmd->add_option("--dmax", o.dmax, "largest degree of removed vertices (INT or inf)");
  cmd->add_option("--imax", o.imax, "largest edge growth per removal (INT or inf)");
  cmd->add_option("--nmin", o.nmin, "stop contracting at this many vertices")->check(CLI::PositiveNumber);
  cmd->add_option("--max-n", o.max_n, "refuse graphs above this order (two n x n matrices)");
}

GraphHandle load_graph(const std::string& path) {
  apsp_graph* raw = nullptr;
  check(apsp_graph_read_dimacs(path.c_str(), &raw), "reading " + path);
  return GraphHandle(raw);
}

apsp_graph_stats graph_stats(const apsp_graph* g) {
  apsp_graph_stats s{};
  check(apsp_graph_get_stats(g, &s), "stats");
  return s;
}

// Order cap and connectivity, checked before any n x n allocation.
void require_solvable(const apsp_graph* g, uint32_t max_n) {
  const apsp_graph_stats s = graph_stats(g);
  if (s.n > max_n) {
    throw CommandError("graph has " + std::to_string(s.n) + " vertices, above --max-n " +
                       std::to_string(max_n));
  }
  int connected = 0;
  uint32_t a = 0;
  uint32_t b = 0;
  check(apsp_graph_connectivity(g, &connected, &a, &b), "connectivity");
  if (connected == 0) {
    throw CommandError("graph is not connected: vertex " + std::to_string(b) +
                       " is unreachable from vertex " + std::to_string(a));
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SolutionHandle run_pipeline(const apsp_graph* g, const apsp_params& p, apsp_solve_info& info) {
  apsp_solution* raw = nullptr;
  check(apsp_solve(g, &p, &raw, &info), "solve");
  return SolutionHandle(raw);
}

SolutionHandle run_dijkstra(const apsp_graph* g, uint32_t threads) {
  apsp_solution* raw = nullptr;
  check(apsp_solve_dijkstra(g, threads, &raw), "dijkstra baseline");
  return SolutionHandle(raw);
}

struct Mismatch {
  bool equal = true;
  uint32_t i = 0;
  uint32_t j = 0;
};

Mismatch compare(const apsp_solution* a, const apsp_solution* b) {
  Mismatch m;
  int equal = 0;
  check(apsp_solution_compare_distances(a, b, &equal, &m.i, &m.j), "compare");
  m.equal = equal != 0;
  return m;
}

uint64_t distance(const apsp_solution* s, uint32_t i, uint32_t j) {
  uint64_t d = 0;
  check(apsp_solution_distance(s, i, j, &d), "distance lookup");
  return d;
}

std::string cell_text(uint64_t d) { return d == APSP_INFINITY ? "INF" : std::to_string(d); }

// --- solve ---------------------------------------------------------------

struct SolveOptions {
  CommonOptions common;
  std::string out;
  std::string pred;
};

int cmd_solve(const SolveOptions& o) {
  const GraphHandle g = load_graph(o.common.input);
  require_solvable(g.get(), o.common.max_n);
  const apsp_graph_stats s = graph_stats(g.get());

  apsp_solve_info info{};
  const auto start = std::chrono::steady_clock::now();
  const SolutionHandle sol = run_pipeline(g.get(), o.common.params(), info);
  const double elapsed = seconds_since(start);

  if (!o.out.empty()) check(apsp_solution_write_distances(sol.get(), o.out.c_str()), "writing " + o.out);
  if (!o.pred.empty()) {
    check(apsp_solution_write_predecessors(sol.get(), o.pred.c_str()), "writing " + o.pred);
  }
  std::printf("n=%u m=%llu removals=%u residual_order=%u max_removed_degree=%u seconds=%.6f\n", s.n,
              static_cast<unsigned long long>(s.m), info.removals, info.residual_order,
              info.max_removed_degree, elapsed);
  return 0;
}

// --- verify --------------------------------------------------------------

struct VerifyOptions {
  CommonOptions common;
  uint32_t sample = 100;
  uint64_t seed = 1;
  uint32_t oracle_cap = 512;
  std::string compare;
};

int cmd_verify(const VerifyOptions& o) {
  const GraphHandle g = load_graph(o.common.input);
  require_solvable(g.get(), o.common.max_n);
  const apsp_graph_stats s = graph_stats(g.get());
  bool ok = true;

  const SolutionHandle db = run_dijkstra(g.get(), 1);

  if (!o.compare.empty()) {
    apsp_solution* raw = nullptr;
    check(apsp_solution_read_distances(o.compare.c_str(), &raw), "reading " + o.compare);
    const SolutionHandle file(raw);
    if (apsp_solution_order(file.get()) != s.n) {
      std::printf("FAIL compare: %s has order %u, graph has %u\n", o.compare.c_str(),
                  apsp_solution_order(file.get()), s.n);
      return 1;
    }
    const Mismatch m = compare(file.get(), db.get());
    if (m.equal) {
      std::printf("PASS compare: %s matches the Dijkstra baseline\n", o.compare.c_str());
    } else {
      std::printf("FAIL compare: cell (%u, %u) is %s in %s, baseline has %s\n", m.i, m.j,
                  cell_text(distance(file.get(), m.i, m.j)).c_str(), o.compare.c_str(),
                  cell_text(distance(db.get(), m.i, m.j)).c_str());
      ok = false;
    }
    return ok ? 0 : 1;
  }

  apsp_solve_info info{};
  const SolutionHandle pa = run_pipeline(g.get(), o.common.params(), info);

  const Mismatch vs_db = compare(pa.get(), db.get());
  if (vs_db.equal) {
    std::printf("PASS dijkstra: all %u x %u distances equal\n", s.n, s.n);
  } else {
    std::printf("FAIL dijkstra: cell (%u, %u) pipeline=%s baseline=%s\n", vs_db.i, vs_db.j,
                cell_text(distance(pa.get(), vs_db.i, vs_db.j)).c_str(),
                cell_text(distance(db.get(), vs_db.i, vs_db.j)).c_str());
    ok = false;
  }

  if (s.n <= o.oracle_cap) {
    apsp_solution* raw = nullptr;
    check(apsp_solve_floyd_warshall(g.get(), o.oracle_cap, &raw), "floyd-warshall");
    const SolutionHandle fw(raw);
    const Mismatch vs_fw = compare(pa.get(), fw.get());
    if (vs_fw.equal) {
      std::printf("PASS floyd-warshall: all %u x %u distances equal\n", s.n, s.n);
    } else {
      std::printf("FAIL floyd-warshall: cell (%u, %u) pipeline=%s oracle=%s\n", vs_fw.i, vs_fw.j,
                  cell_text(distance(pa.get(), vs_fw.i, vs_fw.j)).c_str(),
                  cell_text(distance(fw.get(), vs_fw.i, vs_fw.j)).c_str());
      ok = false;
    }
  } else {
    std::printf("SKIP floyd-warshall: n=%u above oracle cap %u\n", s.n, o.oracle_cap);
  }

  std::mt19937_64 rng(o.seed);
  std::vector<uint32_t> path(s.n);
  uint32_t bad_paths = 0;
  for (uint32_t k = 0; k < o.sample && s.n > 1; ++k) {
    const auto i = static_cast<uint32_t>(rng() % s.n) + 1;
    const auto j = static_cast<uint32_t>(rng() % s.n) + 1;
    size_t len = 0;
    const apsp_status st = apsp_solution_path(pa.get(), g.get(), i, j, path.data(), path.size(), &len);
    uint64_t w = APSP_INFINITY;
    if (st == APSP_OK) check(apsp_path_weight(g.get(), path.data(), len, &w), "path weight");
    const uint64_t expect = distance(pa.get(), i, j);
    if (st != APSP_OK || w != expect) {
      if (bad_paths == 0) {
        std::printf("FAIL path %u -> %u: %s, weight %s, distance %s\n", i, j,
                    st == APSP_OK ? "reconstructed" : apsp_last_error(), cell_text(w).c_str(),
                    cell_text(expect).c_str());
      }
      ++bad_paths;
    }
  }
  if (bad_paths == 0) {
    std::printf("PASS paths: %u sampled pairs reconstruct to their distance\n", o.sample);
  } else {
    std::printf("FAIL paths: %u of %u sampled pairs\n", bad_paths, o.sample);
    ok = false;
  }
  return ok ? 0 : 1;
}

// --- bench ---------------------------------------------------------------

struct BenchOptions {
  CommonOptions common;
  uint32_t repeats = 3;
  std::string report;
  bool db_single_thread = true;
};

constexpr const char* kReportHeader =
    "instance,n,m,pa_seconds,db_seconds,speedup,removals,residual_order,max_removed_degree,"
    "matrices_equal";

int cmd_bench(const BenchOptions& o) {
  const GraphHandle g = load_graph(o.common.input);
  require_solvable(g.get(), o.common.max_n);
  const apsp_graph_stats s = graph_stats(g.get());
  const apsp_params params = o.common.params();
  const uint32_t threads =
      o.db_single_thread ? 1u : std::max(1u, std::thread::hardware_concurrency());

  double pa_best = std::numeric_limits<double>::infinity();
  double db_best = std::numeric_limits<double>::infinity();
  apsp_solve_info info{};
  SolutionHandle pa;
  SolutionHandle db;
  for (uint32_t r = 0; r < o.repeats; ++r) {
    pa.reset();
    auto start = std::chrono::steady_clock::now();
    pa = run_pipeline(g.get(), params, info);
    pa_best = std::min(pa_best, seconds_since(start));

    db.reset();
    start = std::chrono::steady_clock::now();
    db = run_dijkstra(g.get(), threads);
    db_best = std::min(db_best, seconds_since(start));
  }
  const Mismatch m = compare(pa.get(), db.get());

  char row[512];
  std::snprintf(row, sizeof row, "%s,%u,%llu,%.6f,%.6f,%.3f,%u,%u,%u,%s",
                std::filesystem::path(o.common.input).filename().string().c_str(), s.n,
                static_cast<unsigned long long>(s.m), pa_best, db_best, db_best / pa_best,
                info.removals, info.residual_order, info.max_removed_degree, m.equal ? "true" : "false");
  std::printf("%s\n%s\n", kReportHeader, row);
  if (!m.equal) {
    std::fprintf(stderr, "error: pipeline and baseline differ at cell (%u, %u); no report written\n",
                 m.i, m.j);
    return 2;
  }
  if (!o.report.empty()) {
    const bool fresh = !std::filesystem::exists(o.report) || std::filesystem::file_size(o.report) == 0;
    std::ofstream out(o.report, std::ios::app);
    if (!out) throw CommandError("cannot open report " + o.report);
    if (fresh) out << kReportHeader << '\n';
    out << row << '\n';
  }
  return 0;
}

// --- subgraph / stats ----------------------------------------------------

struct SubgraphOptions {
  std::string input;
  uint32_t size = 0;
  uint64_t seed = 1;
  std::string out;
};

int cmd_subgraph(const SubgraphOptions& o) {
  const GraphHandle g = load_graph(o.input);
  apsp_graph* raw = nullptr;
  check(apsp_graph_extract_subgraph(g.get(), o.size, o.seed, &raw, nullptr), "subgraph");
  const GraphHandle sub(raw);
  check(apsp_graph_write_dimacs(sub.get(), o.out.c_str()), "writing " + o.out);
  const apsp_graph_stats s = graph_stats(sub.get());
  std::printf("wrote %s: n=%u m=%llu\n", o.out.c_str(), s.n, static_cast<unsigned long long>(s.m));
  return 0;
}

int cmd_stats(const std::string& input) {
  const GraphHandle g = load_graph(input);
  const apsp_graph_stats s = graph_stats(g.get());
  std::printf("%u,%llu,%.4f,%u\n", s.n, static_cast<unsigned long long>(s.m), s.avg_degree, s.max_degree);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"All-pairs shortest paths on sparse graphs by contraction"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "compute distance and predecessor matrices");
  add_solver_options(solve_cmd, solve.common);
  solve_cmd->add_option("--out", solve.out, "distance matrix output file");
  solve_cmd->add_option("--pred", solve.pred, "predecessor matrix output file");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "check the pipeline against reference solvers");
  add_solver_options(verify_cmd, verify.common);
  verify_cmd->add_option("--sample", verify.sample, "random pairs checked by path reconstruction");
  verify_cmd->add_option("--seed", verify.seed, "seed for pair sampling");
  verify_cmd->add_option("--oracle-max-n", verify.oracle_cap, "largest order checked by Floyd-Warshall");
  verify_cmd->add_option("--compare", verify.compare, "check this distance matrix file instead");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "time contraction against all-sources Dijkstra");
  add_solver_options(bench_cmd, bench.common);
  bench_cmd->add_option("--repeats", bench.repeats, "runs per solver, best time kept")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--report", bench.report, "append a CSV row to this file");
  bench_cmd->add_option("--db-single-thread", bench.db_single_thread,
                        "run the Dijkstra baseline on one thread");

  SubgraphOptions sub;
  auto* sub_cmd = app.add_subcommand("subgraph", "extract a connected breadth-first subgraph");
  sub_cmd->add_option("--input", sub.input, "DIMACS .gr file")->required();
  sub_cmd->add_option("--size", sub.size, "vertices to keep")->required();
  sub_cmd->add_option("--seed", sub.seed, "selects the start vertex");
  sub_cmd->add_option("--out", sub.out, "output DIMACS file")->required();

  std::string stats_input;
  auto* stats_cmd = app.add_subcommand("stats", "print n,m,avg_degree,max_degree");
  stats_cmd->add_option("--input", stats_input, "DIMACS .gr file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return cmd_solve(solve);
    if (*verify_cmd) return cmd_verify(verify);
    if (*bench_cmd) return cmd_bench(bench);
    if (*sub_cmd) return cmd_subgraph(sub);
    if (*stats_cmd) return cmd_stats(stats_input);
  } catch (const CommandError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
