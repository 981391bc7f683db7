// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "apsp/dimacs.hpp"
#include "apsp/disassembly.hpp"
#include "apsp/error.hpp"
#include "apsp/microsolve.hpp"
#include "apsp/oracle.hpp"
#include "apsp/paths.hpp"
#include "apsp/solver.hpp"
#include "support/generators.hpp"

namespace {

using namespace apsp;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Instance {
  Graph graph;
  std::uint64_t seed;
};

// n in [4, 120], m in [n - 1, 3n], weights in [0, 1000]. Every fourth seed
// draws weights from {0, 1} so zero-weight ties are common.
std::vector<Instance> random_instances(std::size_t count) {
  std::vector<Instance> out;
  for (std::uint64_t seed = 1; out.size() < count; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = testing::uniform(rng, 4, 120);
    const std::size_t m = testing::uniform(rng, n - 1, 3 * n);
    const std::uint64_t w_hi = seed % 4 == 0 ? 1 : 1000;
    out.push_back({testing::random_connected_graph(rng, n, m, 0, w_hi), seed});
  }
  return out;
}

std::vector<std::pair<const char*, SolveParams>> parameter_settings(std::size_t n) {
  SolveParams unbounded;
  SolveParams degree3;
  degree3.max_degree = 3;
  degree3.max_edge_growth = 0;
  SolveParams half;
  half.max_degree = 2;
  half.min_order = std::max<std::size_t>(1, n / 2);
  return {{"(inf,inf,1)", unbounded}, {"(3,0,1)", degree3}, {"(2,inf,n/2)", half}};
}

std::string cell_message(std::uint64_t seed, const char* setting, VertexId i, VertexId j) {
  std::ostringstream ss;
  ss << "seed " << seed << " " << setting << " cell (" << i << ", " << j << ")";
  return ss.str();
}

std::string first_mismatch(const DistanceMatrix& a, const DistanceMatrix& b, std::uint64_t seed,
                           const char* setting) {
  for (VertexId i = 1; i <= a.order(); ++i) {
    for (VertexId j = 1; j <= a.order(); ++j) {
      if (a.at(i, j) != b.at(i, j)) return cell_message(seed, setting, i, j);
    }
  }
  return "order mismatch";
}

void oracle_equivalence_and_paths() {
  const auto start = Clock::now();
  const std::vector<Instance> instances = random_instances(240);
  std::string eq_error;
  std::string path_error;
  std::size_t solves = 0;
  std::size_t pairs = 0;
  for (const Instance& inst : instances) {
    const Graph& g = inst.graph;
    const std::size_t n = g.original_order();
    const DistanceMatrix fw = floyd_warshall(g);
    const DistanceMatrix db = apsp_dijkstra(g).distances;
    if (fw != db && eq_error.empty()) eq_error = "oracles disagree, seed " + std::to_string(inst.seed);
    std::mt19937_64 rng(inst.seed ^ 0x9e3779b97f4a7c15ull);
    for (const auto& [name, params] : parameter_settings(n)) {
      const Solution s = solve(g, params);
      ++solves;
      if (eq_error.empty() && s.distances != fw) eq_error = first_mismatch(s.distances, fw, inst.seed, name);
      if (eq_error.empty() && s.distances != db) eq_error = first_mismatch(s.distances, db, inst.seed, name);
      for (int k = 0; k < 50; ++k) {
        const auto i = static_cast<VertexId>(testing::uniform(rng, 1, n));
        const auto j = static_cast<VertexId>(testing::uniform(rng, 1, n));
        ++pairs;
        try {
          const std::vector<VertexId> path = reconstruct_path(s.predecessors, g, i, j);
          if (path_weight(g, path) != s.distances.at(i, j) && path_error.empty()) {
            path_error = "weight mismatch at " + cell_message(inst.seed, name, i, j);
          }
        } catch (const Error& e) {
          if (path_error.empty()) path_error = cell_message(inst.seed, name, i, j) + ": " + e.what();
        }
      }
    }
  }
  const double secs = seconds_since(start);
  std::ostringstream ok1;
  ok1 << instances.size() << " graphs x 3 settings (" << solves
      << " solves) equal Floyd-Warshall and Dijkstra exactly, " << secs << " s";
  report(1, eq_error.empty() && secs < 60, eq_error.empty() ? ok1.str() : eq_error);
  std::ostringstream ok2;
  ok2 << pairs << " sampled pairs reconstruct to paths of matrix length";
  report(2, path_error.empty(), path_error.empty() ? ok2.str() : path_error);
}

// Distances among `survivors` in g, by the Dijkstra oracle on a compacted
// copy of all present vertices of g.
std::vector<Weight> survivor_distances(const Graph& g, const std::vector<VertexId>& survivors) {
  const std::vector<VertexId> present = g.vertices();
  std::vector<VertexId> index(g.original_order() + 1, 0);
  for (std::size_t k = 0; k < present.size(); ++k) index[present[k]] = static_cast<VertexId>(k + 1);
  Graph compact(present.size());
  g.for_each_edge([&](VertexId u, VertexId v, Weight w) { compact.set_edge(index[u], index[v], w); });
  const DistanceMatrix m = apsp_dijkstra(compact).distances;
  std::vector<Weight> out;
  out.reserve(survivors.size() * survivors.size());
  for (VertexId i : survivors) {
    for (VertexId j : survivors) out.push_back(m.at(index[i], index[j]));
  }
  return out;
}

void per_step_preservation() {
  std::string error;
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    std::mt19937_64 rng(1000 + seed);
    const Graph g0 = testing::random_connected_graph(rng, 60, testing::uniform(rng, 59, 150), 0, 1000);
    Graph before = g0;
    std::size_t step = 0;
    PrecedenceMatrix pred(60);
    auto observer = [&](const Graph& after, const RemovalRecord& rec) {
      ++step;
      if (step > 50 || !error.empty()) return;
      std::vector<VertexId> survivors = after.vertices();
      if (survivor_distances(before, survivors) != survivor_distances(after, survivors)) {
        error = "seed " + std::to_string(seed) + " removal " + std::to_string(step) + " (vertex " +
                std::to_string(rec.vertex) + ") changed a survivor distance";
      }
      ++checked;
      before = after;
    };
    disassemble(g0, SolveParams{}, pred, observer);
  }
  report(3, error.empty() && checked > 0,
         error.empty() ? std::to_string(checked) + " removals over 30 graphs preserve survivor distances" : error);
}

void edge_delta_samples() {
  std::string error;
  std::mt19937_64 rng(4);
  int positive = 0;
  for (int sample = 0; sample < 100; ++sample) {
    const std::size_t n = testing::uniform(rng, 4, 80);
    Graph g = testing::random_connected_graph(rng, n, testing::uniform(rng, n - 1, 3 * n), 0, 1000);
    // Contract a random prefix first so later samples see shortcut-rich graphs.
    PrecedenceMatrix pred(n);
    const std::size_t warmup = testing::uniform(rng, 0, n / 2);
    for (std::size_t k = 0; k < warmup && g.vertex_count() > 2; ++k) {
      const std::vector<VertexId> vs = g.vertices();
      remove_and_preserve(g, vs[rng() % vs.size()], pred);
    }
    const std::vector<VertexId> vs = g.vertices();
    const VertexId v = vs[rng() % vs.size()];
    const std::int64_t predicted = edge_delta(g, v);
    const auto m_before = static_cast<std::int64_t>(g.edge_count());
    remove_and_preserve(g, v, pred);
    const std::int64_t realized = static_cast<std::int64_t>(g.edge_count()) - m_before;
    if (predicted > 0) ++positive;
    if (predicted != realized && error.empty()) {
      error = "sample " + std::to_string(sample) + ": predicted " + std::to_string(predicted) + ", realized " +
              std::to_string(realized);
    }
  }
  report(4, error.empty(),
         error.empty() ? "100 samples match (" + std::to_string(positive) + " with growth)" : error);
}

void full_contraction() {
  std::string error;
  const std::vector<Instance> instances = random_instances(200);
  for (const Instance& inst : instances) {
    const std::size_t n = inst.graph.original_order();
    PrecedenceMatrix pred(n);
    const ShrinkSequence seq = disassemble(inst.graph, SolveParams{}, pred);
    if ((seq.residual.vertex_count() != 1 || seq.records.size() != n - 1) && error.empty()) {
      error = "seed " + std::to_string(inst.seed) + ": residual " + std::to_string(seq.residual.vertex_count()) +
              ", records " + std::to_string(seq.records.size());
    }
  }
  report(5, error.empty(), error.empty() ? "200 graphs contract to one vertex with n-1 records" : error);
}

Graph benchmark_grid() {
  std::mt19937_64 rng(32);
  return testing::road_like_grid(rng, 32, 5, 1, 100, 3.0);
}

void speedup_and_degree(const Graph& g) {
  const GraphStats st = stats(g);
  Solution pa;
  ApspResult db;
  double pa_best = 1e300;
  double db_best = 1e300;
  for (int r = 0; r < 3; ++r) {
    auto t = Clock::now();
    pa = solve(g, SolveParams{});
    pa_best = std::min(pa_best, seconds_since(t));
    t = Clock::now();
    db = apsp_dijkstra(g, 1);
    db_best = std::min(db_best, seconds_since(t));
  }
  const bool equal = pa.distances == db.distances;
  const double speedup = db_best / pa_best;
  char line[256];
  std::snprintf(line, sizeof line,
                "n=%zu m=%zu avg_degree=%.3f pa=%.4fs db=%.4fs speedup=%.2f matrices_equal=%s", st.n, st.m,
                st.average_degree(), pa_best, db_best, speedup, equal ? "true" : "false");
  report(6, st.average_degree() < 3.5 && is_connected(g) && equal && pa_best < db_best && speedup >= 3.0,
         line);
  report(7, pa.summary.max_removed_degree <= 64,
         "max removed degree " + std::to_string(pa.summary.max_removed_degree) + " (bound 64)");
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void cli_determinism(const Graph& g) {
  const fs::path dir = fs::temp_directory_path() / "apsp_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  write_dimacs_file(g, dir / "grid.gr");
  std::vector<std::string> outputs;
  for (int run = 0; run < 2; ++run) {
    const std::string d = (dir / ("d" + std::to_string(run) + ".txt")).string();
    const std::string p = (dir / ("p" + std::to_string(run) + ".txt")).string();
    const std::string command = std::string(APSP_CLI_PATH) + " solve --input " + (dir / "grid.gr").string() +
                                " --out " + d + " --pred " + p + " > /dev/null 2>&1";
    if (std::system(command.c_str()) != 0) {
      report(8, false, "apsp-cli solve failed");
      return;
    }
    outputs.push_back(slurp(d) + slurp(p));
  }
  fs::remove_all(dir);
  report(8, !outputs[0].empty() && outputs[0] == outputs[1],
         "two solve runs wrote " + std::to_string(outputs[0].size()) + " bytes each, identical: " +
             (outputs[0] == outputs[1] ? "yes" : "no"));
}

}  // namespace

int main() {
  try {
    oracle_equivalence_and_paths();
    per_step_preservation();
    edge_delta_samples();
    full_contraction();
    const Graph grid = benchmark_grid();
    speedup_and_degree(grid);
    cli_determinism(grid);
  } catch (const std::exception& e) {
    std::printf("FAIL aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
