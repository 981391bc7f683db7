#include "apsp/disassembly.hpp"

#include <algorithm>
#include <string>

#include "apsp/error.hpp"

namespace apsp {
namespace {

struct PlannedShortcut {
  VertexId a;
  VertexId b;
  Weight current;
  Weight shortcut;
};

Weight lookup(std::span<const Neighbor> adj, VertexId v) {
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& nb, VertexId id) { return nb.id < id; });
  return (it != adj.end() && it->id == v) ? it->weight : Weight::infinity();
}

std::vector<PlannedShortcut> plan_shortcuts(const Graph& g, VertexId v) {
  const auto adj = g.neighbors(v);
  if (adj.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " is isolated");
  }
  std::vector<PlannedShortcut> plan;
  for (std::size_t x = 0; x < adj.size(); ++x) {
    for (std::size_t y = x + 1; y < adj.size(); ++y) {
      const VertexId a = adj[x].id;
      const VertexId b = adj[y].id;
      const Weight via = adj[x].weight + adj[y].weight;
      const Weight current = g.edge_weight(a, b);
      if (!(via < current)) continue;
      if (!(via < best_alternative_two_hop(g, a, b, v))) continue;
      plan.push_back({a, b, current, via});
    }
  }
  return plan;
}

std::int64_t planned_delta(const std::vector<PlannedShortcut>& plan, std::size_t degree) {
  const auto created = std::count_if(plan.begin(), plan.end(),
                                     [](const PlannedShortcut& s) { return s.current.is_infinite(); });
  return static_cast<std::int64_t>(created) - static_cast<std::int64_t>(degree);
}

RemovalRecord apply_removal(Graph& g, VertexId v, const std::vector<PlannedShortcut>& plan,
                            PrecedenceMatrix& pred) {
  RemovalRecord rec;
  rec.vertex = v;
  rec.mutations.reserve(plan.size());
  for (const PlannedShortcut& s : plan) {
    g.set_edge(s.a, s.b, s.shortcut);
    const VertexId to_b = pred.raw(v, s.b);
    const VertexId to_a = pred.raw(v, s.a);
    pred.set(s.a, s.b, to_b != kNoVertex ? to_b : v);
    pred.set(s.b, s.a, to_a != kNoVertex ? to_a : v);
    rec.mutations.push_back({s.a, s.b, s.current, s.shortcut});
  }
  rec.incident_edges = g.remove_vertex(v);
  rec.edge_delta = planned_delta(plan, rec.incident_edges.size());
  return rec;
}

}  // namespace

void SolveParams::validate() const {
  if (min_order < 1) throw Error(ErrorCode::kInvalidArgument, "n_min must be at least 1");
  if (max_degree && *max_degree < 1) {
    throw Error(ErrorCode::kInvalidArgument, "d_max must be at least 1");
  }
}

std::size_t ShrinkSequence::max_removed_degree() const {
  std::size_t best = 0;
  for (const RemovalRecord& r : records) best = std::max(best, r.incident_edges.size());
  return best;
}

Weight shortcut_weight(const Graph& g, VertexId via, VertexId a, VertexId b) {
  return g.edge_weight(a, via) + g.edge_weight(via, b);
}

Weight best_alternative_two_hop(const Graph& g, VertexId a, VertexId b, VertexId excluded) {
  auto small = g.neighbors(a);
  auto large = g.neighbors(b);
  if (small.size() > large.size()) std::swap(small, large);
  if (!g.contains(excluded)) {
    throw Error(ErrorCode::kVertexNotPresent, "vertex " + std::to_string(excluded) + " is not present");
  }
  Weight best = Weight::infinity();
  for (const Neighbor& h : small) {
    if (h.id == excluded) continue;
    const Weight other = lookup(large, h.id);
    if (other.is_infinite()) continue;
    best = std::min(best, h.weight + other);
  }
  return best;
}

std::int64_t edge_delta(const Graph& g, VertexId v) {
  return planned_delta(plan_shortcuts(g, v), g.degree(v));
}

RemovalRecord remove_and_preserve(Graph& g, VertexId v, PrecedenceMatrix& pred) {
  return apply_removal(g, v, plan_shortcuts(g, v), pred);
}

ShrinkSequence disassemble(Graph g, const SolveParams& params, PrecedenceMatrix& pred,
                           const RemovalObserver& observer) {
  params.validate();
  if (pred.order() != g.original_order()) {
    throw Error(ErrorCode::kInvalidArgument, "precedence matrix order does not match the graph");
  }
  if (auto gap = find_unreachable_pair(g)) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected: no path between " +
                                              std::to_string(gap->first) + " and " +
                                              std::to_string(gap->second));
  }

  ShrinkSequence seq;
  const auto last_id = static_cast<VertexId>(g.original_order());
  auto above_floor = [&] { return g.vertex_count() > params.min_order; };
  // Highest degree worth scanning for: the current maximum, clipped by d_max.
  auto degree_cap = [&]() -> std::size_t {
    std::size_t top = 0;
    for (VertexId v = 1; v <= last_id; ++v) {
      if (g.contains(v)) top = std::max(top, g.degree(v));
    }
    return params.max_degree ? std::min(top, *params.max_degree) : top;
  };

  std::vector<VertexId> stack;
  bool progress = true;
  while (progress && above_floor()) {
    progress = false;
    for (std::size_t d = 1; above_floor() && d <= degree_cap(); ++d) {
      for (VertexId v = 1; v <= last_id && above_floor(); ++v) {
        if (!g.contains(v) || g.degree(v) != d) continue;
        stack.assign(1, v);
        while (!stack.empty() && above_floor()) {
          const VertexId u = stack.back();
          stack.pop_back();
          if (!g.contains(u)) continue;
          const std::size_t deg = g.degree(u);
          if (deg == 0 || deg > d) continue;

          auto plan = plan_shortcuts(g, u);
          if (params.max_edge_growth && planned_delta(plan, deg) > *params.max_edge_growth) continue;

          seq.records.push_back(apply_removal(g, u, plan, pred));
          const RemovalRecord& rec = seq.records.back();
          if (observer) observer(g, rec);
          progress = true;
          // Reverse so the smallest neighbor id is examined first.
          for (auto it = rec.incident_edges.rbegin(); it != rec.incident_edges.rend(); ++it) {
            if (g.degree(it->id) <= d) stack.push_back(it->id);
          }
        }
      }
    }
  }
  seq.residual = std::move(g);
  return seq;
}

}  // namespace apsp
