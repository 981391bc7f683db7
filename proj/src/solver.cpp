#include "apsp/solver.hpp"

#include <string>

#include "apsp/assembly.hpp"
#include "apsp/error.hpp"
#include "apsp/microsolve.hpp"

namespace apsp {
namespace {

constexpr unsigned kHopBits = 16;

Graph with_hop_costs(const Graph& g) {
  Graph out(g.original_order());
  g.for_each_edge([&](VertexId u, VertexId v, Weight w) {
    if (w.value() > kMaxInputWeight) {
      throw Error(ErrorCode::kInvalidArgument, "edge (" + std::to_string(u) + ", " +
                                                   std::to_string(v) + ") weight exceeds 2^32 - 1");
    }
    out.set_edge(u, v, Weight((w.value() << kHopBits) | 1u));
  });
  return out;
}

void strip_hop_costs(DistanceMatrix& dist) {
  for (VertexId i = 1; i <= dist.order(); ++i) {
    for (Weight& cell : dist.row(i)) {
      if (cell.is_finite()) cell = Weight(cell.value() >> kHopBits);
    }
  }
}

}  // namespace

Solution solve(const Graph& g, const SolveParams& params) {
  params.validate();
  const std::size_t n = g.original_order();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty graph");
  if (g.vertex_count() != n) {
    throw Error(ErrorCode::kInvalidArgument, "solver expects every vertex to be present");
  }
  if (n > kMaxSolveOrder) {
    throw Error(ErrorCode::kTooLarge, "graph order " + std::to_string(n) + " exceeds the solver limit " +
                                          std::to_string(kMaxSolveOrder));
  }

  Solution out{DistanceMatrix(n), PrecedenceMatrix(n), {}};
  const ShrinkSequence seq = disassemble(with_hop_costs(g), params, out.predecessors);
  solve_residual(seq.residual, out.distances, out.predecessors);
  assemble(seq, out.distances, out.predecessors);
  strip_hop_costs(out.distances);

  out.summary.removals = seq.records.size();
  out.summary.residual_order = seq.residual.vertex_count();
  out.summary.max_removed_degree = seq.max_removed_degree();
  return out;
}

}  // namespace apsp
