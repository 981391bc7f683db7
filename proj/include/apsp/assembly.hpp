#pragma once

#include <cstdint>
#include <vector>

#include "apsp/disassembly.hpp"
#include "apsp/matrix.hpp"

namespace apsp {

/// Membership set over vertex ids 1..order.
class PresentSet {
 public:
  PresentSet() = default;
  explicit PresentSet(std::size_t order) : flags_(order + 1, 0) {}
  static PresentSet of(const Graph& g);

  bool contains(VertexId v) const { return v < flags_.size() && flags_[v] != 0; }
  void insert(VertexId v);
  std::size_t size() const { return count_; }

 private:
  std::vector<std::uint8_t> flags_;
  std::size_t count_ = 0;
};

/// Puts rec.vertex back. Its distance to every present l is the minimum over
/// its recorded edges (z, w) of w + dist[z][l], ties going to the smaller
/// neighbor id; only row and column rec.vertex of `dist` change. Predecessor
/// entries for the new pairs follow the winning neighbor x: the entries
/// recorded for the edge to x when l == x, otherwise pred[x][l] (or x) on the
/// way out and the edge (x, i) record on the way in.
void restore_vertex(DistanceMatrix& dist, PrecedenceMatrix& pred, const RemovalRecord& rec,
                    PresentSet& present);

/// Replays seq.records in reverse removal order. Expects dist and pred to hold
/// the residual solution.
void assemble(const ShrinkSequence& seq, DistanceMatrix& dist, PrecedenceMatrix& pred);

}  // namespace apsp
