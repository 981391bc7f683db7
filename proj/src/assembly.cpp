#include "apsp/assembly.hpp"

#include <algorithm>
#include <span>
#include <string>

#include "apsp/error.hpp"

namespace apsp {

PresentSet PresentSet::of(const Graph& g) {
  PresentSet s(g.original_order());
  for (VertexId v : g.vertices()) s.insert(v);
  return s;
}

void PresentSet::insert(VertexId v) {
  if (v == kNoVertex || v >= flags_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " out of range");
  }
  if (flags_[v] == 0) {
    flags_[v] = 1;
    ++count_;
  }
}

void restore_vertex(DistanceMatrix& dist, PrecedenceMatrix& pred, const RemovalRecord& rec,
                    PresentSet& present) {
  const VertexId i = rec.vertex;
  const std::size_t n = dist.order();
  if (i == kNoVertex || i > n) throw Error(ErrorCode::kCorrupt, "removal record without a vertex");
  if (present.contains(i)) {
    throw Error(ErrorCode::kCorrupt, "vertex " + std::to_string(i) + " restored twice");
  }
  for (std::size_t k = 0; k < rec.incident_edges.size(); ++k) {
    const Neighbor& z = rec.incident_edges[k];
    if (k > 0 && rec.incident_edges[k - 1].id >= z.id) {
      throw Error(ErrorCode::kCorrupt, "incident edges of " + std::to_string(i) + " are not sorted");
    }
    if (!present.contains(z.id)) {
      throw Error(ErrorCode::kCorrupt, "restoring " + std::to_string(i) + " before its neighbor " +
                                           std::to_string(z.id));
    }
  }

  // Row i is built from the neighbors' rows. Columns of absent vertices are
  // infinite in every present row, so they come out infinite here as well.
  auto row_i = dist.row(i);
  std::fill(row_i.begin(), row_i.end(), Weight::infinity());
  std::vector<VertexId> via(n, kNoVertex);
  for (const Neighbor& z : rec.incident_edges) {
    const auto row_z = dist.row(z.id);
    const std::uint64_t w = z.weight.value();
    for (std::size_t l = 0; l < n; ++l) {
      const Weight through = row_z[l].is_infinite() ? Weight::infinity() : Weight(w + row_z[l].value());
      if (through < row_i[l]) {
        row_i[l] = through;
        via[l] = z.id;
      }
    }
  }
  row_i[i - 1] = Weight(0);

  // Predecessor of i on the way in over each recorded edge.
  std::vector<VertexId> into_i(rec.incident_edges.size());
  for (std::size_t k = 0; k < rec.incident_edges.size(); ++k) {
    const VertexId z = rec.incident_edges[k].id;
    const VertexId p = pred.raw(z, i);
    into_i[k] = p != kNoVertex ? p : z;
  }
  auto into_i_from = [&](VertexId z) {
    const auto it = std::lower_bound(rec.incident_edges.begin(), rec.incident_edges.end(), z,
                                     [](const Neighbor& nb, VertexId id) { return nb.id < id; });
    return into_i[static_cast<std::size_t>(it - rec.incident_edges.begin())];
  };

  for (VertexId l = 1; l <= n; ++l) {
    if (l == i || !present.contains(l)) continue;
    dist.set(l, i, row_i[l - 1]);
    const VertexId x = via[l - 1];
    if (x == kNoVertex || x == l) continue;  // x == l: the recorded edge (i, l) is the path
    const VertexId out = pred.raw(x, l);
    pred.set(i, l, out != kNoVertex ? out : x);
    pred.set(l, i, into_i_from(x));
  }
  present.insert(i);
}

namespace {

constexpr std::uint32_t kUnranked = UINT32_MAX;
constexpr VertexId kUnwritten = UINT32_MAX;
constexpr std::uint32_t kNoEdge = UINT32_MAX;
constexpr std::size_t kBlock = 64;

// Reorders rows and columns of the row-major n x n matrix `cells` so that
// new index k holds old index from[k].
template <typename T>
void permute(std::span<T> cells, std::size_t n, const std::vector<std::uint32_t>& from) {
  std::vector<T> tmp(n);
  for (std::size_t a = 0; a < n; ++a) {
    T* row = cells.data() + a * n;
    for (std::size_t k = 0; k < n; ++k) tmp[k] = row[from[k]];
    std::copy(tmp.begin(), tmp.end(), row);
  }
  std::vector<bool> done(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (done[start] || from[start] == start) continue;
    std::copy_n(cells.data() + start * n, n, tmp.begin());
    std::size_t k = start;
    while (true) {
      done[k] = true;
      const std::size_t src = from[k];
      if (src == start) {
        std::copy(tmp.begin(), tmp.end(), cells.data() + k * n);
        break;
      }
      std::copy_n(cells.data() + src * n, n, cells.data() + k * n);
      k = src;
    }
  }
}

// assemble() replays the records with both matrices reindexed by restoration
// rank: residual vertices first, then removed vertices in reverse removal
// order (vertices in neither come last and are left alone). Before rank r is
// restored the present vertices are exactly ranks 0..r-1, so each step works
// on a leading r x r block.
//
// Restoring rank r fills row r and, logically, column r. Column writes are
// held back for up to kBlock ranks in small transposed buffers, so a flush
// is one short contiguous copy per row; reads that land in a held-back
// column are served from the pending rows and buffers.
// The arithmetic and tie-breaking are the same as restore_vertex.
class RankedAssembly {
 public:
  RankedAssembly(const ShrinkSequence& seq, DistanceMatrix& dist, PrecedenceMatrix& pred)
      : n_(dist.order()), rank_(n_ + 1, kUnranked), dist_(dist.cells()), pred_(pred.cells()) {
    for (VertexId v : seq.residual.vertices()) add(v);
    flushed_ = by_rank_.size();
    for (auto it = seq.records.rbegin(); it != seq.records.rend(); ++it) add(it->vertex);
    count_ = by_rank_.size();
    for (VertexId v = 1; v <= n_; ++v) {
      if (rank_[v] == kUnranked) add(v);
    }
    pending_dist_.resize(kBlock * n_);
    pending_pred_.assign(kBlock * n_, kUnwritten);
    via_.assign(n_, kNoEdge);
  }

  void to_rank_order() {
    std::vector<std::uint32_t> from(n_);
    for (std::size_t k = 0; k < n_; ++k) from[k] = by_rank_[k] - 1;
    permute(pred_, n_, from);
    if (count_ < n_) {
      permute(dist_, n_, from);  // cells of never-present vertices are kept
      return;
    }
    // Otherwise only the residual block of dist carries data; everything
    // else is rewritten during the restores.
    std::vector<Weight> residual(flushed_ * flushed_);
    for (std::size_t a = 0; a < flushed_; ++a) {
      for (std::size_t b = 0; b < flushed_; ++b) residual[a * flushed_ + b] = dist_[from[a] * n_ + from[b]];
    }
    for (std::size_t a = 0; a < flushed_; ++a) {
      std::copy_n(residual.begin() + a * flushed_, flushed_, dist_.begin() + a * n_);
    }
  }

  void to_id_order() {
    flush(count_);
    std::vector<std::uint32_t> from(n_);
    for (std::size_t v = 0; v < n_; ++v) from[v] = rank_[v + 1];
    permute(dist_, n_, from);
    permute(pred_, n_, from);
  }

  void restore(const RemovalRecord& rec) {
    const VertexId i = rec.vertex;
    const std::size_t r = rank_[i];
    check(rec, r);
    if (r - flushed_ == kBlock) flush(r);

    constexpr Weight inf = Weight::infinity();
    Weight* row_i = &dist_[r * n_];
    std::fill(row_i, row_i + r, inf);
    std::fill(row_i + count_, row_i + n_, inf);
    for (std::uint32_t k = 0; k < rec.incident_edges.size(); ++k) {
      const std::size_t rz = rank_[rec.incident_edges[k].id];
      const Weight* row_z = &dist_[rz * n_];
      const std::uint64_t w = rec.incident_edges[k].weight.value();
      // Branch-free so the direct loop vectorizes.
      auto relax = [&](std::size_t l, Weight d) {
        const Weight through = d.is_infinite() ? inf : Weight(w + d.value());
        const bool better = through < row_i[l];
        row_i[l] = better ? through : row_i[l];
        via_[l] = better ? k : via_[l];
      };
      // Row rz is complete up to its diagonal and through every flushed
      // column; past that, read the symmetric cell from the pending row.
      const std::size_t direct = std::min(r, std::max(flushed_, rz + 1));
      for (std::size_t l = 0; l < direct; ++l) relax(l, row_z[l]);
      for (std::size_t l = direct; l < r; ++l) relax(l, dist_[l * n_ + rz]);
    }
    row_i[r] = Weight(0);

    into_i_.resize(rec.incident_edges.size());
    for (std::size_t k = 0; k < rec.incident_edges.size(); ++k) {
      const VertexId z = rec.incident_edges[k].id;
      const VertexId p = pred_[rank_[z] * n_ + r];
      into_i_[k] = p != kNoVertex ? p : z;
    }

    VertexId* pred_row_i = &pred_[r * n_];
    const std::size_t slot = r - flushed_;
    for (std::size_t l = 0; l < r; ++l) {
      pending_dist_[l * kBlock + slot] = row_i[l];
      const std::uint32_t k = via_[l];
      via_[l] = kNoEdge;
      if (k == kNoEdge) continue;
      const VertexId x = rec.incident_edges[k].id;
      if (x == by_rank_[l]) continue;
      const VertexId out = pred_at(rank_[x], l);
      pred_row_i[l] = out != kNoVertex ? out : x;
      pending_pred_[l * kBlock + slot] = into_i_[k];
    }
  }

 private:
  void add(VertexId v) {
    if (v == kNoVertex || v > n_) throw Error(ErrorCode::kCorrupt, "removal record without a vertex");
    if (rank_[v] != kUnranked) {
      throw Error(ErrorCode::kCorrupt, "vertex " + std::to_string(v) + " restored twice");
    }
    rank_[v] = static_cast<std::uint32_t>(by_rank_.size());
    by_rank_.push_back(v);
  }

  void check(const RemovalRecord& rec, std::size_t r) const {
    for (std::size_t k = 0; k < rec.incident_edges.size(); ++k) {
      const VertexId z = rec.incident_edges[k].id;
      if (k > 0 && rec.incident_edges[k - 1].id >= z) {
        throw Error(ErrorCode::kCorrupt,
                    "incident edges of " + std::to_string(rec.vertex) + " are not sorted");
      }
      if (z == kNoVertex || z > n_ || rank_[z] >= r) {
        throw Error(ErrorCode::kCorrupt, "restoring " + std::to_string(rec.vertex) +
                                             " before its neighbor " + std::to_string(z));
      }
    }
  }

  // pred cell (a, b) for ranks already restored, including held-back columns.
  VertexId pred_at(std::size_t a, std::size_t b) const {
    if (b > a && b >= flushed_) {
      const VertexId p = pending_pred_[a * kBlock + (b - flushed_)];
      if (p != kUnwritten) return p;
    }
    return pred_[a * n_ + b];
  }

  // Writes the held-back columns flushed_..end-1 into the rows above them.
  void flush(std::size_t end) {
    for (std::size_t l = 0; l + 1 < end; ++l) {
      const std::size_t first = std::max(flushed_, l + 1);
      const std::size_t from = first - flushed_;
      const std::size_t to = end - flushed_;
      std::copy(&pending_dist_[l * kBlock + from], &pending_dist_[l * kBlock + to], &dist_[l * n_ + first]);
      VertexId* pending = &pending_pred_[l * kBlock];
      for (std::size_t s = from; s < to; ++s) {
        if (pending[s] != kUnwritten) pred_[l * n_ + flushed_ + s] = pending[s];
        pending[s] = kUnwritten;
      }
    }
    flushed_ = end;
  }

  std::size_t n_;
  std::size_t count_ = 0;    // ranked by the sequence; the rest trail
  std::size_t flushed_ = 0;  // columns below this rank are written through
  std::vector<std::uint32_t> rank_;
  std::vector<VertexId> by_rank_;
  std::span<Weight> dist_;
  std::span<VertexId> pred_;
  // Held-back column c of row l sits at [l * kBlock + c - flushed_].
  std::vector<Weight> pending_dist_;
  std::vector<VertexId> pending_pred_;
  std::vector<std::uint32_t> via_;  // index of the winning incident edge
  std::vector<VertexId> into_i_;
};

}  // namespace

void assemble(const ShrinkSequence& seq, DistanceMatrix& dist, PrecedenceMatrix& pred) {
  const std::size_t n = dist.order();
  if (pred.order() != n || seq.residual.original_order() != n) {
    throw Error(ErrorCode::kInvalidArgument, "matrix order does not match the graph");
  }
  if (seq.records.empty()) return;
  RankedAssembly ranked(seq, dist, pred);
  ranked.to_rank_order();
  for (auto it = seq.records.rbegin(); it != seq.records.rend(); ++it) ranked.restore(*it);
  ranked.to_id_order();
}

}  // namespace apsp
