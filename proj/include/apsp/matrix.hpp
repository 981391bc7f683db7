#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apsp/weight.hpp"

namespace apsp {

/// Dense n x n matrix of path lengths indexed by 1-based vertex ids.
/// Cells start at infinity.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t order)
      : order_(order), cells_(order * order, Weight::infinity()) {}

  std::size_t order() const { return order_; }

  Weight at(VertexId i, VertexId j) const { return cells_[index(i, j)]; }
  void set(VertexId i, VertexId j, Weight w) { cells_[index(i, j)] = w; }

  /// Row i; element k holds the entry for column id k + 1.
  std::span<Weight> row(VertexId i) { return {cells_.data() + index(i, 1), order_}; }
  std::span<const Weight> row(VertexId i) const { return {cells_.data() + index(i, 1), order_}; }
  /// All cells, row-major.
  std::span<Weight> cells() { return cells_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(VertexId i, VertexId j) const {
    return (static_cast<std::size_t>(i) - 1) * order_ + (j - 1);
  }

  std::size_t order_ = 0;
  std::vector<Weight> cells_;
};

/// cells[i][j] is the vertex preceding j on the chosen shortest i -> j path.
/// An unset cell means that predecessor is i itself, reached over a direct
/// edge of the input graph; the diagonal is always unset.
class PrecedenceMatrix {
 public:
  PrecedenceMatrix() = default;
  explicit PrecedenceMatrix(std::size_t order) : order_(order), cells_(order * order, kNoVertex) {}

  std::size_t order() const { return order_; }

  std::optional<VertexId> at(VertexId i, VertexId j) const {
    const VertexId v = cells_[index(i, j)];
    return v == kNoVertex ? std::nullopt : std::optional<VertexId>(v);
  }
  /// Raw cell, kNoVertex when unset.
  VertexId raw(VertexId i, VertexId j) const { return cells_[index(i, j)]; }
  void set(VertexId i, VertexId j, VertexId pred) { cells_[index(i, j)] = pred; }
  void clear(VertexId i, VertexId j) { cells_[index(i, j)] = kNoVertex; }
  /// All cells, row-major.
  std::span<VertexId> cells() { return cells_; }

  friend bool operator==(const PrecedenceMatrix&, const PrecedenceMatrix&) = default;

 private:
  std::size_t index(VertexId i, VertexId j) const {
    return (static_cast<std::size_t>(i) - 1) * order_ + (j - 1);
  }

  std::size_t order_ = 0;
  std::vector<VertexId> cells_;
};

// Text matrix files: '#' header lines carrying the kind, "n <order>" and
// "order <id...>", then one row per line with space-separated cells and
// "INF" for infinite distances or unset predecessors.

std::string format_distance_matrix(const DistanceMatrix& m);
std::string format_precedence_matrix(const PrecedenceMatrix& p);
DistanceMatrix parse_distance_matrix(std::string_view text);
PrecedenceMatrix parse_precedence_matrix(std::string_view text);

void write_distance_matrix(const DistanceMatrix& m, const std::filesystem::path& path);
void write_precedence_matrix(const PrecedenceMatrix& p, const std::filesystem::path& path);
DistanceMatrix read_distance_matrix(const std::filesystem::path& path);
PrecedenceMatrix read_precedence_matrix(const std::filesystem::path& path);

}  // namespace apsp
