#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "apsp/graph.hpp"

namespace apsp {

/// Parses the DIMACS shortest-path format ('c' comments, one 'p sp n m'
/// line, 'a u v w' arcs). Arcs are folded into an undirected simple graph:
/// self-loops are dropped and repeated pairs keep the minimum weight. The
/// problem line's arc count is informational and not checked.
Graph parse_dimacs(std::string_view text);

Graph read_dimacs_file(const std::filesystem::path& path);

/// Emits a comment line, 'p sp n 2m', then both arcs of every edge in
/// ascending (u, v) order.
std::string write_dimacs(const Graph& g);

void write_dimacs_file(const Graph& g, const std::filesystem::path& path);

}  // namespace apsp
