#include "apsp/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "apsp/error.hpp"

namespace apsp {
namespace {

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::uint64_t parse_unsigned(std::string_view field, std::size_t line_no, const char* what) {
  if (!field.empty() && field.front() == '-') parse_error(line_no, std::string("negative ") + what);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec == std::errc::result_out_of_range) parse_error(line_no, std::string(what) + " out of range");
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    parse_error(line_no, std::string("malformed ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  Graph g;
  bool have_problem = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto fields = split_fields(line);
    if (fields.empty() || fields[0] == "c") continue;

    if (fields[0] == "p") {
      if (have_problem) parse_error(line_no, "second problem line");
      if (fields.size() != 4 || fields[1] != "sp") parse_error(line_no, "expected 'p sp <n> <m>'");
      const std::uint64_t n = parse_unsigned(fields[2], line_no, "vertex count");
      parse_unsigned(fields[3], line_no, "arc count");
      if (n == 0) parse_error(line_no, "vertex count must be positive");
      if (n > 0xFFFF'FFFEull) parse_error(line_no, "vertex count out of range");
      g = Graph(static_cast<std::size_t>(n));
      have_problem = true;
    } else if (fields[0] == "a") {
      if (!have_problem) parse_error(line_no, "arc before problem line");
      if (fields.size() != 4) parse_error(line_no, "expected 'a <u> <v> <w>'");
      const std::uint64_t u = parse_unsigned(fields[1], line_no, "vertex id");
      const std::uint64_t v = parse_unsigned(fields[2], line_no, "vertex id");
      const std::uint64_t w = parse_unsigned(fields[3], line_no, "weight");
      const std::uint64_t n = g.original_order();
      if (u == 0 || v == 0 || u > n || v > n) {
        parse_error(line_no, "arc references vertex outside 1.." + std::to_string(n));
      }
      if (w > kMaxInputWeight) parse_error(line_no, "weight exceeds 2^32 - 1");
      if (u == v) continue;
      const auto a = static_cast<VertexId>(u);
      const auto b = static_cast<VertexId>(v);
      if (Weight(w) < g.edge_weight(a, b)) g.set_edge(a, b, Weight(w));
    } else {
      parse_error(line_no, "unknown line type '" + std::string(fields[0]) + "'");
    }
  }
  if (!have_problem) throw Error(ErrorCode::kParse, "missing problem line");
  return g;
}

Graph read_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dimacs(buffer.str());
}

std::string write_dimacs(const Graph& g) {
  std::string out = "c apsp graph\n";
  out += "p sp " + std::to_string(g.original_order()) + " " + std::to_string(2 * g.edge_count()) + "\n";
  g.for_each_edge([&](VertexId u, VertexId v, Weight w) {
    const std::string ws = std::to_string(w.value());
    out += "a " + std::to_string(u) + " " + std::to_string(v) + " " + ws + "\n";
    out += "a " + std::to_string(v) + " " + std::to_string(u) + " " + ws + "\n";
  });
  return out;
}

void write_dimacs_file(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << write_dimacs(g);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

}  // namespace apsp
