#include "apsp/matrix.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "apsp/error.hpp"

namespace apsp {
namespace {

constexpr std::string_view kDistanceKind = "# apsp distance matrix";
constexpr std::string_view kPrecedenceKind = "# apsp precedence matrix";
constexpr std::string_view kInf = "INF";

void append_number(std::string& out, std::uint64_t v) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

template <typename CellFn>
std::string format_matrix(std::string_view kind, std::size_t n, CellFn&& cell) {
  std::string out;
  out.reserve(n * n * 4 + 64);
  out += kind;
  out += "\n# n ";
  append_number(out, n);
  out += "\n# order";
  for (std::size_t k = 1; k <= n; ++k) {
    out += ' ';
    append_number(out, k);
  }
  out += '\n';
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (j > 1) out += ' ';
      const std::optional<std::uint64_t> v = cell(static_cast<VertexId>(i), static_cast<VertexId>(j));
      if (v) {
        append_number(out, *v);
      } else {
        out += kInf;
      }
    }
    out += '\n';
  }
  return out;
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kParse, "matrix file: " + what);
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    line = text_.substr(pos_, end - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = end + 1;
    return true;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <typename Sink>
void for_each_token(std::string_view line, Sink&& sink) {
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) sink(line.substr(i, j - i));
    i = j;
  }
}

std::uint64_t to_number(std::string_view tok) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    malformed("bad cell '" + std::string(tok) + "'");
  }
  return v;
}

// Reads the header and calls store(i, j, value-or-nullopt) for every cell.
template <typename Init, typename Store>
void parse_matrix(std::string_view text, std::string_view kind, Init&& init, Store&& store) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.next(line) || line != kind) malformed("expected header '" + std::string(kind) + "'");

  std::size_t n = 0;
  bool have_n = false;
  std::vector<VertexId> order;
  std::size_t row = 0;
  while (reader.next(line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.starts_with("# n ")) {
        n = static_cast<std::size_t>(to_number(line.substr(4)));
        have_n = true;
        init(n);
      } else if (line.starts_with("# order")) {
        for_each_token(line.substr(7), [&](std::string_view t) {
          order.push_back(static_cast<VertexId>(to_number(t)));
        });
      }
      continue;
    }
    if (!have_n) malformed("row before '# n' header");
    if (row == 0) {
      if (order.size() != n) malformed("'# order' must list " + std::to_string(n) + " ids");
      for (VertexId id : order) {
        if (id == kNoVertex || id > n) malformed("vertex id " + std::to_string(id) + " out of range");
      }
    }
    if (row == n) malformed("more than " + std::to_string(n) + " rows");
    std::size_t col = 0;
    for_each_token(line, [&](std::string_view t) {
      if (col == n) malformed("row " + std::to_string(row + 1) + " has too many cells");
      const VertexId i = order[row];
      const VertexId j = order[col];
      if (t == kInf) {
        store(i, j, std::optional<std::uint64_t>());
      } else {
        store(i, j, std::optional<std::uint64_t>(to_number(t)));
      }
      ++col;
    });
    if (col != n) malformed("row " + std::to_string(row + 1) + " has " + std::to_string(col) + " cells");
    ++row;
  }
  if (!have_n) malformed("missing '# n' header");
  if (row != n) malformed("expected " + std::to_string(n) + " rows, found " + std::to_string(row));
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void dump(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

}  // namespace

std::string format_distance_matrix(const DistanceMatrix& m) {
  return format_matrix(kDistanceKind, m.order(), [&](VertexId i, VertexId j) {
    const Weight w = m.at(i, j);
    return w.is_finite() ? std::optional<std::uint64_t>(w.value()) : std::nullopt;
  });
}

std::string format_precedence_matrix(const PrecedenceMatrix& p) {
  return format_matrix(kPrecedenceKind, p.order(), [&](VertexId i, VertexId j) {
    const auto v = p.at(i, j);
    return v ? std::optional<std::uint64_t>(*v) : std::nullopt;
  });
}

DistanceMatrix parse_distance_matrix(std::string_view text) {
  DistanceMatrix m;
  parse_matrix(
      text, kDistanceKind, [&](std::size_t n) { m = DistanceMatrix(n); },
      [&](VertexId i, VertexId j, std::optional<std::uint64_t> v) {
        if (v && *v == Weight::kInfiniteBits) malformed("finite cell collides with infinity");
        m.set(i, j, v ? Weight(*v) : Weight::infinity());
      });
  return m;
}

PrecedenceMatrix parse_precedence_matrix(std::string_view text) {
  PrecedenceMatrix p;
  parse_matrix(
      text, kPrecedenceKind, [&](std::size_t n) { p = PrecedenceMatrix(n); },
      [&](VertexId i, VertexId j, std::optional<std::uint64_t> v) {
        if (!v) {
          p.clear(i, j);
          return;
        }
        if (*v == 0 || *v > p.order()) malformed("predecessor " + std::to_string(*v) + " out of range");
        p.set(i, j, static_cast<VertexId>(*v));
      });
  return p;
}

void write_distance_matrix(const DistanceMatrix& m, const std::filesystem::path& path) {
  dump(format_distance_matrix(m), path);
}

void write_precedence_matrix(const PrecedenceMatrix& p, const std::filesystem::path& path) {
  dump(format_precedence_matrix(p), path);
}

DistanceMatrix read_distance_matrix(const std::filesystem::path& path) {
  return parse_distance_matrix(slurp(path));
}

PrecedenceMatrix read_precedence_matrix(const std::filesystem::path& path) {
  return parse_precedence_matrix(slurp(path));
}

}  // namespace apsp
