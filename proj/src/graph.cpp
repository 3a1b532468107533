#include "rankeq/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <utility>

namespace rankeq {

std::string_view to_string(DeadEndStrategy s) {
  switch (s) {
    case DeadEndStrategy::Teleport: return "teleport";
    case DeadEndStrategy::Loop: return "loop";
    case DeadEndStrategy::LoopAll: return "loopall";
  }
  return "?";
}

DeadEndStrategy parse_dead_end_strategy(std::string_view name) {
  if (name == "teleport") return DeadEndStrategy::Teleport;
  if (name == "loop") return DeadEndStrategy::Loop;
  if (name == "loopall") return DeadEndStrategy::LoopAll;
  throw std::invalid_argument("unknown dead-end strategy: " + std::string(name));
}

DirectedGraph::DirectedGraph(std::size_t vertex_count)
    : out_(vertex_count), in_(vertex_count) {}

bool DirectedGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

InsertResult DirectedGraph::add_edge(Vertex u, Vertex v) {
  if (u >= vertex_count() || v >= vertex_count()) return InsertResult::OutOfRange;
  auto& out = out_[u];
  auto pos = std::lower_bound(out.begin(), out.end(), v);
  if (pos != out.end() && *pos == v) return InsertResult::Duplicate;
  out.insert(pos, v);
  auto& in = in_[v];
  in.insert(std::lower_bound(in.begin(), in.end(), u), u);
  ++edges_;
  return InsertResult::Inserted;
}

bool DirectedGraph::is_consistent() const {
  if (out_.size() != in_.size()) return false;
  const auto n = vertex_count();
  std::size_t out_total = 0, in_total = 0;
  for (Vertex u = 0; u < n; ++u) {
    const auto& out = out_[u];
    if (!std::is_sorted(out.begin(), out.end())) return false;
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) return false;
    for (Vertex v : out) {
      if (v >= n) return false;
      if (!std::binary_search(in_[v].begin(), in_[v].end(), u)) return false;
    }
    out_total += out.size();
    const auto& in = in_[u];
    if (!std::is_sorted(in.begin(), in.end())) return false;
    if (std::adjacent_find(in.begin(), in.end()) != in.end()) return false;
    for (Vertex w : in) {
      if (w >= n) return false;
      if (!std::binary_search(out_[w].begin(), out_[w].end(), u)) return false;
    }
    in_total += in.size();
  }
  return out_total == edges_ && in_total == edges_;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string lowercase(std::string_view s) {
  std::string r(s);
  for (auto& c : r) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return r;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::uint64_t parse_index(std::string_view token, std::size_t line_no, const char* what) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size())
    throw ParseError(line_no, std::string("invalid ") + what + " '" + std::string(token) + "'");
  return value;
}

// Builds sorted, deduplicated adjacency from an edge list.
DirectedGraph build(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  DirectedGraph g(n);
  // Edges arrive sorted by (u, v), so out-lists are appended in order; in-lists
  // receive sources in increasing u as well.
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace

DirectedGraph load_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  bool symmetric = false;
  if (!std::getline(in, line)) throw ParseError(1, "empty input");
  ++line_no;
  {
    auto tokens = split_ws(line);
    if (tokens.size() != 5 || lowercase(tokens[0]) != "%%matrixmarket")
      throw ParseError(line_no, "expected '%%MatrixMarket matrix coordinate <field> <symmetry>'");
    if (lowercase(tokens[1]) != "matrix")
      throw ParseError(line_no, "unsupported object '" + std::string(tokens[1]) + "'");
    if (lowercase(tokens[2]) != "coordinate")
      throw ParseError(line_no, "unsupported format '" + std::string(tokens[2]) + "'");
    const auto field = lowercase(tokens[3]);
    if (field == "complex")
      throw ParseError(line_no, "complex matrices are not supported");
    if (field != "real" && field != "integer" && field != "pattern" && field != "double")
      throw ParseError(line_no, "unknown field '" + std::string(tokens[3]) + "'");
    const auto symmetry = lowercase(tokens[4]);
    if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric")
      throw ParseError(line_no, "unsupported symmetry '" + std::string(tokens[4]) + "'");
    symmetric = symmetry != "general";
  }

  // Size line, after optional comments.
  std::uint64_t rows = 0, cols = 0, nnz = 0;
  for (;;) {
    if (!std::getline(in, line)) throw ParseError(line_no + 1, "missing size line");
    ++line_no;
    if (line.starts_with('%') || is_blank(line)) continue;
    auto tokens = split_ws(line);
    if (tokens.size() != 3) throw ParseError(line_no, "expected size line 'rows cols nnz'");
    rows = parse_index(tokens[0], line_no, "row count");
    cols = parse_index(tokens[1], line_no, "column count");
    nnz = parse_index(tokens[2], line_no, "entry count");
    break;
  }
  const std::uint64_t n = std::max(rows, cols);
  if (n > std::numeric_limits<Vertex>::max())
    throw ParseError(line_no, "too many vertices");

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(symmetric ? 2 * nnz : nnz);
  std::uint64_t seen = 0;
  while (seen < nnz && std::getline(in, line)) {
    ++line_no;
    if (line.starts_with('%') || is_blank(line)) continue;
    auto tokens = split_ws(line);
    if (tokens.size() < 2) throw ParseError(line_no, "expected 'row col [value]'");
    const auto i = parse_index(tokens[0], line_no, "row index");
    const auto j = parse_index(tokens[1], line_no, "column index");
    if (i < 1 || i > rows) throw ParseError(line_no, "row index " + std::to_string(i) + " out of range");
    if (j < 1 || j > cols) throw ParseError(line_no, "column index " + std::to_string(j) + " out of range");
    const auto u = static_cast<Vertex>(i - 1), v = static_cast<Vertex>(j - 1);
    edges.emplace_back(u, v);
    if (symmetric && u != v) edges.emplace_back(v, u);
    ++seen;
  }
  if (seen < nnz)
    throw ParseError(line_no + 1, "expected " + std::to_string(nnz) + " entries, found " +
                                      std::to_string(seen));
  return build(static_cast<std::size_t>(n), std::move(edges));
}

DirectedGraph load_matrix_market_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  return load_matrix_market(file);
}

void write_matrix_market(std::ostream& out, const DirectedGraph& g) {
  const auto n = g.vertex_count();
  out << "%%MatrixMarket matrix coordinate pattern general\n";
  out << n << ' ' << n << ' ' << g.edge_count() << '\n';
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.out_neighbors(u)) out << u + 1 << ' ' << v + 1 << '\n';
}

DirectedGraph transpose(const DirectedGraph& g) {
  const auto n = g.vertex_count();
  DirectedGraph t(n);
  // Visiting targets in increasing order keeps every list append-only.
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.in_neighbors(v)) t.add_edge(v, u);
  return t;
}

DirectedGraph apply_dead_end_transform(const DirectedGraph& g, DeadEndStrategy s) {
  DirectedGraph a = g;
  if (s == DeadEndStrategy::Teleport) return a;
  const auto n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    if (s == DeadEndStrategy::LoopAll || g.out_degree(u) == 0) a.add_edge(u, u);
  }
  return a;
}

}  // namespace rankeq
