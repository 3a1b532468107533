#pragma once
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rankeq {

using Vertex = std::uint32_t;

/// How PageRank treats vertices without out-edges.
enum class DeadEndStrategy {
  Teleport,  ///< dead-end mass is spread uniformly by the solver
  Loop,      ///< a self-loop is added to every dead end
  LoopAll    ///< a self-loop is added to every vertex
};

std::string_view to_string(DeadEndStrategy s);
/// Parses "teleport", "loop" or "loopall". Throws std::invalid_argument otherwise.
DeadEndStrategy parse_dead_end_strategy(std::string_view name);

enum class InsertResult { Inserted, Duplicate, OutOfRange };

/**
 * Unweighted simple digraph with sorted out- and in-neighbor lists.
 *
 * Both directions are kept in sync on every mutation, so a graph can serve
 * pull-style PageRank (in-neighbors) and degree queries (out-neighbors)
 * without a separate transpose.
 */
class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(std::size_t vertex_count);

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t edge_count() const { return edges_; }

  std::span<const Vertex> out_neighbors(Vertex u) const { return out_[u]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
  std::size_t out_degree(Vertex u) const { return out_[u].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }

  bool has_edge(Vertex u, Vertex v) const;

  /// Inserts u→v. Rejects duplicates and ids outside [0, vertex_count).
  InsertResult add_edge(Vertex u, Vertex v);

  /// Checks the out/in mirror, sortedness and edge count by full scan.
  bool is_consistent() const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t edges_ = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads a MatrixMarket coordinate file. Entry (i,j) becomes edge i-1 → j-1;
/// symmetric files get both directions. Values are discarded.
DirectedGraph load_matrix_market(std::istream& in);
DirectedGraph load_matrix_market_file(const std::string& path);

/// Writes a `pattern general` coordinate file, edges in (source, target) order.
void write_matrix_market(std::ostream& out, const DirectedGraph& g);

DirectedGraph transpose(const DirectedGraph& g);

DirectedGraph apply_dead_end_transform(const DirectedGraph& g, DeadEndStrategy s);

}  // namespace rankeq
