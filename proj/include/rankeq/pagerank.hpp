#pragma once
#include <cstddef>
#include <span>
#include <vector>

#include "rankeq/graph.hpp"

namespace rankeq {

/// Per-vertex scores. Forward and reverse ranks sum to 1.
using RankVector = std::vector<double>;

struct PageRankConfig {
  double alpha = 0.85;
  /// L1 distance between successive iterates at which iteration stops.
  double tolerance = 1e-10;
  std::size_t max_iterations = 500;

  /// Throws std::invalid_argument unless 0 < alpha < 1, tolerance >= 0 and
  /// max_iterations >= 1.
  void validate() const;
};

struct PageRankResult {
  RankVector ranks;
  std::size_t iterations = 0;
  bool converged = false;
};

/**
 * Power-iteration PageRank from the uniform vector.
 *
 * Loop and LoopAll run on a copy of the graph with self-loops added. Under
 * Teleport the rank held by dead ends is spread uniformly over all vertices
 * in every iteration. Each iterate depends only on the previous one.
 *
 * Throws std::domain_error on an empty graph.
 */
PageRankResult pagerank(const DirectedGraph& g, DeadEndStrategy s, const PageRankConfig& c = {});

/// PageRank of the transposed graph. High scores mark vertices that reach many others.
PageRankResult reverse_pagerank(const DirectedGraph& g, DeadEndStrategy s,
                                const PageRankConfig& c = {});

/**
 * Reverse PageRank with every vertex's incoming flow scaled by its forward rank:
 *
 *   r[u] = alpha * R[u] * (sum over u→v of r[v] / indeg(v)  +  dead / n) + (1 - alpha) / n
 *
 * `dead` is the reverse mass on vertices with no in-edges, present only under
 * Teleport; Loop and LoopAll self-loop those vertices of the transpose instead.
 * The fixed point is rescaled to sum 1 before it is returned.
 *
 * Throws std::invalid_argument if forward.size() != g.vertex_count().
 */
PageRankResult weighted_reverse_pagerank(const DirectedGraph& g, std::span<const double> forward,
                                         DeadEndStrategy s, const PageRankConfig& c = {});

}  // namespace rankeq
