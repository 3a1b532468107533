#pragma once
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rankeq/graph.hpp"
#include "rankeq/pagerank.hpp"

namespace rankeq {

/// Source rule (Cx: best prospective contributor, CR: best contributor to the
/// top-ranked vertex) crossed with target rule (Rx: lowest rank, Sx: highest
/// reverse rank, Sr: highest forward-weighted reverse rank).
enum class HeuristicKind { CxRx, CxSx, CxSr, CRRx, CRSx, CRSr, CombinedBest };

std::string_view to_string(HeuristicKind k);
/// Accepts cxrx, cxsx, cxsr, crrx, crsx, crsr and best.
HeuristicKind parse_heuristic(std::string_view name);

bool needs_reverse_ranks(HeuristicKind k);
bool needs_weighted_reverse_ranks(HeuristicKind k);

struct Edge {
  Vertex source;
  Vertex target;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// All selectors break ties toward the smallest vertex id.

/// argmax of rank / (out-degree + 1).
Vertex select_source_cx(const DirectedGraph& g, std::span<const double> ranks);
/// In-neighbor u of the top-ranked vertex with the largest rank / out-degree.
/// Falls back to select_source_cx when the top vertex has no in-neighbors.
Vertex select_source_cr(const DirectedGraph& g, std::span<const double> ranks);
Vertex select_target_rx(std::span<const double> ranks);
Vertex select_target_sx(std::span<const double> reverse);
Vertex select_target_sr(std::span<const double> weighted_reverse);

/**
 * Picks the next edge for one of the six base heuristics. When the preferred
 * target is the source itself or already linked from it, the next-best target
 * in the rule's order is tried, keeping the source fixed.
 *
 * Rank vectors not needed by `kind` may be empty. Returns nullopt when the
 * source already links to every other vertex. Throws std::invalid_argument
 * for CombinedBest, which needs trial insertions (see run_minimization).
 */
std::optional<Edge> select_edge(const DirectedGraph& g, HeuristicKind kind,
                                std::span<const double> ranks, std::span<const double> reverse,
                                std::span<const double> weighted_reverse);

struct MinimizationStep {
  std::size_t step = 0;
  Edge edge{};
  double gini = 0.0;
  bool converged = false;
  /// CombinedBest only: Gini after trial insertion of the CxRx and CxSx edges.
  std::optional<double> cxrx_gini;
  std::optional<double> cxsx_gini;
};

struct MinimizationTrace {
  double initial_gini = 0.0;
  bool initial_converged = false;
  std::vector<MinimizationStep> steps;
  /// Set when the run stopped before the budget because no valid edge remained.
  bool exhausted = false;
};

/// Gini of the forward PageRank of `g`.
double pagerank_gini(const DirectedGraph& g, DeadEndStrategy s, const PageRankConfig& c,
                     bool* converged = nullptr);

/**
 * Adds up to `budget` edges to a copy of `g`, one heuristic choice at a time,
 * recording the Gini of forward PageRank after each insertion. Ranks are
 * recomputed from scratch on every step.
 *
 * CombinedBest tries the CxRx and CxSx edges, keeps the one with the lower
 * resulting Gini and prefers CxRx on ties.
 */
MinimizationTrace run_minimization(DirectedGraph g, HeuristicKind kind, std::size_t budget,
                                   DeadEndStrategy s, const PageRankConfig& c = {});

}  // namespace rankeq
