#include "rankeq/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rankeq/inequality.hpp"

namespace rankeq {

std::string_view to_string(HeuristicKind k) {
  switch (k) {
    case HeuristicKind::CxRx: return "cxrx";
    case HeuristicKind::CxSx: return "cxsx";
    case HeuristicKind::CxSr: return "cxsr";
    case HeuristicKind::CRRx: return "crrx";
    case HeuristicKind::CRSx: return "crsx";
    case HeuristicKind::CRSr: return "crsr";
    case HeuristicKind::CombinedBest: return "best";
  }
  return "?";
}

HeuristicKind parse_heuristic(std::string_view name) {
  for (auto k : {HeuristicKind::CxRx, HeuristicKind::CxSx, HeuristicKind::CxSr,
                 HeuristicKind::CRRx, HeuristicKind::CRSx, HeuristicKind::CRSr,
                 HeuristicKind::CombinedBest})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown heuristic: " + std::string(name));
}

bool needs_reverse_ranks(HeuristicKind k) {
  return k == HeuristicKind::CxSx || k == HeuristicKind::CRSx;
}

bool needs_weighted_reverse_ranks(HeuristicKind k) {
  return k == HeuristicKind::CxSr || k == HeuristicKind::CRSr;
}

namespace {

enum class Order { Ascending, Descending };

// First index with the extreme value; strict comparison keeps the smallest id.
Vertex extreme(std::span<const double> values, Order order) {
  if (values.empty()) throw std::invalid_argument("empty rank vector");
  Vertex best = 0;
  for (Vertex v = 1; v < values.size(); ++v) {
    const bool better = order == Order::Ascending ? values[v] < values[best]
                                                  : values[v] > values[best];
    if (better) best = v;
  }
  return best;
}

std::optional<Vertex> first_valid_target(const DirectedGraph& g, Vertex source,
                                         std::span<const double> scores, Order order) {
  const auto valid = [&](Vertex t) { return t != source && !g.has_edge(source, t); };
  const Vertex best = extreme(scores, order);
  if (valid(best)) return best;
  if (g.out_degree(source) + (g.has_edge(source, source) ? 0 : 1) >= g.vertex_count())
    return std::nullopt;

  std::vector<Vertex> ranked(scores.size());
  std::iota(ranked.begin(), ranked.end(), Vertex{0});
  std::stable_sort(ranked.begin(), ranked.end(), [&](Vertex a, Vertex b) {
    return order == Order::Ascending ? scores[a] < scores[b] : scores[a] > scores[b];
  });
  for (Vertex t : ranked)
    if (valid(t)) return t;
  return std::nullopt;
}

void check_length(const DirectedGraph& g, std::span<const double> v, const char* what) {
  if (v.size() != g.vertex_count())
    throw std::invalid_argument(std::string(what) + " length does not match vertex count");
}

}  // namespace

Vertex select_source_cx(const DirectedGraph& g, std::span<const double> ranks) {
  check_length(g, ranks, "rank vector");
  std::vector<double> score(ranks.size());
  for (Vertex u = 0; u < score.size(); ++u)
    score[u] = ranks[u] / static_cast<double>(g.out_degree(u) + 1);
  return extreme(score, Order::Descending);
}

Vertex select_source_cr(const DirectedGraph& g, std::span<const double> ranks) {
  check_length(g, ranks, "rank vector");
  const Vertex top = extreme(ranks, Order::Descending);
  const auto sources = g.in_neighbors(top);
  if (sources.empty()) return select_source_cx(g, ranks);
  // in_neighbors is sorted, so strict comparison keeps the smallest id.
  Vertex best = sources.front();
  double best_share = ranks[best] / static_cast<double>(g.out_degree(best));
  for (Vertex u : sources.subspan(1)) {
    const double share = ranks[u] / static_cast<double>(g.out_degree(u));
    if (share > best_share) best = u, best_share = share;
  }
  return best;
}

Vertex select_target_rx(std::span<const double> ranks) { return extreme(ranks, Order::Ascending); }

Vertex select_target_sx(std::span<const double> reverse) {
  return extreme(reverse, Order::Descending);
}

Vertex select_target_sr(std::span<const double> weighted_reverse) {
  return extreme(weighted_reverse, Order::Descending);
}

std::optional<Edge> select_edge(const DirectedGraph& g, HeuristicKind kind,
                                std::span<const double> ranks, std::span<const double> reverse,
                                std::span<const double> weighted_reverse) {
  if (kind == HeuristicKind::CombinedBest)
    throw std::invalid_argument("CombinedBest selects by trial insertion");
  check_length(g, ranks, "rank vector");

  const bool cx = kind == HeuristicKind::CxRx || kind == HeuristicKind::CxSx ||
                  kind == HeuristicKind::CxSr;
  const Vertex source = cx ? select_source_cx(g, ranks) : select_source_cr(g, ranks);

  std::optional<Vertex> target;
  if (needs_reverse_ranks(kind)) {
    check_length(g, reverse, "reverse rank vector");
    target = first_valid_target(g, source, reverse, Order::Descending);
  } else if (needs_weighted_reverse_ranks(kind)) {
    check_length(g, weighted_reverse, "weighted reverse rank vector");
    target = first_valid_target(g, source, weighted_reverse, Order::Descending);
  } else {
    target = first_valid_target(g, source, ranks, Order::Ascending);
  }
  if (!target) return std::nullopt;
  return Edge{source, *target};
}

double pagerank_gini(const DirectedGraph& g, DeadEndStrategy s, const PageRankConfig& c,
                     bool* converged) {
  const auto result = pagerank(g, s, c);
  if (converged) *converged = result.converged;
  return gini(lorenz_curve(result.ranks));
}

namespace {

std::optional<Edge> choose(const DirectedGraph& g, HeuristicKind kind, const RankVector& ranks,
                           DeadEndStrategy s, const PageRankConfig& c) {
  RankVector reverse, weighted;
  if (needs_reverse_ranks(kind)) reverse = reverse_pagerank(g, s, c).ranks;
  if (needs_weighted_reverse_ranks(kind)) weighted = weighted_reverse_pagerank(g, ranks, s, c).ranks;
  return select_edge(g, kind, ranks, reverse, weighted);
}

struct Trial {
  Edge edge;
  PageRankResult forward;
  double gini;
};

std::optional<Trial> try_edge(const DirectedGraph& g, std::optional<Edge> edge, DeadEndStrategy s,
                              const PageRankConfig& c) {
  if (!edge) return std::nullopt;
  DirectedGraph trial = g;
  trial.add_edge(edge->source, edge->target);
  auto forward = pagerank(trial, s, c);
  const double value = gini(lorenz_curve(forward.ranks));
  return Trial{*edge, std::move(forward), value};
}

}  // namespace

MinimizationTrace run_minimization(DirectedGraph g, HeuristicKind kind, std::size_t budget,
                                   DeadEndStrategy s, const PageRankConfig& c) {
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
  c.validate();

  MinimizationTrace trace;
  auto forward = pagerank(g, s, c);
  trace.initial_gini = gini(lorenz_curve(forward.ranks));
  trace.initial_converged = forward.converged;

  for (std::size_t step = 1; step <= budget; ++step) {
    MinimizationStep record;
    record.step = step;
    std::optional<Trial> kept;
    if (kind == HeuristicKind::CombinedBest) {
      auto a = try_edge(g, choose(g, HeuristicKind::CxRx, forward.ranks, s, c), s, c);
      auto b = try_edge(g, choose(g, HeuristicKind::CxSx, forward.ranks, s, c), s, c);
      if (a) record.cxrx_gini = a->gini;
      if (b) record.cxsx_gini = b->gini;
      if (a && (!b || a->gini <= b->gini)) kept = std::move(a);
      else kept = std::move(b);
    } else {
      kept = try_edge(g, choose(g, kind, forward.ranks, s, c), s, c);
    }
    if (!kept) {
      trace.exhausted = true;
      break;
    }
    g.add_edge(kept->edge.source, kept->edge.target);
    forward = std::move(kept->forward);
    record.edge = kept->edge;
    record.gini = kept->gini;
    record.converged = forward.converged;
    trace.steps.push_back(record);
  }
  return trace;
}

}  // namespace rankeq
