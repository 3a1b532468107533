#include "rankeq/pagerank.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace rankeq {

void PageRankConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be non-negative");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
}

namespace {

double l1_distance(const RankVector& a, const RankVector& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return sum;
}

// Pull-style iteration over `a`. `scale` multiplies each vertex's incoming
// link flow (dead-end share included); an empty span means 1 everywhere.
PageRankResult iterate(const DirectedGraph& a, bool teleport, std::span<const double> scale,
                       const PageRankConfig& c) {
  const std::size_t n = a.vertex_count();
  const double inv_n = 1.0 / static_cast<double>(n);
  const double base = (1.0 - c.alpha) * inv_n;

  PageRankResult result;
  RankVector r(n, inv_n), next(n), contrib(n);
  for (std::size_t it = 1; it <= c.max_iterations; ++it) {
    double dead = 0.0;
    for (Vertex u = 0; u < n; ++u) {
      const auto d = a.out_degree(u);
      contrib[u] = d ? r[u] / static_cast<double>(d) : 0.0;
      if (d == 0) dead += r[u];
    }
    const double dead_share = teleport ? dead * inv_n : 0.0;
    for (Vertex v = 0; v < n; ++v) {
      double flow = dead_share;
      for (Vertex u : a.in_neighbors(v)) flow += contrib[u];
      if (!scale.empty()) flow *= scale[v];
      next[v] = base + c.alpha * flow;
    }
    const double diff = l1_distance(next, r);
    std::swap(r, next);
    result.iterations = it;
    if (diff <= c.tolerance) {
      result.converged = true;
      break;
    }
  }
  result.ranks = std::move(r);
  return result;
}

void require_nonempty(const DirectedGraph& g) {
  if (g.vertex_count() == 0) throw std::domain_error("PageRank of an empty graph");
}

}  // namespace

PageRankResult pagerank(const DirectedGraph& g, DeadEndStrategy s, const PageRankConfig& c) {
  c.validate();
  require_nonempty(g);
  const bool teleport = s == DeadEndStrategy::Teleport;
  if (teleport) return iterate(g, true, {}, c);
  return iterate(apply_dead_end_transform(g, s), false, {}, c);
}

PageRankResult reverse_pagerank(const DirectedGraph& g, DeadEndStrategy s,
                                const PageRankConfig& c) {
  return pagerank(transpose(g), s, c);
}

PageRankResult weighted_reverse_pagerank(const DirectedGraph& g, std::span<const double> forward,
                                         DeadEndStrategy s, const PageRankConfig& c) {
  c.validate();
  require_nonempty(g);
  if (forward.size() != g.vertex_count())
    throw std::invalid_argument("forward rank vector length does not match vertex count");
  const auto flow = apply_dead_end_transform(transpose(g), s);
  auto result = iterate(flow, s == DeadEndStrategy::Teleport, forward, c);
  const double total = std::accumulate(result.ranks.begin(), result.ranks.end(), 0.0);
  for (auto& x : result.ranks) x /= total;
  return result;
}

}  // namespace rankeq
