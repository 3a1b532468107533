// Test-only oracles and graph builders. Nothing here calls the library's
// solvers; dense oracles work from plain adjacency matrices.
#pragma once
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankeq/graph.hpp"

namespace rankeq::test {

using Matrix = std::vector<std::vector<double>>;
using Adjacency = std::vector<std::vector<bool>>;

inline DirectedGraph graph_from_edges(std::size_t n,
                                      std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  DirectedGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Adjacency adjacency_of(const DirectedGraph& g) {
  const auto n = g.vertex_count();
  Adjacency a(n, std::vector<bool>(n, false));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.out_neighbors(u)) a[u][v] = true;
  return a;
}

inline Adjacency transposed(const Adjacency& a) {
  const auto n = a.size();
  Adjacency t(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) t[v][u] = a[u][v];
  return t;
}

inline DirectedGraph graph_of(const Adjacency& a) {
  DirectedGraph g(a.size());
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = 0; v < a.size(); ++v)
      if (a[u][v]) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return g;
}

/// Gaussian elimination with partial pivoting.
inline std::vector<double> solve_dense(Matrix m, std::vector<double> b) {
  const auto n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (std::abs(m[pivot][col]) < 1e-300) throw std::runtime_error("singular system");
    std::swap(m[col], m[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= m[i][c] * x[c];
    x[i] = s / m[i][i];
  }
  return x;
}

/**
 * Exact solution of x[v] = alpha * scale[v] * (sum_{u→v} x[u]/outdeg(u) + dead/n) + (1-alpha)/n
 * where dead is the mass on out-degree-0 vertices (Teleport only). Loop and
 * LoopAll add self-loops to the matrix first. Empty `scale` means all ones.
 */
inline std::vector<double> dense_rank(Adjacency a, DeadEndStrategy s, double alpha,
                                      const std::vector<double>& scale = {}) {
  const auto n = a.size();
  auto outdeg = [&](std::size_t u) { return std::count(a[u].begin(), a[u].end(), true); };
  if (s != DeadEndStrategy::Teleport) {
    std::vector<bool> dead(n);
    for (std::size_t u = 0; u < n; ++u) dead[u] = outdeg(u) == 0;
    for (std::size_t u = 0; u < n; ++u)
      if (s == DeadEndStrategy::LoopAll || dead[u]) a[u][u] = true;
  }
  Matrix m(n, std::vector<double>(n, 0.0));
  for (std::size_t u = 0; u < n; ++u) {
    const auto d = outdeg(u);
    for (std::size_t v = 0; v < n; ++v) {
      double w = 0.0;
      if (d > 0 && a[u][v]) w = 1.0 / static_cast<double>(d);
      if (d == 0 && s == DeadEndStrategy::Teleport) w = 1.0 / static_cast<double>(n);
      // Column u of the transition matrix feeds row v.
      m[v][u] -= alpha * (scale.empty() ? 1.0 : scale[v]) * w;
    }
  }
  for (std::size_t i = 0; i < n; ++i) m[i][i] += 1.0;
  return solve_dense(m, std::vector<double>(n, (1.0 - alpha) / static_cast<double>(n)));
}

/// Gini as the mean absolute difference over all ordered pairs, divided by 2*mean.
inline double pairwise_gini(const std::vector<double>& x) {
  const double n = static_cast<double>(x.size());
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double sum = 0.0;
  for (double a : x)
    for (double b : x) sum += std::abs(a - b);
  return sum / (2.0 * n * n * mean);
}

/// Directed Barabasi-Albert graph. Starts from a complete digraph on
/// `links + 1` vertices; every later vertex links to `links` distinct earlier
/// vertices picked with probability proportional to in-degree + 1. No vertex
/// is a dead end.
inline DirectedGraph preferential_attachment(std::size_t n, std::size_t links, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  DirectedGraph g(n);
  std::vector<Vertex> pool;
  const std::size_t core = std::min(n, links + 1);
  for (Vertex u = 0; u < core; ++u) {
    for (Vertex v = 0; v < core; ++v)
      if (u != v) g.add_edge(u, v);
    pool.insert(pool.end(), core, u);
  }
  for (Vertex v = static_cast<Vertex>(core); v < n; ++v) {
    std::vector<Vertex> chosen;
    while (chosen.size() < links) {
      const Vertex t = pool[rng() % pool.size()];
      if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
    }
    for (Vertex t : chosen) {
      g.add_edge(v, t);
      pool.push_back(t);
    }
    pool.push_back(v);
  }
  return g;
}

/// Random digraph with 1..max_n vertices; self-loops allowed.
inline DirectedGraph random_digraph(std::size_t max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = 1 + rng() % max_n;
  const double p = static_cast<double>(rng() % 1000) / 1000.0;
  DirectedGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (static_cast<double>(rng() % 1000000) / 1e6 < p) g.add_edge(u, v);
  return g;
}

inline bool weakly_connected(const DirectedGraph& g) {
  const auto n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    auto visit = [&](Vertex v) {
      if (!seen[v]) seen[v] = true, ++count, stack.push_back(v);
    };
    for (Vertex v : g.out_neighbors(u)) visit(v);
    for (Vertex v : g.in_neighbors(u)) visit(v);
  }
  return count == n;
}

/// Every weakly connected simple digraph (no self-loops) on n labelled vertices.
inline std::vector<DirectedGraph> all_weakly_connected_digraphs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) slots.emplace_back(u, v);
  std::vector<DirectedGraph> graphs;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    DirectedGraph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
    if (weakly_connected(g)) graphs.push_back(std::move(g));
  }
  return graphs;
}

inline DirectedGraph parse_mtx(const std::string& text) {
  std::istringstream in(text);
  return load_matrix_market(in);
}

}  // namespace rankeq::test
