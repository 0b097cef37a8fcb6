#include "bqsm/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bqsm {

Graph::Graph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(vertices), adj_(vertices * vertices, 0) {
  for (auto [u, v] : edges) {
    if (u >= n_ || v >= n_) throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adj_[u * n_ + v] = 1;
    adj_[v * n_ + u] = 1;
  }
}

bool Graph::has_edge(std::size_t u, std::size_t v) const { return u < n_ && v < n_ && adj_[u * n_ + v]; }

Bits Graph::adjacency() const { return adj_; }

Graph Graph::permuted(const Permutation& sigma) const {
  if (!is_permutation(sigma, n_)) throw std::invalid_argument("Graph::permuted: not a permutation");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  e.reserve(edges_.size());
  for (auto [u, v] : edges_) e.emplace_back(sigma[u], sigma[v]);
  return Graph(n_, std::move(e));
}

Permutation random_permutation(std::size_t n, RandomSource& rng) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

bool is_permutation(std::span<const std::size_t> p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_hamiltonian_cycle(const Graph& g, std::span<const std::size_t> cycle) {
  const std::size_t n = g.vertices();
  if (n < 3 || !is_permutation(cycle, n)) return false;
  for (std::size_t t = 0; t < n; ++t) {
    if (!g.has_edge(cycle[t], cycle[(t + 1) % n])) return false;
  }
  return true;
}

bool is_three_coloring(const Graph& g, std::span<const std::uint8_t> colors) {
  if (colors.size() != g.vertices()) return false;
  for (auto c : colors) {
    if (c > 2) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return true;
}

bool has_hamiltonian_cycle(const Graph& g) {
  const std::size_t n = g.vertices();
  if (n < 3) return false;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Fix vertex 0 first to skip rotations.
  do {
    if (is_hamiltonian_cycle(g, order)) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, std::move(e));
}

PlantedHamGraph planted_hamiltonian_graph(std::size_t n, std::size_t decoys, RandomSource& rng) {
  if (n < 3) throw std::invalid_argument("planted_hamiltonian_graph: need at least 3 vertices");
  HamCycle cycle = random_permutation(n, rng);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t t = 0; t < n; ++t) e.emplace_back(cycle[t], cycle[(t + 1) % n]);
  const std::size_t max_edges = n * (n - 1) / 2;
  Graph g(n, e);
  for (std::size_t added = 0; added < decoys && g.edge_count() < max_edges;) {
    const std::size_t u = rng.below(n);
    const std::size_t v = rng.below(n);
    if (u == v || g.has_edge(u, v)) continue;
    e.emplace_back(u, v);
    g = Graph(n, e);
    ++added;
  }
  return {std::move(g), std::move(cycle)};
}

}  // namespace bqsm
