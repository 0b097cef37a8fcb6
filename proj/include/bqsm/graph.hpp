#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bqsm/bits.hpp"
#include "bqsm/random.hpp"

namespace bqsm {

using Permutation = std::vector<std::size_t>;
/// Vertex order of a Hamiltonian cycle; the last vertex connects to the first.
using HamCycle = std::vector<std::size_t>;

/// Simple undirected graph. Edges are stored as (u, v) with u < v, sorted.
class Graph {
 public:
  Graph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertices() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  bool has_edge(std::size_t u, std::size_t v) const;

  /// Row-major n x n adjacency matrix.
  Bits adjacency() const;
  /// Graph with vertex u renamed to sigma[u].
  Graph permuted(const Permutation& sigma) const;

  bool operator==(const Graph&) const = default;

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  Bits adj_;
};

Permutation random_permutation(std::size_t n, RandomSource& rng);
bool is_permutation(std::span<const std::size_t> p, std::size_t n);

bool is_hamiltonian_cycle(const Graph& g, std::span<const std::size_t> cycle);
/// Colors in {0, 1, 2}, adjacent vertices distinct.
bool is_three_coloring(const Graph& g, std::span<const std::uint8_t> colors);
/// Brute force over all vertex orders; for tests on small graphs.
bool has_hamiltonian_cycle(const Graph& g);

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

struct PlantedHamGraph {
  Graph graph;
  HamCycle cycle;
};
/// A random Hamiltonian cycle on n vertices plus `decoys` extra random edges.
PlantedHamGraph planted_hamiltonian_graph(std::size_t n, std::size_t decoys, RandomSource& rng);

}  // namespace bqsm
