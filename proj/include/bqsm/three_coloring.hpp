#pragma once

#include <array>
#include <optional>

#include "bqsm/graph.hpp"
#include "bqsm/protocol.hpp"

namespace bqsm {

/// Two-message 3-coloring proof. The prover commits to 2 bits per vertex
/// (color 0, 1 or 2; the pattern 11 is invalid), the single challenge is an
/// index into the sorted edge list, and only the two endpoints are opened.
class ThreeColoring final : public InteractiveProof {
 public:
  explicit ThreeColoring(Graph g);

  std::string name() const override { return "3col"; }
  std::size_t rounds() const override { return 1; }
  std::size_t message_len() const override { return 2 * g_.vertices(); }
  std::size_t challenge_len() const override { return index_width(g_.edge_count()); }

  /// Rejection-samples an index below the edge count.
  Bits sample_challenge(RandomSource& rng) const override;
  std::vector<std::size_t> revealed_positions(std::size_t round, std::span<const Bits> challenges) const override;
  bool verify(std::span<const Bits> revealed, const Bits& final_message,
              std::span<const Bits> challenges) const override;

  bool has_simulator() const override { return true; }
  /// Endpoints get two distinct uniform colors; every other vertex gets 0.
  std::vector<Bits> simulate(std::span<const Bits> challenges, RandomSource& rng) const override;

  const Graph& graph() const { return g_; }
  /// The challenged edge, or nullopt for an out-of-range index.
  std::optional<std::pair<std::size_t, std::size_t>> challenged_edge(const Bits& challenge) const;

 private:
  Graph g_;
};

Bits encode_coloring(std::span<const std::uint8_t> colors);
/// Applies a uniformly random permutation of {0, 1, 2} to the colors.
std::vector<std::uint8_t> permute_colors(std::span<const std::uint8_t> colors, RandomSource& rng);

/// Commits to a freshly color-permuted copy of `colors`. The colors need not
/// form a valid coloring, which is how cheating provers are expressed.
class ThreeColoringProver final : public InteractiveProver {
 public:
  explicit ThreeColoringProver(std::vector<std::uint8_t> colors, RandomSource& rng)
      : colors_(std::move(colors)), rng_(rng) {}
  Bits next(std::span<const Bits> challenges) override;

 private:
  std::vector<std::uint8_t> colors_;
  RandomSource& rng_;
};

}  // namespace bqsm
