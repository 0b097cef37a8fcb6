#include "bqsm/three_coloring.hpp"

#include <stdexcept>

namespace bqsm {

ThreeColoring::ThreeColoring(Graph g) : g_(std::move(g)) {
  if (g_.edge_count() == 0) throw std::invalid_argument("ThreeColoring: graph needs at least one edge");
}

Bits ThreeColoring::sample_challenge(RandomSource& rng) const {
  const std::size_t w = challenge_len();
  while (true) {
    Bits c = random_bits(w, rng);
    if (uint_from_bits(c) < g_.edge_count()) return c;
  }
}

std::optional<std::pair<std::size_t, std::size_t>> ThreeColoring::challenged_edge(const Bits& challenge) const {
  if (challenge.size() != challenge_len()) return std::nullopt;
  const std::uint64_t idx = uint_from_bits(challenge);
  if (idx >= g_.edge_count()) return std::nullopt;
  return g_.edges()[idx];
}

std::vector<std::size_t> ThreeColoring::revealed_positions(std::size_t round, std::span<const Bits> challenges) const {
  if (round != 0 || challenges.size() != 1) return {};
  const auto e = challenged_edge(challenges[0]);
  if (!e) return {};
  return {2 * e->first, 2 * e->first + 1, 2 * e->second, 2 * e->second + 1};
}

bool ThreeColoring::verify(std::span<const Bits> revealed, const Bits& final_message,
                           std::span<const Bits> challenges) const {
  if (revealed.size() != 1 || challenges.size() != 1 || !final_message.empty()) return false;
  if (!challenged_edge(challenges[0]) || revealed[0].size() != 4) return false;
  const unsigned cu = 2u * revealed[0][0] + revealed[0][1];
  const unsigned cv = 2u * revealed[0][2] + revealed[0][3];
  return cu < 3 && cv < 3 && cu != cv;
}

std::vector<Bits> ThreeColoring::simulate(std::span<const Bits> challenges, RandomSource& rng) const {
  std::vector<std::uint8_t> colors(g_.vertices(), 0);
  if (challenges.size() == 1) {
    if (auto e = challenged_edge(challenges[0])) {
      const auto cu = static_cast<std::uint8_t>(rng.below(3));
      const auto cv = static_cast<std::uint8_t>((cu + 1 + rng.below(2)) % 3);
      colors[e->first] = cu;
      colors[e->second] = cv;
    }
  }
  return {encode_coloring(colors), Bits{}};
}

Bits encode_coloring(std::span<const std::uint8_t> colors) {
  Bits out;
  out.reserve(2 * colors.size());
  for (auto c : colors) {
    out.push_back((c >> 1) & 1u);
    out.push_back(c & 1u);
  }
  return out;
}

std::vector<std::uint8_t> permute_colors(std::span<const std::uint8_t> colors, RandomSource& rng) {
  static constexpr std::uint8_t kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const auto& p = kPerms[rng.below(6)];
  std::vector<std::uint8_t> out(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) out[i] = colors[i] < 3 ? p[colors[i]] : colors[i];
  return out;
}

Bits ThreeColoringProver::next(std::span<const Bits> challenges) {
  if (!challenges.empty()) return {};
  return encode_coloring(permute_colors(colors_, rng_));
}

}  // namespace bqsm
