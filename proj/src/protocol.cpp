#include "bqsm/protocol.hpp"

#include <stdexcept>

namespace bqsm {

Bits pad_with_length(std::span<const std::uint8_t> payload, std::size_t total) {
  if (payload.size() > 0xffff || payload.size() + 16 > total) {
    throw std::invalid_argument("pad_with_length: payload does not fit");
  }
  Bits out = bits_from_uint(payload.size(), 16);
  out.insert(out.end(), payload.begin(), payload.end());
  out.resize(total, 0);
  return out;
}

bool unpad_with_length(std::span<const std::uint8_t> padded, Bits& payload) {
  if (padded.size() < 16) return false;
  const std::size_t len = uint_from_bits(padded.first(16));
  if (len + 16 > padded.size()) return false;
  for (std::size_t i = 16 + len; i < padded.size(); ++i) {
    if (padded[i] != 0) return false;
  }
  payload.assign(padded.begin() + 16, padded.begin() + 16 + static_cast<std::ptrdiff_t>(len));
  return true;
}

Bits InteractiveProof::sample_challenge(RandomSource& rng) const { return random_bits(challenge_len(), rng); }

std::vector<std::size_t> InteractiveProof::revealed_positions(std::size_t, std::span<const Bits>) const {
  std::vector<std::size_t> all(message_len());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

std::vector<Bits> InteractiveProof::simulate(std::span<const Bits>, RandomSource&) const {
  throw std::logic_error(name() + " has no special honest-verifier simulator");
}

Bits select_positions(std::span<const std::uint8_t> a, std::span<const std::size_t> positions) {
  Bits out;
  out.reserve(positions.size());
  for (auto p : positions) {
    if (p >= a.size()) throw std::out_of_range("select_positions: position out of range");
    out.push_back(a[p]);
  }
  return out;
}

InteractiveTranscript run_interactive(const InteractiveProof& pi, InteractiveProver& prover, RandomSource& rng) {
  InteractiveTranscript t;
  for (std::size_t i = 0; i < pi.rounds(); ++i) {
    t.a.push_back(prover.next(t.c));
    t.c.push_back(pi.sample_challenge(rng));
  }
  t.a.push_back(prover.next(t.c));
  std::vector<Bits> revealed;
  for (std::size_t i = 0; i < pi.rounds(); ++i) {
    if (t.a[i].size() != pi.message_len()) return t;
    revealed.push_back(select_positions(t.a[i], pi.revealed_positions(i, t.c)));
  }
  t.accepted = pi.verify(revealed, t.a.back(), t.c);
  return t;
}

}  // namespace bqsm
