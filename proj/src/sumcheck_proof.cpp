#include "bqsm/sumcheck_proof.hpp"

namespace bqsm {

Bits SumcheckProof::encode(const Univariate& g) const {
  const std::size_t m = inst_.f.field().bits();
  Bits out;
  out.reserve(message_len());
  for (std::size_t t = 0; t <= inst_.degree; ++t) {
    const Elem c = t < g.coeffs.size() ? g.coeffs[t] : 0;
    auto b = bits_from_uint(c, m);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::optional<Univariate> SumcheckProof::decode(const Bits& a) const {
  const std::size_t m = inst_.f.field().bits();
  if (a.size() != message_len()) return std::nullopt;
  Univariate g;
  for (std::size_t t = 0; t <= inst_.degree; ++t) {
    g.coeffs.push_back(uint_from_bits(std::span<const std::uint8_t>(a).subspan(t * m, m)));
  }
  return g;
}

Bits SumcheckProof::encode_challenge(Elem r) const { return bits_from_uint(r, inst_.f.field().bits()); }

Elem SumcheckProof::decode_challenge(const Bits& c) const { return uint_from_bits(c); }

bool SumcheckProof::verify(std::span<const Bits> revealed, const Bits& final_message,
                           std::span<const Bits> challenges) const {
  const std::size_t k = rounds();
  if (revealed.size() != k || challenges.size() != k || !final_message.empty()) return false;
  std::vector<Univariate> g;
  std::vector<Elem> r;
  for (std::size_t i = 0; i < k; ++i) {
    auto gi = decode(revealed[i]);
    if (!gi || challenges[i].size() != challenge_len()) return false;
    g.push_back(std::move(*gi));
    r.push_back(decode_challenge(challenges[i]));
  }
  return sumcheck_verify_transcript(inst_, g, r);
}

Bits SumcheckProverAdapter::next(std::span<const Bits> challenges) {
  if (challenges.size() >= pi_.rounds()) return {};
  std::vector<Elem> r;
  for (const auto& c : challenges) r.push_back(pi_.decode_challenge(c));
  return pi_.encode(prover_.round(r));
}

}  // namespace bqsm
