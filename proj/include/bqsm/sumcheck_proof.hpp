#pragma once

#include <optional>

#include "bqsm/protocol.hpp"
#include "bqsm/sumcheck.hpp"

namespace bqsm {

/// Sum-check as a k-round public-coin proof: a_i encodes g_i as d + 1
/// coefficients of m bits each, c_i encodes r_i, and a_{k+1} is empty.
class SumcheckProof final : public InteractiveProof {
 public:
  explicit SumcheckProof(SumcheckInstance inst) : inst_(std::move(inst)) {}

  std::string name() const override { return "sumcheck"; }
  std::size_t rounds() const override { return inst_.f.n_vars(); }
  std::size_t message_len() const override { return (inst_.degree + 1) * inst_.f.field().bits(); }
  std::size_t challenge_len() const override { return inst_.f.field().bits(); }

  bool verify(std::span<const Bits> revealed, const Bits& final_message,
              std::span<const Bits> challenges) const override;

  const SumcheckInstance& instance() const { return inst_; }

  Bits encode(const Univariate& g) const;
  std::optional<Univariate> decode(const Bits& a) const;
  Bits encode_challenge(Elem r) const;
  Elem decode_challenge(const Bits& c) const;

 private:
  SumcheckInstance inst_;
};

/// Drives a SumcheckProver through the generic interface.
class SumcheckProverAdapter final : public InteractiveProver {
 public:
  SumcheckProverAdapter(const SumcheckProof& pi, SumcheckProver& prover) : pi_(pi), prover_(prover) {}
  Bits next(std::span<const Bits> challenges) override;

 private:
  const SumcheckProof& pi_;
  SumcheckProver& prover_;
};

}  // namespace bqsm
