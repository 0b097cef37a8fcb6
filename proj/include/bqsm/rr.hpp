#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bqsm/commitments.hpp"
#include "bqsm/protocol.hpp"

namespace bqsm {

// Round-collapse compiler: the verifier sends, for every round, a register of
// DFSS preparations followed by its challenge; the prover commits to a_i by
// measuring the register before it may read c_i.

struct RrVerifierMessage {
  std::vector<std::vector<QuantumMessage>> registers;  // registers[i][j]: bit j of a_{i+1}
  std::vector<Bits> challenges;

  std::size_t rounds() const { return challenges.size(); }
};

struct RrVerifierSecrets {
  std::vector<std::vector<DfssReceiverReceipt>> receipts;
  std::vector<Bits> challenges;
};

/// ell = pi.message_len() preparations of n qubits per round, challenges from
/// pi.sample_challenge.
std::pair<RrVerifierMessage, RrVerifierSecrets> rr_verifier_message(const InteractiveProof& pi, std::size_t n,
                                                                    RandomSource& rng);

struct RrProverMessage {
  std::vector<Bits> revealed;                 // a_i restricted to the revealed positions
  std::vector<std::vector<Bits>> openings;    // one DFSS opening string per revealed bit
  Bits final_message;                         // a_{k+1}, uncommitted

  bool operator==(const RrProverMessage&) const = default;
};

/// Delivers a verifier message in protocol order. Register i must be taken
/// and the memory bound passed before challenge i can be read; any other
/// order throws ProtocolViolation.
class RrChannel {
 public:
  enum class Event { kRegister, kBound, kChallenge };
  struct Logged {
    Event event;
    std::size_t round;
    std::size_t retained;  // qubits declared at a bound marker
  };

  RrChannel(const RrVerifierMessage& msg, std::size_t q = 0) : msg_(msg), q_(q) {}

  std::span<const QuantumMessage> take_register();
  /// Throws BoundViolation if more than q qubits are retained.
  void memory_bound(std::size_t retained_qubits);
  const Bits& read_challenge();

  std::size_t round() const { return round_; }
  bool finished() const { return round_ == msg_.rounds(); }
  const std::vector<Logged>& log() const { return log_; }

 private:
  enum class Phase { kRegister, kHolding, kChallenge };
  const RrVerifierMessage& msg_;
  std::size_t q_;
  std::size_t round_ = 0;
  Phase phase_ = Phase::kRegister;
  std::vector<Logged> log_;
};

/// Honest prover: computes a_i, measures register i, passes the bound with no
/// retained qubits, then reads c_i.
RrProverMessage rr_prover_respond(const InteractiveProof& pi, InteractiveProver& prover, RrChannel& channel,
                                  RandomSource& rng);
RrProverMessage rr_prover_respond(const InteractiveProof& pi, InteractiveProver& prover, const RrVerifierMessage& vmsg,
                                  RandomSource& rng);

/// Every opening valid and (a, c) accepted by pi's verifier.
bool rr_verify(const InteractiveProof& pi, const RrVerifierSecrets& secrets, const RrProverMessage& pmsg);

/// Zero-knowledge simulator: reads every challenge first, runs pi's special
/// simulator on them, then commits to the simulated messages. Takes no witness.
RrProverMessage rr_zk_simulate(const InteractiveProof& pi, const RrVerifierMessage& vmsg, RandomSource& rng);

/// eps + k^2 delta.
double rr_soundness_bound(double eps, std::size_t k, double delta);

}  // namespace bqsm
