#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bqsm/bits.hpp"
#include "bqsm/quantum.hpp"
#include "bqsm/random.hpp"

namespace bqsm {

// Three-message proof systems with a receive-and-measure verifier. The
// statement is bound into the protocol object; the witness into the prover.

/// What the verifier keeps after measuring a first message on reception.
struct VerifierRecord {
  BasisString bases;
  Bits outcomes;

  bool operator==(const VerifierRecord&) const = default;
};

struct FirstMessage {
  QuantumMessage quantum;  // empty when the first message is classical
  Bits classical;          // empty when the first message is quantum
};

struct SimulatedRun {
  FirstMessage first;
  Bits response;
};

class XiProver {
 public:
  virtual ~XiProver() = default;
  /// Starts a fresh run.
  virtual FirstMessage first_message(RandomSource& rng) = 0;
  /// Response to `challenge` for the run started last, exactly response_len() bits.
  virtual Bits respond(const Bits& challenge) = 0;
};

class XiProtocol {
 public:
  virtual ~XiProtocol() = default;

  virtual std::string name() const = 0;
  virtual std::size_t challenge_len() const = 0;
  /// Fixed bit length of every (padded) response.
  virtual std::size_t response_len() const = 0;

  /// The verifier's measurement policy, applied as soon as the first message arrives.
  virtual VerifierRecord receive(const QuantumMessage& phi, RandomSource& rng) const = 0;
  virtual bool verify(const VerifierRecord& record, const Bits& a, const Bits& challenge,
                      const Bits& response) const = 0;
  /// Honest-verifier simulator given the challenge; never sees a witness.
  virtual SimulatedRun simulate(const Bits& challenge, RandomSource& rng) const = 0;
};

/// Pads `payload` to `total` bits behind a 16-bit big-endian length prefix.
Bits pad_with_length(std::span<const std::uint8_t> payload, std::size_t total);
/// Inverse of pad_with_length. Fails on a length that overruns or nonzero padding.
bool unpad_with_length(std::span<const std::uint8_t> padded, Bits& payload);

// Multi-round public-coin proofs for the round-collapse compiler.

class InteractiveProver {
 public:
  virtual ~InteractiveProver() = default;
  /// Called k + 1 times; call i (0-based) sees challenges c_1..c_i and returns a_{i+1}.
  virtual Bits next(std::span<const Bits> challenges) = 0;
};

class InteractiveProof {
 public:
  virtual ~InteractiveProof() = default;

  virtual std::string name() const = 0;
  /// Number of challenges k.
  virtual std::size_t rounds() const = 0;
  /// Bit length of a_1..a_k.
  virtual std::size_t message_len() const = 0;
  virtual std::size_t challenge_len() const = 0;

  /// Honest verifier's challenge distribution; uniform over challenge_len bits by default.
  virtual Bits sample_challenge(RandomSource& rng) const;

  /// Positions of a_{round+1} (0-based round) revealed to the verifier once all
  /// challenges are known. Everything by default.
  virtual std::vector<std::size_t> revealed_positions(std::size_t round, std::span<const Bits> challenges) const;

  /// revealed[i] holds a_{i+1} restricted to revealed_positions(i, c).
  virtual bool verify(std::span<const Bits> revealed, const Bits& final_message,
                      std::span<const Bits> challenges) const = 0;

  virtual bool has_simulator() const { return false; }
  /// Special honest-verifier simulator: a_1..a_{k+1} from the challenge vector.
  virtual std::vector<Bits> simulate(std::span<const Bits> challenges, RandomSource& rng) const;
};

Bits select_positions(std::span<const std::uint8_t> a, std::span<const std::size_t> positions);

struct InteractiveTranscript {
  std::vector<Bits> a;  // k + 1 messages
  std::vector<Bits> c;  // k challenges
  bool accepted = false;
};

/// Plays the proof directly, without commitments.
InteractiveTranscript run_interactive(const InteractiveProof& pi, InteractiveProver& prover, RandomSource& rng);

}  // namespace bqsm
