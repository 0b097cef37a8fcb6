#pragma once

#include <cstddef>
#include <vector>

#include "bqsm/ot.hpp"
#include "bqsm/protocol.hpp"

namespace bqsm {

// One-message compiler: k parallel runs of a one-bit-challenge protocol,
// each response pair sent through a BB84 oblivious transfer.

struct NipRepetition {
  QuantumMessage phi;        // quantum first message (Xi-protocols)
  Bits a;                    // classical first message (Sigma-protocols)
  QuantumMessage ot_qubits;
  OtClassicalPart ot;
  std::uint8_t swap = 0;     // slot j carries r^{j xor swap}; always 0 unless order randomization is on
};

struct NipMessage {
  std::vector<NipRepetition> reps;
  bool randomized = false;
};

struct NipOptions {
  std::size_t k = 1;
  std::size_t ot_qubits = 0;      // 0 picks default_ot_qubits(response_len)
  bool randomize_order = false;
};

/// Throws std::invalid_argument unless challenge_len() == 1, and when the
/// prover's responses do not have response_len() bits.
NipMessage nip_prove(const XiProtocol& proto, XiProver& prover, const NipOptions& opts, RandomSource& rng);

/// Honest verifier's view of one repetition.
struct NipRepView {
  VerifierRecord record;
  Bits a;
  OtClassicalPart ot;
  std::uint8_t swap = 0;
  std::uint8_t c = 0;         // OT choice bit
  Bits x_prime;               // OT measurement outcomes
  Bits r;                     // recovered response (to challenge c xor swap)
  bool accepted = false;

  std::uint8_t challenge() const { return c ^ swap; }
};

struct NipVerification {
  bool accepted = false;
  std::vector<NipRepView> views;
};

/// Measures every quantum part first (phi by the protocol's receive policy,
/// OT qubits in a uniform basis c_i), then processes the classical parts.
NipVerification nip_verify_detailed(const XiProtocol& proto, const NipMessage& msg, RandomSource& rng);
bool nip_verify(const XiProtocol& proto, const NipMessage& msg, RandomSource& rng);

/// Honest-verifier view produced without a witness: the simulator plays the
/// verifier, runs the protocol simulator on c_i, and fills the unchosen mask
/// with uniform bits.
std::vector<NipRepView> nip_hvzk_simulate(const XiProtocol& proto, std::size_t k, std::size_t ot_qubits,
                                          RandomSource& rng);

}  // namespace bqsm
