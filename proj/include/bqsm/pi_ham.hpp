#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bqsm/commitments.hpp"
#include "bqsm/graph.hpp"
#include "bqsm/protocol.hpp"

namespace bqsm {

/// One opened matrix entry: position, claimed bit and preparation string.
struct EntryOpening {
  std::size_t row = 0;
  std::size_t col = 0;
  WeakBcOpening opening;

  bool operator==(const EntryOpening&) const = default;
};

/// Decoded Hamiltonicity response.
struct PiHamResponse {
  std::uint8_t challenge = 0;
  Permutation sigma;                   // challenge 0 only
  std::vector<EntryOpening> entries;   // all n^2 entries (challenge 0) or the n cycle entries (challenge 1)

  bool operator==(const PiHamResponse&) const = default;
};

/// Hamiltonicity proof with one weak-BC commitment per adjacency-matrix entry
/// of a randomly permuted copy of the graph.
class PiHam final : public XiProtocol {
 public:
  PiHam(Graph g, std::size_t commit_qubits);

  std::string name() const override { return "pi-ham"; }
  std::size_t challenge_len() const override { return 1; }
  std::size_t response_len() const override { return response_len_; }

  VerifierRecord receive(const QuantumMessage& phi, RandomSource& rng) const override;
  bool verify(const VerifierRecord& record, const Bits& a, const Bits& challenge, const Bits& response) const override;
  SimulatedRun simulate(const Bits& challenge, RandomSource& rng) const override;

  const Graph& graph() const { return g_; }
  std::size_t commit_qubits() const { return commit_qubits_; }
  std::size_t index_bits() const { return index_bits_; }
  std::size_t entry_count() const { return g_.vertices() * g_.vertices(); }

  Bits encode(const PiHamResponse& r) const;
  std::optional<PiHamResponse> decode(std::uint8_t challenge, const Bits& response) const;

 private:
  Graph g_;
  std::size_t commit_qubits_;
  std::size_t index_bits_;
  std::size_t response_len_;
};

/// Prover's secret state after the first message.
struct PiHamState {
  Permutation sigma;
  std::vector<WeakBcOpening> openings;  // row-major, one per entry
  HamCycle cycle;                       // in the original vertex names
};

struct PiHamCommitment {
  QuantumMessage message;
  PiHamState state;
};

/// Commits to the matrix row by row, entry e on qubits [e n_w, (e+1) n_w).
std::pair<QuantumMessage, std::vector<WeakBcOpening>> commit_matrix(const Bits& matrix, std::size_t commit_qubits,
                                                                    RandomSource& rng);

/// Throws std::invalid_argument if w is not a Hamiltonian cycle of the graph.
PiHamCommitment pi_ham_first(const PiHam& pi, const HamCycle& w, RandomSource& rng);
/// As pi_ham_first with a caller-chosen permutation.
PiHamCommitment pi_ham_first_with(const PiHam& pi, const HamCycle& w, const Permutation& sigma, RandomSource& rng);
Bits pi_ham_respond(const PiHam& pi, const PiHamState& state, std::uint8_t challenge);
bool pi_ham_verify(const PiHam& pi, const VerifierRecord& record, std::uint8_t challenge, const Bits& response);

/// Honest prover holding a Hamiltonian cycle.
class PiHamProver final : public XiProver {
 public:
  PiHamProver(const PiHam& pi, HamCycle w);
  FirstMessage first_message(RandomSource& rng) override;
  Bits respond(const Bits& challenge) override;

 private:
  const PiHam& pi_;
  HamCycle w_;
  PiHamState state_;
};

/// Cheating prover without a witness: guesses the challenge, prepares for it,
/// and for the other challenge opens the commitments closest to a valid
/// answer, lying where it must.
class PiHamGuessingProver final : public XiProver {
 public:
  explicit PiHamGuessingProver(const PiHam& pi) : pi_(pi) {}
  FirstMessage first_message(RandomSource& rng) override;
  Bits respond(const Bits& challenge) override;

  std::uint8_t last_guess() const { return guess_; }

 private:
  const PiHam& pi_;
  std::uint8_t guess_ = 0;
  Bits matrix_;
  Permutation sigma_;
  std::vector<WeakBcOpening> openings_;
};

}  // namespace bqsm
