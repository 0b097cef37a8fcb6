#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bqsm/bits.hpp"
#include "bqsm/random.hpp"

namespace bqsm {

/// Default ceiling on qubits held in dense (statevector) form.
inline constexpr std::size_t kDefaultDenseCap = 14;

/// Tolerance used for norm and fidelity checks on dense states.
inline constexpr double kDenseTolerance = 1e-9;

using Amplitude = std::complex<double>;

struct SymbolicQubit {
  std::uint8_t bit = 0;
  Basis basis = Basis::kComputational;

  bool operator==(const SymbolicQubit&) const = default;
};

/// Pure state on N qubits. Qubit 0 is the most significant bit of the
/// amplitude index, so |q0 q1 ... q_{N-1}> reads left to right.
class DenseState {
 public:
  DenseState(std::vector<Amplitude> amplitudes, std::vector<std::string> labels);

  /// Computational basis state |x>.
  static DenseState basis_state(std::span<const std::uint8_t> x);

  std::size_t qubits() const { return labels_.size(); }
  const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }
  const std::vector<std::string>& labels() const { return labels_; }
  double norm() const;

 private:
  std::vector<Amplitude> amplitudes_;
  std::vector<std::string> labels_;
};

/// A sequence of conjugate-coded qubits, either as (bit, basis) pairs or as a
/// statevector. Exactly one form is held at a time.
class QuantumMessage {
 public:
  QuantumMessage() = default;
  explicit QuantumMessage(std::vector<SymbolicQubit> qubits) : repr_(std::move(qubits)) {}
  explicit QuantumMessage(DenseState state) : repr_(std::move(state)) {}

  std::size_t length() const;
  bool is_symbolic() const { return std::holds_alternative<std::vector<SymbolicQubit>>(repr_); }

  /// Throws std::logic_error when the message is dense.
  const std::vector<SymbolicQubit>& qubits() const;
  /// Throws std::logic_error when the message is symbolic.
  const DenseState& dense() const;

 private:
  std::variant<std::vector<SymbolicQubit>, DenseState> repr_;
};

struct MeasurementRecord {
  Bits outcome_bits;
  BasisString bases_used;
  QuantumMessage collapsed;
};

/// |x>_theta, qubit i prepared as H^{theta_i}|x_i>.
QuantumMessage prepare_bb84(std::span<const std::uint8_t> x, std::span<const Basis> theta);

/// Measures qubit i in bases[i]. Symbolic messages: matching basis returns the
/// prepared bit, otherwise a fair coin and the qubit is relabelled
/// (outcome, bases[i]). Dense messages: Born-rule sampling with collapse.
MeasurementRecord measure_bb84(const QuantumMessage& msg, std::span<const Basis> bases, RandomSource& rng);

/// Exact probability of every outcome string (index = outcome read as a
/// big-endian integer) when measuring msg in `bases`. Requires length <= 20.
std::vector<double> outcome_distribution(const QuantumMessage& msg, std::span<const Basis> bases);

QuantumMessage densify(const QuantumMessage& msg, std::size_t dense_cap = kDefaultDenseCap);

/// N EPR pairs (|00> + |11>)/sqrt(2); qubit 2i is P_{i+1}, qubit 2i+1 is V_{i+1}.
DenseState epr_pairs(std::size_t pairs, std::size_t dense_cap = kDefaultDenseCap);

/// Applies H to every qubit i with mask[i] = x.
DenseState apply_hadamard_mask(const DenseState& state, std::span<const Basis> mask);

Amplitude inner_product(const DenseState& a, const DenseState& b);
/// |<a|b>|^2; insensitive to global phase.
double fidelity(const DenseState& a, const DenseState& b);

struct ConditionalState {
  double probability = 0.0;  // of observing the outcome
  DenseState remaining;      // normalized state of the unmeasured qubits
};

/// Post-selects `which` qubits on `outcome` in `bases` and traces them out.
/// Throws std::domain_error if the outcome has zero probability.
ConditionalState condition_on_outcome(const DenseState& state, std::span<const std::size_t> which,
                                      std::span<const Basis> bases, std::span<const std::uint8_t> outcome);

struct PartialMeasurement {
  Bits outcomes;
  DenseState post;  // all qubits kept, measured ones collapsed
};

/// Measures the listed qubits (in order) with collapse.
PartialMeasurement measure_qubits(const DenseState& state, std::span<const std::size_t> which,
                                  std::span<const Basis> bases, RandomSource& rng);

}  // namespace bqsm
