#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bqsm/bits.hpp"
#include "bqsm/codes.hpp"
#include "bqsm/quantum.hpp"
#include "bqsm/random.hpp"

namespace bqsm {

// Receiver-prepared commitment: the receiver sends |x>_theta, the committer
// measures everything in basis b and later reveals b and the outcomes.

struct DfssReceiverReceipt {
  Bits x;
  BasisString theta;

  bool operator==(const DfssReceiverReceipt&) const = default;
};

struct DfssOpening {
  std::uint8_t b = 0;
  Bits x_prime;

  bool operator==(const DfssOpening&) const = default;
};

std::pair<QuantumMessage, DfssReceiverReceipt> dfss_prepare(std::size_t n, RandomSource& rng);
/// Measures every qubit in basis b; returns x'.
Bits dfss_commit(std::uint8_t b, const QuantumMessage& msg, RandomSource& rng);
/// Accepts iff x'_i = x_i wherever theta_i = b. Malformed openings reject.
bool dfss_verify(const DfssReceiverReceipt& receipt, const DfssOpening& opening);

/// Bitwise composition: bit j of `a` is committed on msgs[j].
std::vector<Bits> dfss_string_commit(std::span<const std::uint8_t> a, std::span<const QuantumMessage> msgs,
                                     RandomSource& rng);
bool dfss_string_verify(std::span<const DfssReceiverReceipt> receipts, std::span<const std::uint8_t> a,
                        std::span<const Bits> x_primes);

// Committer-prepared commitment: the committer sends |x>_b and reveals (x, b).

struct WeakBcOpening {
  std::uint8_t b = 0;
  Bits x;

  bool operator==(const WeakBcOpening&) const = default;
};

struct WeakBcReceipt {
  BasisString theta;
  Bits x_prime;

  bool operator==(const WeakBcReceipt&) const = default;
};

std::pair<QuantumMessage, WeakBcOpening> weak_bc_commit(std::uint8_t b, std::size_t n, RandomSource& rng);
/// Measures on reception in uniformly random bases.
WeakBcReceipt weak_bc_receive(const QuantumMessage& msg, RandomSource& rng);
/// Accepts iff x_i = x'_i wherever theta_i = b.
bool weak_bc_verify(const WeakBcReceipt& receipt, const WeakBcOpening& opening);

// Code-basis string commitment: the committer to a measures qubit i in (G a)_i.

struct AboOpening {
  Bits a;
  Bits z;

  bool operator==(const AboOpening&) const = default;
};

BasisString code_bases(const GeneratorMatrix& G, std::span<const std::uint8_t> a);
/// Receiver side; identical to dfss_prepare with N qubits.
std::pair<QuantumMessage, DfssReceiverReceipt> abo_prepare(const GeneratorMatrix& G, RandomSource& rng);
Bits abo_commit(const GeneratorMatrix& G, std::span<const std::uint8_t> a, const QuantumMessage& msg,
                RandomSource& rng);
/// Accepts iff z_i = x_i wherever theta_i = (G a)_i.
bool abo_verify(const GeneratorMatrix& G, const DfssReceiverReceipt& receipt, const AboOpening& opening);

struct OverlapResult {
  double formula = 0.0;          // 2^{-d/2}
  std::optional<double> dense;   // max |<x|_{Ga} |y>_{Ga'}| over a != a', x, y
};

/// Maximal overlap between code bases. The dense value is computed when
/// N <= dense_cap and n <= 6.
OverlapResult basis_overlap(const GeneratorMatrix& G, std::size_t dense_cap = kDefaultDenseCap);

}  // namespace bqsm
