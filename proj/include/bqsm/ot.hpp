#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bqsm/bits.hpp"
#include "bqsm/hashing.hpp"
#include "bqsm/quantum.hpp"
#include "bqsm/random.hpp"

namespace bqsm {

/// Statistical security parameter used for the default qubit count.
inline constexpr std::size_t kStatSecurity = 20;

struct OtClassicalPart {
  BasisString theta;
  ToeplitzHash h0{0, 0, {}};
  ToeplitzHash h1{0, 0, {}};
  Bits m0;
  Bits m1;

  std::size_t n() const { return theta.size(); }
  std::size_t ell() const { return m0.size(); }
  bool operator==(const OtClassicalPart&) const = default;
};

struct OtSenderSecret {
  Bits x;
  BasisString theta;

  /// x restricted to positions with theta_i = c, in order.
  Bits substring(std::uint8_t c) const;
};

struct OtSendResult {
  QuantumMessage qubits;
  OtClassicalPart classical;
  OtSenderSecret secret;
};

/// max(4 (ell + q + 20), 64).
std::size_t default_ot_qubits(std::size_t ell, std::size_t q = 0);

/// Substring of x at positions theta_i = c, zero-padded on the right to |x|.
Bits padded_substring(std::span<const std::uint8_t> x, std::span<const Basis> theta, std::uint8_t c);

/// Throws std::invalid_argument unless |s0| = |s1| = ell >= 1 and n >= 4 ell.
OtSendResult ot_send(std::span<const std::uint8_t> s0, std::span<const std::uint8_t> s1, std::size_t n,
                     RandomSource& rng);

/// Receiver's quantum step: measure every qubit in basis c on reception.
Bits ot_receive_measure(std::uint8_t c, const QuantumMessage& qubits, RandomSource& rng);
/// Receiver's classical step: m_c xor h_c(x'_c). nullopt if the classical
/// part is inconsistent with x' (protocol abort).
std::optional<Bits> ot_receive_classical(std::uint8_t c, std::span<const std::uint8_t> x_prime,
                                         const OtClassicalPart& cpart);
std::optional<Bits> ot_receive(std::uint8_t c, const QuantumMessage& qubits, const OtClassicalPart& cpart,
                               RandomSource& rng);

std::vector<OtSendResult> ot_parallel_send(std::span<const std::pair<Bits, Bits>> secrets, std::size_t n,
                                           RandomSource& rng);
/// Measures all quantum parts first, then processes all classical parts.
std::vector<std::optional<Bits>> ot_parallel_receive(std::span<const std::uint8_t> choices,
                                                     std::span<const QuantumMessage> qubits,
                                                     std::span<const OtClassicalPart> cparts, RandomSource& rng);

/// k * 2^{-n/4 + ell + q}.
double ot_security_bound(std::size_t n, std::size_t ell, std::size_t q, std::size_t k);

std::vector<std::uint8_t> encode_ot_classical(const OtClassicalPart& cpart);
/// Throws std::out_of_range or std::invalid_argument on malformed input.
OtClassicalPart decode_ot_classical(std::span<const std::uint8_t> bytes);

}  // namespace bqsm
