#include "bqsm/ot.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bqsm {

Bits OtSenderSecret::substring(std::uint8_t c) const {
  Bits out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (basis_bit(theta[i]) == c) out.push_back(x[i]);
  }
  return out;
}

std::size_t default_ot_qubits(std::size_t ell, std::size_t q) {
  return std::max<std::size_t>(4 * (ell + q + kStatSecurity), 64);
}

Bits padded_substring(std::span<const std::uint8_t> x, std::span<const Basis> theta, std::uint8_t c) {
  if (x.size() != theta.size()) throw std::invalid_argument("padded_substring: |x| != |theta|");
  Bits out(x.size(), 0);
  std::size_t j = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (basis_bit(theta[i]) == c) out[j++] = x[i];
  }
  return out;
}

OtSendResult ot_send(std::span<const std::uint8_t> s0, std::span<const std::uint8_t> s1, std::size_t n,
                     RandomSource& rng) {
  const std::size_t ell = s0.size();
  if (ell == 0 || s1.size() != ell) throw std::invalid_argument("ot_send: secrets must be nonempty and equal length");
  if (n < 4 * ell) throw std::invalid_argument("ot_send: need n >= 4 ell");
  OtSendResult r;
  r.secret.x = random_bits(n, rng);
  r.secret.theta = random_bases(n, rng);
  r.qubits = prepare_bb84(r.secret.x, r.secret.theta);
  auto& cp = r.classical;
  cp.theta = r.secret.theta;
  cp.h0 = ToeplitzHash::sample(n, ell, rng);
  cp.h1 = ToeplitzHash::sample(n, ell, rng);
  cp.m0 = xor_bits(s0, cp.h0.apply(padded_substring(r.secret.x, cp.theta, 0)));
  cp.m1 = xor_bits(s1, cp.h1.apply(padded_substring(r.secret.x, cp.theta, 1)));
  return r;
}

Bits ot_receive_measure(std::uint8_t c, const QuantumMessage& qubits, RandomSource& rng) {
  return measure_bb84(qubits, constant_bases(qubits.length(), basis_from_bit(c & 1u)), rng).outcome_bits;
}

std::optional<Bits> ot_receive_classical(std::uint8_t c, std::span<const std::uint8_t> x_prime,
                                         const OtClassicalPart& cpart) {
  const std::size_t n = x_prime.size();
  const auto& h = c ? cpart.h1 : cpart.h0;
  const auto& m = c ? cpart.m1 : cpart.m0;
  if (cpart.theta.size() != n || h.in_len() != n || h.out_len() != m.size() || cpart.m0.size() != cpart.m1.size()) {
    return std::nullopt;
  }
  return xor_bits(m, h.apply(padded_substring(x_prime, cpart.theta, c & 1u)));
}

std::optional<Bits> ot_receive(std::uint8_t c, const QuantumMessage& qubits, const OtClassicalPart& cpart,
                               RandomSource& rng) {
  const Bits x_prime = ot_receive_measure(c, qubits, rng);
  return ot_receive_classical(c, x_prime, cpart);
}

std::vector<OtSendResult> ot_parallel_send(std::span<const std::pair<Bits, Bits>> secrets, std::size_t n,
                                           RandomSource& rng) {
  std::vector<OtSendResult> out;
  out.reserve(secrets.size());
  for (const auto& [s0, s1] : secrets) out.push_back(ot_send(s0, s1, n, rng));
  return out;
}

std::vector<std::optional<Bits>> ot_parallel_receive(std::span<const std::uint8_t> choices,
                                                     std::span<const QuantumMessage> qubits,
                                                     std::span<const OtClassicalPart> cparts, RandomSource& rng) {
  if (choices.size() != qubits.size() || cparts.size() != qubits.size()) {
    throw std::invalid_argument("ot_parallel_receive: instance count mismatch");
  }
  std::vector<Bits> measured;
  measured.reserve(qubits.size());
  for (std::size_t i = 0; i < qubits.size(); ++i) measured.push_back(ot_receive_measure(choices[i], qubits[i], rng));
  std::vector<std::optional<Bits>> out;
  out.reserve(qubits.size());
  for (std::size_t i = 0; i < qubits.size(); ++i) out.push_back(ot_receive_classical(choices[i], measured[i], cparts[i]));
  return out;
}

double ot_security_bound(std::size_t n, std::size_t ell, std::size_t q, std::size_t k) {
  if (k == 0) return 0.0;
  const double e = -static_cast<double>(n) / 4.0 + static_cast<double>(ell) + static_cast<double>(q);
  return static_cast<double>(k) * std::exp2(e);
}

std::vector<std::uint8_t> encode_ot_classical(const OtClassicalPart& cpart) {
  ByteWriter w;
  w.u32(static_cast<std::uint32_t>(cpart.n()));
  w.u32(static_cast<std::uint32_t>(cpart.ell()));
  w.bases(cpart.theta);
  w.bits(cpart.h0.seed());
  w.bits(cpart.h1.seed());
  w.bits(cpart.m0);
  w.bits(cpart.m1);
  return std::move(w).bytes();
}

OtClassicalPart decode_ot_classical(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  OtClassicalPart cp;
  const std::size_t n = r.u32();
  const std::size_t ell = r.u32();
  cp.theta = r.bases();
  cp.h0 = ToeplitzHash(n, ell, r.bits());
  cp.h1 = ToeplitzHash(n, ell, r.bits());
  cp.m0 = r.bits();
  cp.m1 = r.bits();
  if (!r.done() || cp.theta.size() != n || cp.m0.size() != ell || cp.m1.size() != ell) {
    throw std::invalid_argument("decode_ot_classical: inconsistent lengths");
  }
  return cp;
}

}  // namespace bqsm
