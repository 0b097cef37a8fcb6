#include "bqsm/commitments.hpp"

#include <cmath>
#include <stdexcept>

namespace bqsm {
namespace {

/// x'_i = x_i on every position whose preparation basis equals the opened basis.
bool matches_where(std::span<const std::uint8_t> x, std::span<const Basis> theta, std::span<const Basis> opened,
                   std::span<const std::uint8_t> x_prime) {
  if (x.size() != theta.size() || x_prime.size() != x.size() || opened.size() != x.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x_prime[i] > 1) return false;
    if (theta[i] == opened[i] && x[i] != x_prime[i]) return false;
  }
  return true;
}

}  // namespace

std::pair<QuantumMessage, DfssReceiverReceipt> dfss_prepare(std::size_t n, RandomSource& rng) {
  if (n == 0) throw std::invalid_argument("dfss_prepare: n must be positive");
  DfssReceiverReceipt r;
  r.x = random_bits(n, rng);
  r.theta = random_bases(n, rng);
  auto msg = prepare_bb84(r.x, r.theta);
  return {std::move(msg), std::move(r)};
}

Bits dfss_commit(std::uint8_t b, const QuantumMessage& msg, RandomSource& rng) {
  const auto bases = constant_bases(msg.length(), basis_from_bit(b & 1u));
  return measure_bb84(msg, bases, rng).outcome_bits;
}

bool dfss_verify(const DfssReceiverReceipt& receipt, const DfssOpening& opening) {
  if (opening.b > 1) return false;
  const auto opened = constant_bases(receipt.x.size(), basis_from_bit(opening.b));
  return matches_where(receipt.x, receipt.theta, opened, opening.x_prime);
}

std::vector<Bits> dfss_string_commit(std::span<const std::uint8_t> a, std::span<const QuantumMessage> msgs,
                                     RandomSource& rng) {
  if (a.size() != msgs.size()) throw std::invalid_argument("dfss_string_commit: one message per bit");
  std::vector<Bits> out;
  out.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out.push_back(dfss_commit(a[j], msgs[j], rng));
  return out;
}

bool dfss_string_verify(std::span<const DfssReceiverReceipt> receipts, std::span<const std::uint8_t> a,
                        std::span<const Bits> x_primes) {
  if (receipts.size() != a.size() || x_primes.size() != a.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!dfss_verify(receipts[j], DfssOpening{a[j], x_primes[j]})) return false;
  }
  return true;
}

std::pair<QuantumMessage, WeakBcOpening> weak_bc_commit(std::uint8_t b, std::size_t n, RandomSource& rng) {
  WeakBcOpening o;
  o.b = b & 1u;
  o.x = random_bits(n, rng);
  auto msg = prepare_bb84(o.x, constant_bases(n, basis_from_bit(o.b)));
  return {std::move(msg), std::move(o)};
}

WeakBcReceipt weak_bc_receive(const QuantumMessage& msg, RandomSource& rng) {
  WeakBcReceipt r;
  r.theta = random_bases(msg.length(), rng);
  r.x_prime = measure_bb84(msg, r.theta, rng).outcome_bits;
  return r;
}

bool weak_bc_verify(const WeakBcReceipt& receipt, const WeakBcOpening& opening) {
  if (opening.b > 1) return false;
  const auto opened = constant_bases(receipt.theta.size(), basis_from_bit(opening.b));
  return matches_where(opening.x, receipt.theta, opened, receipt.x_prime);
}

BasisString code_bases(const GeneratorMatrix& G, std::span<const std::uint8_t> a) {
  return bases_from_bits(G.encode(a));
}

std::pair<QuantumMessage, DfssReceiverReceipt> abo_prepare(const GeneratorMatrix& G, RandomSource& rng) {
  return dfss_prepare(G.N(), rng);
}

Bits abo_commit(const GeneratorMatrix& G, std::span<const std::uint8_t> a, const QuantumMessage& msg,
                RandomSource& rng) {
  if (msg.length() != G.N()) throw std::invalid_argument("abo_commit: message length != N");
  return measure_bb84(msg, code_bases(G, a), rng).outcome_bits;
}

bool abo_verify(const GeneratorMatrix& G, const DfssReceiverReceipt& receipt, const AboOpening& opening) {
  if (opening.a.size() != G.n() || receipt.x.size() != G.N()) return false;
  for (auto v : opening.a) {
    if (v > 1) return false;
  }
  return matches_where(receipt.x, receipt.theta, code_bases(G, opening.a), opening.z);
}

OverlapResult basis_overlap(const GeneratorMatrix& G, std::size_t dense_cap) {
  OverlapResult r;
  r.formula = std::exp2(-static_cast<double>(G.d()) / 2.0);
  if (G.N() > dense_cap || G.n() > 6) return r;
  const std::size_t N = G.N();
  const std::uint64_t messages = std::uint64_t{1} << G.n();
  std::vector<BasisString> masks;
  for (std::uint64_t a = 0; a < messages; ++a) masks.push_back(code_bases(G, bits_from_uint(a, G.n())));
  // |<x| H^m H^m' |y>| for every x at once is the amplitude vector of H^m H^m' |y>.
  const std::uint64_t ys = std::min<std::uint64_t>(std::uint64_t{1} << N, 4);
  double best = 0.0;
  for (std::uint64_t i = 0; i < messages; ++i) {
    for (std::uint64_t j = i + 1; j < messages; ++j) {
      for (std::uint64_t y = 0; y < ys; ++y) {
        const auto s = apply_hadamard_mask(apply_hadamard_mask(DenseState::basis_state(bits_from_uint(y, N)), masks[j]),
                                           masks[i]);
        for (const auto& amp : s.amplitudes()) best = std::max(best, std::abs(amp));
      }
    }
  }
  r.dense = best;
  return r;
}

}  // namespace bqsm
