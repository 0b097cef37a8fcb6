#include "bqsm/quantum.hpp"

#include <cmath>
#include <stdexcept>

#include "bqsm/errors.hpp"

namespace bqsm {
namespace {

constexpr std::size_t kMaxDenseQubits = 30;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::size_t bit_of(std::size_t qubit, std::size_t n) { return n - 1 - qubit; }

void hadamard_in_place(std::vector<Amplitude>& amps, std::size_t qubit, std::size_t n) {
  const std::size_t stride = std::size_t{1} << bit_of(qubit, n);
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::size_t j = base; j < base + stride; ++j) {
      const Amplitude a = amps[j];
      const Amplitude b = amps[j + stride];
      amps[j] = (a + b) * kInvSqrt2;
      amps[j + stride] = (a - b) * kInvSqrt2;
    }
  }
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "q" + std::to_string(i);
  return labels;
}

void require_cap(std::size_t qubits, std::size_t cap) {
  if (qubits > cap || qubits > kMaxDenseQubits) {
    throw CapacityError("dense state of " + std::to_string(qubits) + " qubits exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

DenseState::DenseState(std::vector<Amplitude> amplitudes, std::vector<std::string> labels)
    : amplitudes_(std::move(amplitudes)), labels_(std::move(labels)) {
  if (labels_.size() > kMaxDenseQubits) throw CapacityError("dense state too large");
  if (amplitudes_.size() != (std::size_t{1} << labels_.size())) {
    throw std::invalid_argument("DenseState: amplitude count must be 2^qubits");
  }
  if (std::abs(norm() - 1.0) > kDenseTolerance) throw std::invalid_argument("DenseState: state is not normalized");
}

DenseState DenseState::basis_state(std::span<const std::uint8_t> x) {
  std::vector<Amplitude> amps(std::size_t{1} << x.size());
  amps[uint_from_bits(x)] = 1.0;
  return DenseState(std::move(amps), default_labels(x.size()));
}

double DenseState::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

std::size_t QuantumMessage::length() const {
  return is_symbolic() ? std::get<0>(repr_).size() : std::get<1>(repr_).qubits();
}

const std::vector<SymbolicQubit>& QuantumMessage::qubits() const {
  if (!is_symbolic()) throw std::logic_error("QuantumMessage is dense");
  return std::get<0>(repr_);
}

const DenseState& QuantumMessage::dense() const {
  if (is_symbolic()) throw std::logic_error("QuantumMessage is symbolic");
  return std::get<1>(repr_);
}

QuantumMessage prepare_bb84(std::span<const std::uint8_t> x, std::span<const Basis> theta) {
  if (x.size() != theta.size()) throw std::invalid_argument("prepare_bb84: |x| != |theta|");
  std::vector<SymbolicQubit> q(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) q[i] = SymbolicQubit{static_cast<std::uint8_t>(x[i] & 1u), theta[i]};
  return QuantumMessage(std::move(q));
}

MeasurementRecord measure_bb84(const QuantumMessage& msg, std::span<const Basis> bases, RandomSource& rng) {
  if (bases.size() != msg.length()) throw std::invalid_argument("measure_bb84: basis count != message length");
  MeasurementRecord rec;
  rec.bases_used.assign(bases.begin(), bases.end());
  if (msg.is_symbolic()) {
    const auto& qs = msg.qubits();
    std::vector<SymbolicQubit> collapsed(qs.size());
    rec.outcome_bits.resize(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const std::uint8_t out = qs[i].basis == bases[i] ? qs[i].bit : static_cast<std::uint8_t>(rng.bit());
      rec.outcome_bits[i] = out;
      collapsed[i] = SymbolicQubit{out, bases[i]};
    }
    rec.collapsed = QuantumMessage(std::move(collapsed));
    return rec;
  }
  std::vector<std::size_t> all(msg.length());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto pm = measure_qubits(msg.dense(), all, bases, rng);
  rec.outcome_bits = std::move(pm.outcomes);
  rec.collapsed = QuantumMessage(std::move(pm.post));
  return rec;
}

std::vector<double> outcome_distribution(const QuantumMessage& msg, std::span<const Basis> bases) {
  const std::size_t n = msg.length();
  if (bases.size() != n) throw std::invalid_argument("outcome_distribution: basis count != message length");
  if (n > 20) throw CapacityError("outcome_distribution: more than 20 qubits");
  std::vector<double> probs(std::size_t{1} << n, 0.0);
  if (msg.is_symbolic()) {
    const auto& qs = msg.qubits();
    for (std::size_t idx = 0; idx < probs.size(); ++idx) {
      double p = 1.0;
      for (std::size_t i = 0; i < n && p > 0.0; ++i) {
        const std::uint8_t out = (idx >> bit_of(i, n)) & 1u;
        if (qs[i].basis == bases[i]) {
          p *= out == qs[i].bit ? 1.0 : 0.0;
        } else {
          p *= 0.5;
        }
      }
      probs[idx] = p;
    }
    return probs;
  }
  const DenseState rotated = apply_hadamard_mask(msg.dense(), bases);
  for (std::size_t idx = 0; idx < probs.size(); ++idx) probs[idx] = std::norm(rotated.amplitudes()[idx]);
  return probs;
}

QuantumMessage densify(const QuantumMessage& msg, std::size_t dense_cap) {
  if (!msg.is_symbolic()) return msg;
  const auto& qs = msg.qubits();
  require_cap(qs.size(), dense_cap);
  Bits x(qs.size());
  BasisString theta(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) {
    x[i] = qs[i].bit;
    theta[i] = qs[i].basis;
  }
  return QuantumMessage(apply_hadamard_mask(DenseState::basis_state(x), theta));
}

DenseState epr_pairs(std::size_t pairs, std::size_t dense_cap) {
  require_cap(2 * pairs, dense_cap);
  const std::size_t n = 2 * pairs;
  std::vector<Amplitude> amps(std::size_t{1} << n, 0.0);
  const double a = std::pow(kInvSqrt2, static_cast<double>(pairs));
  // Basis states where each (P_i, V_i) pair is 00 or 11.
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs); ++mask) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < pairs; ++i) {
      if ((mask >> (pairs - 1 - i)) & 1u) {
        idx |= std::size_t{1} << bit_of(2 * i, n);
        idx |= std::size_t{1} << bit_of(2 * i + 1, n);
      }
    }
    amps[idx] = a;
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < pairs; ++i) {
    labels[2 * i] = "P" + std::to_string(i + 1);
    labels[2 * i + 1] = "V" + std::to_string(i + 1);
  }
  return DenseState(std::move(amps), std::move(labels));
}

DenseState apply_hadamard_mask(const DenseState& state, std::span<const Basis> mask) {
  const std::size_t n = state.qubits();
  if (mask.size() != n) throw std::invalid_argument("apply_hadamard_mask: mask length != qubit count");
  std::vector<Amplitude> amps = state.amplitudes();
  for (std::size_t i = 0; i < n; ++i) {
    if (mask[i] == Basis::kHadamard) hadamard_in_place(amps, i, n);
  }
  return DenseState(std::move(amps), state.labels());
}

Amplitude inner_product(const DenseState& a, const DenseState& b) {
  if (a.qubits() != b.qubits()) throw std::invalid_argument("inner_product: qubit count mismatch");
  Amplitude s = 0.0;
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) s += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  return s;
}

double fidelity(const DenseState& a, const DenseState& b) { return std::norm(inner_product(a, b)); }

ConditionalState condition_on_outcome(const DenseState& state, std::span<const std::size_t> which,
                                      std::span<const Basis> bases, std::span<const std::uint8_t> outcome) {
  const std::size_t n = state.qubits();
  if (which.size() != bases.size() || which.size() != outcome.size()) {
    throw std::invalid_argument("condition_on_outcome: argument lengths differ");
  }
  std::vector<bool> measured(n, false);
  for (std::size_t q : which) {
    if (q >= n || measured[q]) throw std::invalid_argument("condition_on_outcome: bad qubit index");
    measured[q] = true;
  }
  std::vector<Amplitude> amps = state.amplitudes();
  for (std::size_t k = 0; k < which.size(); ++k) {
    if (bases[k] == Basis::kHadamard) hadamard_in_place(amps, which[k], n);
  }
  std::vector<std::size_t> keep;
  std::vector<std::string> labels;
  for (std::size_t q = 0; q < n; ++q) {
    if (!measured[q]) {
      keep.push_back(q);
      labels.push_back(state.labels()[q]);
    }
  }
  const std::size_t m = keep.size();
  std::vector<Amplitude> rest(std::size_t{1} << m, 0.0);
  double prob = 0.0;
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    bool match = true;
    for (std::size_t k = 0; k < which.size() && match; ++k) {
      match = ((idx >> bit_of(which[k], n)) & 1u) == outcome[k];
    }
    if (!match) continue;
    std::size_t r = 0;
    for (std::size_t j = 0; j < m; ++j) r = (r << 1) | ((idx >> bit_of(keep[j], n)) & 1u);
    rest[r] = amps[idx];
    prob += std::norm(amps[idx]);
  }
  if (prob <= 1e-15) throw std::domain_error("condition_on_outcome: outcome has zero probability");
  const double scale = 1.0 / std::sqrt(prob);
  for (auto& a : rest) a *= scale;
  return ConditionalState{prob, DenseState(std::move(rest), std::move(labels))};
}

PartialMeasurement measure_qubits(const DenseState& state, std::span<const std::size_t> which,
                                  std::span<const Basis> bases, RandomSource& rng) {
  const std::size_t n = state.qubits();
  if (which.size() != bases.size()) throw std::invalid_argument("measure_qubits: basis count mismatch");
  std::vector<Amplitude> amps = state.amplitudes();
  PartialMeasurement pm{Bits(which.size()), state};
  for (std::size_t k = 0; k < which.size(); ++k) {
    const std::size_t q = which[k];
    if (q >= n) throw std::invalid_argument("measure_qubits: bad qubit index");
    const bool had = bases[k] == Basis::kHadamard;
    if (had) hadamard_in_place(amps, q, n);
    const std::size_t bit = std::size_t{1} << bit_of(q, n);
    double p[2] = {0.0, 0.0};
    for (std::size_t idx = 0; idx < amps.size(); ++idx) p[(idx & bit) ? 1 : 0] += std::norm(amps[idx]);
    const std::size_t out = rng.weighted(std::span<const double>(p, 2));
    const double scale = 1.0 / std::sqrt(p[out]);
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
      if (((idx & bit) ? 1u : 0u) == out) {
        amps[idx] *= scale;
      } else {
        amps[idx] = 0.0;
      }
    }
    if (had) hadamard_in_place(amps, q, n);
    pm.outcomes[k] = static_cast<std::uint8_t>(out);
  }
  // Renormalize away accumulated rounding before re-validating.
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  for (auto& a : amps) a /= std::sqrt(s);
  pm.post = DenseState(std::move(amps), state.labels());
  return pm;
}

}  // namespace bqsm
