#include "bqsm/pi_ham.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bqsm {
namespace {

std::vector<SymbolicQubit> concat_symbolic(const std::vector<QuantumMessage>& parts) {
  std::vector<SymbolicQubit> out;
  for (const auto& p : parts) out.insert(out.end(), p.qubits().begin(), p.qubits().end());
  return out;
}

/// Receipt for one entry, cut out of the whole-message record.
WeakBcReceipt entry_receipt(const VerifierRecord& rec, std::size_t entry, std::size_t nq) {
  WeakBcReceipt r;
  const auto off = static_cast<std::ptrdiff_t>(entry * nq);
  r.theta.assign(rec.bases.begin() + off, rec.bases.begin() + off + static_cast<std::ptrdiff_t>(nq));
  r.x_prime.assign(rec.outcomes.begin() + off, rec.outcomes.begin() + off + static_cast<std::ptrdiff_t>(nq));
  return r;
}

std::vector<EntryOpening> cycle_entries(const Permutation& sigma, const HamCycle& cycle, std::size_t n,
                                        const std::vector<WeakBcOpening>& openings) {
  std::vector<EntryOpening> out;
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    const std::size_t r = sigma[cycle[t]];
    const std::size_t c = sigma[cycle[(t + 1) % cycle.size()]];
    out.push_back({r, c, openings[r * n + c]});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.row, a.col) < std::pair(b.row, b.col);
  });
  return out;
}

/// Matrix of the directed-then-symmetrized cycle order[0] -> order[1] -> ...
Bits cycle_matrix(const std::vector<std::size_t>& order) {
  const std::size_t n = order.size();
  Bits m(n * n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t u = order[t];
    const std::size_t v = order[(t + 1) % n];
    m[u * n + v] = 1;
    m[v * n + u] = 1;
  }
  return m;
}

}  // namespace

PiHam::PiHam(Graph g, std::size_t commit_qubits)
    : g_(std::move(g)), commit_qubits_(commit_qubits), index_bits_(index_width(g_.vertices())) {
  const std::size_t n = g_.vertices();
  if (n < 3) throw std::invalid_argument("PiHam: graph needs at least 3 vertices");
  if (commit_qubits_ == 0) throw std::invalid_argument("PiHam: commitments need at least one qubit");
  const std::size_t full = n * index_bits_ + n * n * (1 + commit_qubits_);
  const std::size_t cyc = n * (2 * index_bits_ + 1 + commit_qubits_);
  response_len_ = 16 + std::max(full, cyc);
}

VerifierRecord PiHam::receive(const QuantumMessage& phi, RandomSource& rng) const {
  auto r = weak_bc_receive(phi, rng);
  return {std::move(r.theta), std::move(r.x_prime)};
}

Bits PiHam::encode(const PiHamResponse& r) const {
  Bits payload;
  auto put = [&](std::uint64_t v, std::size_t w) {
    auto b = bits_from_uint(v, w);
    payload.insert(payload.end(), b.begin(), b.end());
  };
  if (r.challenge == 0) {
    for (auto s : r.sigma) put(s, index_bits_);
  }
  for (const auto& e : r.entries) {
    if (r.challenge == 1) {
      put(e.row, index_bits_);
      put(e.col, index_bits_);
    }
    payload.push_back(e.opening.b & 1u);
    if (e.opening.x.size() != commit_qubits_) throw std::invalid_argument("PiHam::encode: opening has wrong length");
    payload.insert(payload.end(), e.opening.x.begin(), e.opening.x.end());
  }
  return pad_with_length(payload, response_len_);
}

std::optional<PiHamResponse> PiHam::decode(std::uint8_t challenge, const Bits& response) const {
  Bits payload;
  if (response.size() != response_len_ || !unpad_with_length(response, payload)) return std::nullopt;
  const std::size_t n = g_.vertices();
  const std::size_t w = index_bits_;
  const std::size_t nq = commit_qubits_;
  std::size_t pos = 0;
  auto take = [&](std::size_t len) {
    auto v = uint_from_bits(std::span<const std::uint8_t>(payload).subspan(pos, len));
    pos += len;
    return v;
  };
  auto take_bits = [&](std::size_t len) {
    Bits b(payload.begin() + static_cast<std::ptrdiff_t>(pos), payload.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
    return b;
  };
  PiHamResponse r;
  r.challenge = challenge;
  if (challenge == 0) {
    if (payload.size() != n * w + n * n * (1 + nq)) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) r.sigma.push_back(take(w));
    for (std::size_t e = 0; e < n * n; ++e) {
      EntryOpening eo{e / n, e % n, {}};
      eo.opening.b = static_cast<std::uint8_t>(take(1));
      eo.opening.x = take_bits(nq);
      r.entries.push_back(std::move(eo));
    }
  } else if (challenge == 1) {
    if (payload.size() != n * (2 * w + 1 + nq)) return std::nullopt;
    for (std::size_t t = 0; t < n; ++t) {
      EntryOpening eo;
      eo.row = take(w);
      eo.col = take(w);
      eo.opening.b = static_cast<std::uint8_t>(take(1));
      eo.opening.x = take_bits(nq);
      r.entries.push_back(std::move(eo));
    }
  } else {
    return std::nullopt;
  }
  return r;
}

bool PiHam::verify(const VerifierRecord& record, const Bits&, const Bits& challenge, const Bits& response) const {
  if (challenge.size() != 1) return false;
  return pi_ham_verify(*this, record, challenge[0], response);
}

bool pi_ham_verify(const PiHam& pi, const VerifierRecord& record, std::uint8_t challenge, const Bits& response) {
  const std::size_t n = pi.graph().vertices();
  const std::size_t nq = pi.commit_qubits();
  if (record.bases.size() != pi.entry_count() * nq || record.outcomes.size() != record.bases.size()) return false;
  const auto decoded = pi.decode(challenge, response);
  if (!decoded) return false;
  if (challenge == 0) {
    if (!is_permutation(decoded->sigma, n)) return false;
    const Bits expected = pi.graph().permuted(decoded->sigma).adjacency();
    for (std::size_t e = 0; e < n * n; ++e) {
      const auto& op = decoded->entries[e].opening;
      if (op.b != expected[e]) return false;
      if (!weak_bc_verify(entry_receipt(record, e, nq), op)) return false;
    }
    return true;
  }
  // Challenge 1: n entries with value 1 whose row -> col map is one n-cycle.
  std::vector<std::size_t> succ(n, n);
  std::vector<bool> has_pred(n, false);
  for (const auto& e : decoded->entries) {
    if (e.row >= n || e.col >= n || e.row == e.col) return false;
    if (succ[e.row] != n || has_pred[e.col]) return false;
    succ[e.row] = e.col;
    has_pred[e.col] = true;
    if (e.opening.b != 1) return false;
    if (!weak_bc_verify(entry_receipt(record, e.row * n + e.col, nq), e.opening)) return false;
  }
  std::size_t v = 0;
  for (std::size_t steps = 1; steps <= n; ++steps) {
    v = succ[v];
    if (v == 0) return steps == n;
  }
  return false;
}

std::pair<QuantumMessage, std::vector<WeakBcOpening>> commit_matrix(const Bits& matrix, std::size_t commit_qubits,
                                                                    RandomSource& rng) {
  std::vector<QuantumMessage> parts;
  std::vector<WeakBcOpening> openings;
  parts.reserve(matrix.size());
  openings.reserve(matrix.size());
  for (auto bit : matrix) {
    auto [msg, op] = weak_bc_commit(bit, commit_qubits, rng);
    parts.push_back(std::move(msg));
    openings.push_back(std::move(op));
  }
  return {QuantumMessage(concat_symbolic(parts)), std::move(openings)};
}

PiHamCommitment pi_ham_first_with(const PiHam& pi, const HamCycle& w, const Permutation& sigma, RandomSource& rng) {
  if (!is_hamiltonian_cycle(pi.graph(), w)) throw std::invalid_argument("pi_ham_first: witness is not a Hamiltonian cycle");
  if (!is_permutation(sigma, pi.graph().vertices())) throw std::invalid_argument("pi_ham_first: bad permutation");
  auto [msg, openings] = commit_matrix(pi.graph().permuted(sigma).adjacency(), pi.commit_qubits(), rng);
  return {std::move(msg), PiHamState{sigma, std::move(openings), w}};
}

PiHamCommitment pi_ham_first(const PiHam& pi, const HamCycle& w, RandomSource& rng) {
  if (!is_hamiltonian_cycle(pi.graph(), w)) throw std::invalid_argument("pi_ham_first: witness is not a Hamiltonian cycle");
  const auto sigma = random_permutation(pi.graph().vertices(), rng);
  return pi_ham_first_with(pi, w, sigma, rng);
}

Bits pi_ham_respond(const PiHam& pi, const PiHamState& state, std::uint8_t challenge) {
  const std::size_t n = pi.graph().vertices();
  PiHamResponse r;
  r.challenge = challenge & 1u;
  if (r.challenge == 0) {
    r.sigma = state.sigma;
    for (std::size_t e = 0; e < n * n; ++e) r.entries.push_back({e / n, e % n, state.openings[e]});
  } else {
    r.entries = cycle_entries(state.sigma, state.cycle, n, state.openings);
  }
  return pi.encode(r);
}

SimulatedRun PiHam::simulate(const Bits& challenge, RandomSource& rng) const {
  const std::size_t n = g_.vertices();
  const std::uint8_t c = challenge.empty() ? 0 : challenge[0] & 1u;
  SimulatedRun run;
  PiHamResponse r;
  r.challenge = c;
  if (c == 0) {
    const auto sigma = random_permutation(n, rng);
    auto [msg, openings] = commit_matrix(g_.permuted(sigma).adjacency(), commit_qubits_, rng);
    run.first.quantum = std::move(msg);
    r.sigma = sigma;
    for (std::size_t e = 0; e < n * n; ++e) r.entries.push_back({e / n, e % n, openings[e]});
  } else {
    // A random Hamiltonian cycle on n vertices, committed as a matrix.
    const auto order = random_permutation(n, rng);
    auto [msg, openings] = commit_matrix(cycle_matrix(order), commit_qubits_, rng);
    run.first.quantum = std::move(msg);
    Permutation id(n);
    std::iota(id.begin(), id.end(), std::size_t{0});
    r.entries = cycle_entries(id, order, n, openings);
  }
  run.response = encode(r);
  return run;
}

PiHamProver::PiHamProver(const PiHam& pi, HamCycle w) : pi_(pi), w_(std::move(w)) {
  if (!is_hamiltonian_cycle(pi_.graph(), w_)) throw std::invalid_argument("PiHamProver: invalid witness");
}

FirstMessage PiHamProver::first_message(RandomSource& rng) {
  auto c = pi_ham_first(pi_, w_, rng);
  state_ = std::move(c.state);
  return {std::move(c.message), {}};
}

Bits PiHamProver::respond(const Bits& challenge) {
  return pi_ham_respond(pi_, state_, challenge.empty() ? 0 : challenge[0]);
}

FirstMessage PiHamGuessingProver::first_message(RandomSource& rng) {
  const std::size_t n = pi_.graph().vertices();
  guess_ = rng.bit() ? 1 : 0;
  if (guess_ == 0) {
    sigma_ = random_permutation(n, rng);
    matrix_ = pi_.graph().permuted(sigma_).adjacency();
  } else {
    matrix_ = cycle_matrix(random_permutation(n, rng));
  }
  auto [msg, openings] = commit_matrix(matrix_, pi_.commit_qubits(), rng);
  openings_ = std::move(openings);
  return {std::move(msg), {}};
}

Bits PiHamGuessingProver::respond(const Bits& challenge) {
  const std::size_t n = pi_.graph().vertices();
  const std::uint8_t c = challenge.empty() ? 0 : challenge[0] & 1u;
  PiHamResponse r;
  r.challenge = c;
  if (c == 0) {
    Permutation sigma = sigma_;
    if (guess_ == 1) {
      // Permutation whose image of the graph differs from the committed matrix in the fewest entries.
      Permutation p(n);
      std::iota(p.begin(), p.end(), std::size_t{0});
      std::size_t best = n * n + 1;
      do {
        const Bits m = pi_.graph().permuted(p).adjacency();
        std::size_t diff = 0;
        for (std::size_t e = 0; e < n * n; ++e) diff += m[e] != matrix_[e];
        if (diff < best) {
          best = diff;
          sigma = p;
        }
      } while (std::next_permutation(p.begin(), p.end()));
    }
    const Bits target = pi_.graph().permuted(sigma).adjacency();
    r.sigma = sigma;
    for (std::size_t e = 0; e < n * n; ++e) {
      WeakBcOpening op = openings_[e];
      op.b = target[e];  // a lie wherever target differs from the commitment
      r.entries.push_back({e / n, e % n, op});
    }
  } else {
    // Directed cycle through the committed matrix with the most 1-entries.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::size_t> best_order = order;
    std::size_t best = 0;
    do {
      std::size_t ones = 0;
      for (std::size_t t = 0; t < n; ++t) ones += matrix_[order[t] * n + order[(t + 1) % n]];
      if (ones > best) {
        best = ones;
        best_order = order;
      }
    } while (std::next_permutation(order.begin() + 1, order.end()));
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t u = best_order[t];
      const std::size_t v = best_order[(t + 1) % n];
      WeakBcOpening op = openings_[u * n + v];
      op.b = 1;
      r.entries.push_back({u, v, op});
    }
    std::sort(r.entries.begin(), r.entries.end(), [](const auto& a, const auto& b) {
      return std::pair(a.row, a.col) < std::pair(b.row, b.col);
    });
  }
  return pi_.encode(r);
}

}  // namespace bqsm
