#include "bqsm/rr.hpp"

#include <stdexcept>
#include <string>

#include "bqsm/errors.hpp"

namespace bqsm {

std::pair<RrVerifierMessage, RrVerifierSecrets> rr_verifier_message(const InteractiveProof& pi, std::size_t n,
                                                                    RandomSource& rng) {
  const std::size_t k = pi.rounds();
  const std::size_t ell = pi.message_len();
  RrVerifierMessage msg;
  RrVerifierSecrets sec;
  msg.registers.resize(k);
  sec.receipts.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < ell; ++j) {
      auto [qubits, receipt] = dfss_prepare(n, rng);
      msg.registers[i].push_back(std::move(qubits));
      sec.receipts[i].push_back(std::move(receipt));
    }
    msg.challenges.push_back(pi.sample_challenge(rng));
  }
  sec.challenges = msg.challenges;
  return {std::move(msg), std::move(sec)};
}

std::span<const QuantumMessage> RrChannel::take_register() {
  if (finished()) throw ProtocolViolation("register requested after the last round");
  if (phase_ != Phase::kRegister) {
    throw ProtocolViolation("register " + std::to_string(round_ + 1) + " requested twice");
  }
  phase_ = Phase::kHolding;
  log_.push_back({Event::kRegister, round_, 0});
  return msg_.registers[round_];
}

void RrChannel::memory_bound(std::size_t retained_qubits) {
  if (phase_ != Phase::kHolding) {
    throw ProtocolViolation("memory bound " + std::to_string(round_ + 1) + " reached before its register");
  }
  log_.push_back({Event::kBound, round_, retained_qubits});
  if (retained_qubits > q_) {
    throw BoundViolation("retained " + std::to_string(retained_qubits) + " qubits with bound " + std::to_string(q_));
  }
  phase_ = Phase::kChallenge;
}

const Bits& RrChannel::read_challenge() {
  if (phase_ != Phase::kChallenge) {
    throw ProtocolViolation("challenge " + std::to_string(round_ + 1) + " read before committing on its register");
  }
  log_.push_back({Event::kChallenge, round_, 0});
  phase_ = Phase::kRegister;
  return msg_.challenges[round_++];
}

namespace {

RrProverMessage reveal(const InteractiveProof& pi, const std::vector<Bits>& a, const std::vector<std::vector<Bits>>& z,
                       const std::vector<Bits>& c, Bits final_message) {
  RrProverMessage out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto pos = pi.revealed_positions(i, c);
    out.revealed.push_back(select_positions(a[i], pos));
    std::vector<Bits> zi;
    zi.reserve(pos.size());
    for (auto p : pos) zi.push_back(z[i][p]);
    out.openings.push_back(std::move(zi));
  }
  out.final_message = std::move(final_message);
  return out;
}

}  // namespace

RrProverMessage rr_prover_respond(const InteractiveProof& pi, InteractiveProver& prover, RrChannel& channel,
                                  RandomSource& rng) {
  const std::size_t k = pi.rounds();
  std::vector<Bits> a, c;
  std::vector<std::vector<Bits>> z;
  for (std::size_t i = 0; i < k; ++i) {
    a.push_back(prover.next(c));
    if (a.back().size() != pi.message_len()) throw std::invalid_argument("rr_prover_respond: message length mismatch");
    const auto regs = channel.take_register();
    z.push_back(dfss_string_commit(a.back(), regs, rng));
    channel.memory_bound(0);
    c.push_back(channel.read_challenge());
  }
  Bits final_message = prover.next(c);
  return reveal(pi, a, z, c, std::move(final_message));
}

RrProverMessage rr_prover_respond(const InteractiveProof& pi, InteractiveProver& prover, const RrVerifierMessage& vmsg,
                                  RandomSource& rng) {
  RrChannel channel(vmsg);
  return rr_prover_respond(pi, prover, channel, rng);
}

bool rr_verify(const InteractiveProof& pi, const RrVerifierSecrets& secrets, const RrProverMessage& pmsg) {
  const std::size_t k = pi.rounds();
  if (secrets.receipts.size() != k || secrets.challenges.size() != k) return false;
  if (pmsg.revealed.size() != k || pmsg.openings.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const auto pos = pi.revealed_positions(i, secrets.challenges);
    if (pmsg.revealed[i].size() != pos.size() || pmsg.openings[i].size() != pos.size()) return false;
    std::vector<DfssReceiverReceipt> receipts;
    receipts.reserve(pos.size());
    for (auto p : pos) {
      if (p >= secrets.receipts[i].size()) return false;
      receipts.push_back(secrets.receipts[i][p]);
    }
    if (!dfss_string_verify(receipts, pmsg.revealed[i], pmsg.openings[i])) return false;
  }
  return pi.verify(pmsg.revealed, pmsg.final_message, secrets.challenges);
}

RrProverMessage rr_zk_simulate(const InteractiveProof& pi, const RrVerifierMessage& vmsg, RandomSource& rng) {
  const std::size_t k = pi.rounds();
  if (vmsg.registers.size() != k || vmsg.challenges.size() != k) {
    throw std::invalid_argument("rr_zk_simulate: verifier message has the wrong number of rounds");
  }
  std::vector<Bits> sim = pi.simulate(vmsg.challenges, rng);
  if (sim.size() != k + 1) throw std::logic_error("rr_zk_simulate: simulator returned the wrong number of messages");
  std::vector<Bits> a(sim.begin(), sim.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<std::vector<Bits>> z;
  for (std::size_t i = 0; i < k; ++i) z.push_back(dfss_string_commit(a[i], vmsg.registers[i], rng));
  return reveal(pi, a, z, vmsg.challenges, std::move(sim.back()));
}

double rr_soundness_bound(double eps, std::size_t k, double delta) {
  return eps + static_cast<double>(k) * static_cast<double>(k) * delta;
}

}  // namespace bqsm
