#include "bqsm/nip.hpp"

#include <stdexcept>

namespace bqsm {

namespace {

std::size_t ot_size(const XiProtocol& proto, std::size_t requested) {
  return requested ? requested : default_ot_qubits(proto.response_len());
}

}  // namespace

NipMessage nip_prove(const XiProtocol& proto, XiProver& prover, const NipOptions& opts, RandomSource& rng) {
  if (proto.challenge_len() != 1) throw std::invalid_argument("nip_prove: challenge length must be 1");
  const std::size_t ell = proto.response_len();
  const std::size_t n = ot_size(proto, opts.ot_qubits);
  NipMessage msg;
  msg.randomized = opts.randomize_order;
  msg.reps.reserve(opts.k);
  for (std::size_t i = 0; i < opts.k; ++i) {
    FirstMessage first = prover.first_message(rng);
    const Bits r0 = prover.respond(Bits{0});
    const Bits r1 = prover.respond(Bits{1});
    if (r0.size() != ell || r1.size() != ell) throw std::invalid_argument("nip_prove: response length mismatch");
    NipRepetition rep;
    rep.swap = opts.randomize_order && rng.bit() ? 1 : 0;
    auto sent = rep.swap ? ot_send(r1, r0, n, rng) : ot_send(r0, r1, n, rng);
    rep.phi = std::move(first.quantum);
    rep.a = std::move(first.classical);
    rep.ot_qubits = std::move(sent.qubits);
    rep.ot = std::move(sent.classical);
    msg.reps.push_back(std::move(rep));
  }
  return msg;
}

NipVerification nip_verify_detailed(const XiProtocol& proto, const NipMessage& msg, RandomSource& rng) {
  NipVerification out;
  out.views.resize(msg.reps.size());
  for (std::size_t i = 0; i < msg.reps.size(); ++i) {
    const auto& rep = msg.reps[i];
    auto& v = out.views[i];
    v.record = proto.receive(rep.phi, rng);
    v.c = rng.bit() ? 1 : 0;
    v.x_prime = ot_receive_measure(v.c, rep.ot_qubits, rng);
  }
  // Memory bound applies here; only classical data crosses it.
  out.accepted = !msg.reps.empty();
  for (std::size_t i = 0; i < msg.reps.size(); ++i) {
    const auto& rep = msg.reps[i];
    auto& v = out.views[i];
    v.a = rep.a;
    v.ot = rep.ot;
    v.swap = rep.swap;
    auto r = ot_receive_classical(v.c, v.x_prime, rep.ot);
    if (r && r->size() == proto.response_len()) {
      v.r = std::move(*r);
      v.accepted = proto.verify(v.record, v.a, Bits{v.challenge()}, v.r);
    }
    out.accepted = out.accepted && v.accepted;
  }
  return out;
}

bool nip_verify(const XiProtocol& proto, const NipMessage& msg, RandomSource& rng) {
  return nip_verify_detailed(proto, msg, rng).accepted;
}

std::vector<NipRepView> nip_hvzk_simulate(const XiProtocol& proto, std::size_t k, std::size_t ot_qubits,
                                          RandomSource& rng) {
  const std::size_t ell = proto.response_len();
  const std::size_t n = ot_size(proto, ot_qubits);
  std::vector<NipRepView> views(k);
  for (auto& v : views) {
    const Bits x = random_bits(n, rng);
    const BasisString theta = random_bases(n, rng);
    v.c = rng.bit() ? 1 : 0;
    v.x_prime = measure_bb84(prepare_bb84(x, theta), constant_bases(n, basis_from_bit(v.c)), rng).outcome_bits;
    SimulatedRun run = proto.simulate(Bits{v.c}, rng);
    v.record = proto.receive(run.first.quantum, rng);
    v.a = std::move(run.first.classical);
    v.r = std::move(run.response);
    v.ot.theta = theta;
    v.ot.h0 = ToeplitzHash::sample(n, ell, rng);
    v.ot.h1 = ToeplitzHash::sample(n, ell, rng);
    const auto& hc = v.c ? v.ot.h1 : v.ot.h0;
    Bits mc = xor_bits(v.r, hc.apply(padded_substring(v.x_prime, theta, v.c)));
    Bits other = random_bits(ell, rng);
    v.ot.m0 = v.c ? std::move(other) : std::move(mc);
    v.ot.m1 = v.c ? std::move(mc) : std::move(other);
    v.accepted = proto.verify(v.record, v.a, Bits{v.c}, v.r);
  }
  return views;
}

}  // namespace bqsm
