#include "bqsm/toy_sigma.hpp"

namespace bqsm {

VerifierRecord ToySigma::receive(const QuantumMessage& phi, RandomSource& rng) const {
  auto rec = measure_bb84(phi, constant_bases(phi.length(), Basis::kComputational), rng);
  return {std::move(rec.bases_used), std::move(rec.outcome_bits)};
}

bool ToySigma::verify(const VerifierRecord&, const Bits& a, const Bits& challenge, const Bits& response) const {
  if (a.size() != 1 || challenge.size() != 1 || response.size() != 1) return false;
  const std::uint8_t expected = challenge[0] ? (a[0] ^ y_) : a[0];
  return response[0] == expected;
}

SimulatedRun ToySigma::simulate(const Bits& challenge, RandomSource& rng) const {
  const std::uint8_t r = rng.bit() ? 1 : 0;
  const std::uint8_t c = challenge.empty() ? 0 : challenge[0] & 1u;
  SimulatedRun run;
  run.first.classical = {static_cast<std::uint8_t>(c ? r ^ y_ : r)};
  run.response = {r};
  return run;
}

FirstMessage ToySigmaProver::first_message(RandomSource& rng) {
  u_ = rng.bit() ? 1 : 0;
  FirstMessage m;
  m.classical = {u_};
  return m;
}

Bits ToySigmaProver::respond(const Bits& challenge) {
  const std::uint8_t c = challenge.empty() ? 0 : challenge[0] & 1u;
  return {static_cast<std::uint8_t>(c ? u_ ^ w_ : u_)};
}

}  // namespace bqsm
