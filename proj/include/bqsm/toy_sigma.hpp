#pragma once

#include "bqsm/protocol.hpp"

namespace bqsm {

/// One-bit Sigma-protocol used where exact enumeration needs a tiny response.
///
/// Statement y, witness w = y. First message a = u for a random bit u;
/// response u on challenge 0 and u xor w on challenge 1; the verifier checks
/// r = a, respectively r = a xor y. Perfect HVZK: the simulator draws r and
/// sets a = r or r xor y.
class ToySigma final : public XiProtocol {
 public:
  explicit ToySigma(std::uint8_t y) : y_(y & 1u) {}

  std::string name() const override { return "toy-sigma"; }
  std::size_t challenge_len() const override { return 1; }
  std::size_t response_len() const override { return 1; }

  VerifierRecord receive(const QuantumMessage& phi, RandomSource& rng) const override;
  bool verify(const VerifierRecord& record, const Bits& a, const Bits& challenge, const Bits& response) const override;
  SimulatedRun simulate(const Bits& challenge, RandomSource& rng) const override;

  std::uint8_t statement() const { return y_; }

 private:
  std::uint8_t y_;
};

class ToySigmaProver final : public XiProver {
 public:
  explicit ToySigmaProver(std::uint8_t w) : w_(w & 1u) {}
  FirstMessage first_message(RandomSource& rng) override;
  Bits respond(const Bits& challenge) override;

 private:
  std::uint8_t w_;
  std::uint8_t u_ = 0;
};

}  // namespace bqsm
