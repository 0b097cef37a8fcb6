#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bqsm/errors.hpp"
#include "bqsm/quantum.hpp"

using namespace bqsm;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool close(Amplitude a, Amplitude b) { return std::abs(a - b) < 1e-12; }

}  // namespace

TEST_CASE("prepare_bb84 builds symbolic qubits") {
  auto msg = prepare_bb84(bits_from_string("101"), bases_from_string("+++"));
  REQUIRE(msg.is_symbolic());
  REQUIRE(msg.length() == 3);
  CHECK(msg.qubits()[0] == SymbolicQubit{1, Basis::kComputational});
  CHECK(msg.qubits()[1] == SymbolicQubit{0, Basis::kComputational});
  CHECK(msg.qubits()[2] == SymbolicQubit{1, Basis::kComputational});

  CHECK(prepare_bb84(Bits{}, BasisString{}).length() == 0);
  CHECK_THROWS_AS(prepare_bb84(bits_from_string("10"), bases_from_string("+")), std::invalid_argument);
}

TEST_CASE("densify matches hand-computed amplitudes") {
  const auto zero = densify(prepare_bb84(bits_from_string("0"), bases_from_string("+")));
  const auto& a = zero.dense().amplitudes();
  CHECK(close(a[0], 1.0));
  CHECK(close(a[1], 0.0));

  const auto plus = densify(prepare_bb84(bits_from_string("0"), bases_from_string("x")));
  const auto& h = plus.dense().amplitudes();
  CHECK(close(h[0], kInvSqrt2));
  CHECK(close(h[1], kInvSqrt2));

  // |1> (x) |0>_x = (|10> + |11>) / sqrt 2
  const auto pair = densify(prepare_bb84(bits_from_string("10"), bases_from_string("+x")));
  const auto& two = pair.dense().amplitudes();
  CHECK(close(two[0], 0.0));
  CHECK(close(two[1], 0.0));
  CHECK(close(two[2], kInvSqrt2));
  CHECK(close(two[3], kInvSqrt2));

  Bits big(kDefaultDenseCap + 1, 0);
  CHECK_THROWS_AS(densify(prepare_bb84(big, constant_bases(big.size(), Basis::kComputational))), CapacityError);
}

TEST_CASE("matched-basis measurement is deterministic") {
  Rng rng(3);
  auto msg = prepare_bb84(bits_from_string("101"), bases_from_string("+++"));
  for (int t = 0; t < 100; ++t) {
    auto rec = measure_bb84(msg, bases_from_string("+++"), rng);
    CHECK(to_string(rec.outcome_bits) == "101");
    auto again = measure_bb84(rec.collapsed, rec.bases_used, rng);
    CHECK(again.outcome_bits == rec.outcome_bits);
  }
}

TEST_CASE("conjugate-basis measurement is a fair coin") {
  Rng rng(4);
  auto msg = prepare_bb84(bits_from_string("1"), bases_from_string("x"));
  int ones = 0;
  for (int t = 0; t < 10000; ++t) ones += measure_bb84(msg, bases_from_string("+"), rng).outcome_bits[0];
  CHECK(ones / 10000.0 >= 0.47);
  CHECK(ones / 10000.0 <= 0.53);
}

TEST_CASE("symbolic and dense outcome distributions agree on 3 qubits") {
  for (std::uint64_t x = 0; x < 8; ++x) {
    for (std::uint64_t th = 0; th < 8; ++th) {
      auto msg = prepare_bb84(bits_from_uint(x, 3), bases_from_bits(bits_from_uint(th, 3)));
      auto dense = densify(msg);
      for (std::uint64_t b = 0; b < 8; ++b) {
        auto bases = bases_from_bits(bits_from_uint(b, 3));
        auto p = outcome_distribution(msg, bases);
        auto q = outcome_distribution(dense, bases);
        REQUIRE(p.size() == q.size());
        for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i] == doctest::Approx(q[i]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("dense measurement in the preparation basis reproduces x") {
  Rng rng(5);
  auto x = bits_from_string("0110");
  auto theta = bases_from_string("x+x+");
  auto dense = densify(prepare_bb84(x, theta));
  for (int t = 0; t < 50; ++t) CHECK(measure_bb84(dense, theta, rng).outcome_bits == x);
}

TEST_CASE("epr pairs") {
  const auto epr = epr_pairs(1);
  const auto& a = epr.amplitudes();
  CHECK(close(a[0], kInvSqrt2));
  CHECK(close(a[1], 0.0));
  CHECK(close(a[2], 0.0));
  CHECK(close(a[3], kInvSqrt2));
  CHECK_THROWS_AS(epr_pairs(kDefaultDenseCap / 2 + 1), CapacityError);

  Rng rng(6);
  QuantumMessage pair(epr_pairs(1));
  for (auto b : {Basis::kComputational, Basis::kHadamard}) {
    for (int t = 0; t < 200; ++t) {
      auto out = measure_bb84(pair, BasisString{b, b}, rng).outcome_bits;
      CHECK(out[0] == out[1]);
    }
  }
}

TEST_CASE("steering an EPR half prepares the other half") {
  const auto state = epr_pairs(2);
  const std::size_t p_half[] = {0, 2};
  for (std::uint64_t x = 0; x < 4; ++x) {
    for (std::uint64_t th = 0; th < 4; ++th) {
      auto xb = bits_from_uint(x, 2);
      auto theta = bases_from_bits(bits_from_uint(th, 2));
      auto cond = condition_on_outcome(state, p_half, theta, xb);
      CHECK(cond.probability == doctest::Approx(0.25));
      auto expected = densify(prepare_bb84(xb, theta)).dense();
      CHECK(fidelity(cond.remaining, expected) >= 1.0 - 1e-9);
    }
  }
}

TEST_CASE("hadamard masks") {
  auto zero = DenseState::basis_state(bits_from_string("00"));
  auto same = apply_hadamard_mask(zero, bases_from_string("++"));
  CHECK(fidelity(same, zero) == doctest::Approx(1.0));

  auto uniform = apply_hadamard_mask(zero, bases_from_string("xx"));
  for (const auto& amp : uniform.amplitudes()) CHECK(close(amp, 0.5));

  auto psi = densify(prepare_bb84(bits_from_string("101"), bases_from_string("x+x"))).dense();
  auto mask = bases_from_string("xx+");
  auto twice = apply_hadamard_mask(apply_hadamard_mask(psi, mask), mask);
  CHECK(twice.norm() == doctest::Approx(1.0).epsilon(1e-9));
  for (std::size_t i = 0; i < psi.amplitudes().size(); ++i) CHECK(close(twice.amplitudes()[i], psi.amplitudes()[i]));
}
