#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bqsm/adversary.hpp"
#include "bqsm/codes.hpp"
#include "bqsm/commitments.hpp"
#include "bqsm/errors.hpp"
#include "bqsm/ot.hpp"

using namespace bqsm;

TEST_CASE("dfss commitment") {
  Rng rng(21);
  for (int t = 0; t < 1000; ++t) {
    auto [msg, receipt] = dfss_prepare(8, rng);
    const std::uint8_t b = rng.bit();
    CHECK(dfss_verify(receipt, {b, dfss_commit(b, msg, rng)}));
  }

  auto x = bits_from_string("0110");
  auto theta = constant_bases(4, Basis::kHadamard);
  CHECK(dfss_commit(1, prepare_bb84(x, theta), rng) == x);

  DfssReceiverReceipt receipt{x, bases_from_string("x+x+")};
  Bits forged = x;
  forged[0] ^= 1;
  CHECK_FALSE(dfss_verify(receipt, {1, forged}));
  CHECK(dfss_verify(receipt, {0, forged}));
  CHECK_FALSE(dfss_verify(receipt, {1, bits_from_string("011")}));
}

TEST_CASE("dfss opening the other bit succeeds with 2^-(checked positions)") {
  Rng rng(22);
  auto x = bits_from_string("10110010");
  auto theta = bases_from_string("x+xx+x++");  // four positions with theta = 1
  DfssReceiverReceipt receipt{x, theta};
  const auto msg = prepare_bb84(x, theta);
  const std::size_t trials = 40000;
  std::size_t ok = 0;
  for (std::size_t t = 0; t < trials; ++t) ok += dfss_verify(receipt, {1, dfss_commit(0, msg, rng)});
  const double p = 1.0 / 16.0;
  CHECK(std::abs(static_cast<double>(ok) / trials - p) <= 3 * std::sqrt(p * (1 - p) / trials));
}

TEST_CASE("weak commitment") {
  Rng rng(23);
  for (int t = 0; t < 500; ++t) {
    const std::uint8_t b = rng.bit();
    auto [msg, opening] = weak_bc_commit(b, 6, rng);
    CHECK(opening.b == b);
    CHECK(weak_bc_verify(weak_bc_receive(msg, rng), opening));
  }
  auto [msg, opening] = weak_bc_commit(0, 5, rng);
  for (const auto& qb : msg.qubits()) CHECK(qb.basis == Basis::kComputational);
  CHECK(measure_bb84(msg, constant_bases(5, Basis::kComputational), rng).outcome_bits == opening.x);
}

TEST_CASE("weak commitment hides: both mixtures are maximally mixed") {
  const std::size_t n = 3, dim = 1u << n;
  for (std::uint8_t b = 0; b < 2; ++b) {
    std::vector<Amplitude> rho(dim * dim, 0.0);
    for (std::uint64_t x = 0; x < dim; ++x) {
      auto psi = densify(prepare_bb84(bits_from_uint(x, n), constant_bases(n, basis_from_bit(b)))).dense();
      const auto& a = psi.amplitudes();
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) rho[i * dim + j] += a[i] * std::conj(a[j]) / static_cast<double>(dim);
    }
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        CHECK(std::abs(rho[i * dim + j] - (i == j ? 1.0 / dim : 0.0)) < 1e-9);
  }
}

TEST_CASE("codes and code bases") {
  CHECK(GeneratorMatrix::repetition(3).d() == 3);
  CHECK(GeneratorMatrix::hamming7_4().d() == 3);
  CHECK(GeneratorMatrix::extended_hamming8_4().d() == 4);
  CHECK(GeneratorMatrix::bch15_7().d() == 5);
  CHECK(GeneratorMatrix::bch15_5().d() == 7);
  CHECK(GeneratorMatrix::by_name("rep5").N() == 5);
  CHECK_THROWS(GeneratorMatrix::by_name("nope"));

  const auto rep = GeneratorMatrix::repetition(3);
  CHECK(to_string(code_bases(rep, bits_from_string("1"))) == "xxx");
  CHECK(to_string(code_bases(rep, bits_from_string("0"))) == "+++");

  const auto g = GeneratorMatrix::hamming7_4();
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      auto ab = bits_from_uint(a, 4), bb = bits_from_uint(b, 4);
      CHECK(bits_from_bases(code_bases(g, xor_bits(ab, bb))) ==
            xor_bits(bits_from_bases(code_bases(g, ab)), bits_from_bases(code_bases(g, bb))));
    }
  }
}

TEST_CASE("code basis overlap") {
  auto rep = basis_overlap(GeneratorMatrix::repetition(3));
  CHECK(rep.formula == doctest::Approx(std::pow(2.0, -1.5)));
  REQUIRE(rep.dense.has_value());
  CHECK(*rep.dense == doctest::Approx(std::pow(2.0, -1.5)));

  auto id = basis_overlap(GeneratorMatrix::identity(2));
  REQUIRE(id.dense.has_value());
  CHECK(*id.dense == doctest::Approx(std::sqrt(0.5)));

  auto ham = basis_overlap(GeneratorMatrix::hamming7_4());
  REQUIRE(ham.dense.has_value());
  CHECK(*ham.dense <= ham.formula + 1e-12);
}

TEST_CASE("code-basis string commitment") {
  Rng rng(24);
  const auto g = GeneratorMatrix::extended_hamming8_4();
  for (int t = 0; t < 200; ++t) {
    auto [msg, receipt] = abo_prepare(g, rng);
    auto a = random_bits(g.n(), rng);
    CHECK(abo_verify(g, receipt, {a, abo_commit(g, a, msg, rng)}));
  }
}

TEST_CASE("ot bound values") {
  CHECK(ot_security_bound(64, 1, 10, 1) == doctest::Approx(0.03125));
  CHECK(ot_security_bound(64, 1, 10, 4) == doctest::Approx(0.125));
  CHECK(ot_security_bound(64, 1, 10, 0) == 0.0);
  CHECK(default_ot_qubits(8, 0) == 112);
  CHECK(default_ot_qubits(1, 0) == 84);
  CHECK(default_ot_qubits(0, 0) == 80);
}

TEST_CASE("padded substring") {
  auto x = bits_from_string("101100");
  auto theta = bases_from_string("+x+xx+");
  CHECK(to_string(padded_substring(x, theta, 0)) == "110000");
  CHECK(to_string(padded_substring(x, theta, 1)) == "010000");
}

TEST_CASE("ot is perfectly correct") {
  Rng rng(25);
  for (std::uint8_t s0 = 0; s0 < 2; ++s0) {
    for (std::uint8_t s1 = 0; s1 < 2; ++s1) {
      for (std::uint8_t c = 0; c < 2; ++c) {
        for (int t = 0; t < 50; ++t) {
          auto sent = ot_send(Bits{s0}, Bits{s1}, 64, rng);
          auto out = ot_receive(c, sent.qubits, sent.classical, rng);
          REQUIRE(out.has_value());
          CHECK((*out)[0] == (c ? s1 : s0));
        }
      }
    }
  }
  CHECK_THROWS_AS(ot_send(Bits{0, 1}, Bits{1, 1}, 7, rng), std::invalid_argument);
}

TEST_CASE("parallel ot and the classical encoding") {
  Rng rng(26);
  std::vector<std::pair<Bits, Bits>> secrets;
  Bits choices;
  for (int i = 0; i < 8; ++i) {
    secrets.emplace_back(random_bits(4, rng), random_bits(4, rng));
    choices.push_back(rng.bit());
  }
  auto sent = ot_parallel_send(secrets, 64, rng);
  std::vector<QuantumMessage> qs;
  std::vector<OtClassicalPart> cs;
  for (const auto& s : sent) {
    qs.push_back(s.qubits);
    cs.push_back(decode_ot_classical(encode_ot_classical(s.classical)));
    CHECK(cs.back() == s.classical);
  }
  auto out = ot_parallel_receive(choices, qs, cs, rng);
  for (std::size_t i = 0; i < out.size(); ++i) {
    REQUIRE(out[i].has_value());
    CHECK(*out[i] == (choices[i] ? secrets[i].second : secrets[i].first));
  }
  auto bytes = encode_ot_classical(sent[0].classical);
  bytes.resize(bytes.size() / 2);
  CHECK_THROWS(decode_ot_classical(bytes));
}

TEST_CASE("memory bound enforcement") {
  RetainedState classical_only{bits_from_string("1011"), std::nullopt};
  CHECK_NOTHROW(enforce_bound(classical_only, 0));

  RetainedState two{{}, epr_pairs(1)};
  CHECK_THROWS_AS(enforce_bound(two, 1), BoundViolation);

  RetainedState one{{}, DenseState::basis_state(bits_from_string("1"))};
  CHECK_NOTHROW(enforce_bound(one, 1));
}

TEST_CASE("sum-binding oracle") {
  auto exact = weak_bc_sum_binding_oracle(4, 0, 0b0101, 0b1100);
  CHECK(exact.norm == doctest::Approx(0.25));

  for (std::uint64_t x0 = 0; x0 < 16; x0 += 5) {
    for (std::uint64_t x1 = 0; x1 < 16; x1 += 3) {
      auto fast = weak_bc_sum_binding_oracle(4, 1, x0, x1);
      auto full = weak_bc_sum_binding_oracle(4, 1, x0, x1, true);
      CHECK(fast.norm == doctest::Approx(full.norm).epsilon(1e-9));
    }
  }

  for (std::uint64_t x0 = 0; x0 < 64; ++x0) {
    for (std::uint64_t x1 = 0; x1 < 64; x1 += 7) {
      auto r = weak_bc_sum_binding_oracle(6, 1, x0, x1);
      CHECK(r.lhs() <= r.chain_bound + 1e-9);
    }
  }

  auto degenerate = weak_bc_sum_binding_oracle(4, 2, 0, 0);
  CHECK(degenerate.vacuous);
}

TEST_CASE("dfss binding game strategies") {
  Rng rng(27);
  MeasureAllCommitter honest(Basis::kComputational);
  auto r = dfss_binding_game(honest, 8, 0, 20000, rng);
  CHECK(r.arm("p0").rate() == 1.0);
  // Opening 1 succeeds iff every Hadamard-prepared position matches: E[2^-#] = (3/4)^8.
  const double p1 = std::pow(0.75, 8);
  CHECK(std::abs(r.arm("p1").rate() - p1) <= 3 * std::sqrt(p1 * (1 - p1) / r.arm("p1").trials));

  StoreEverythingCommitter store;
  auto broken = dfss_binding_game(store, 6, 6, 200, rng);
  CHECK(broken.arm("p0").rate() == 1.0);
  CHECK(broken.arm("p1").rate() == 1.0);
  CHECK(broken.broken);
  auto capped = dfss_binding_game(store, 6, 0, 10, rng);
  CHECK(capped.invalidated);
}
