#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bqsm/errors.hpp"
#include "bqsm/gf2m.hpp"
#include "bqsm/polynomial.hpp"
#include "bqsm/rr.hpp"
#include "bqsm/sumcheck.hpp"
#include "bqsm/sumcheck_proof.hpp"

using namespace bqsm;

namespace {

// Schoolbook carry-less product, then long division by the modulus.
std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b, std::uint64_t poly, unsigned m) {
  unsigned __int128 prod = 0;
  for (unsigned i = 0; i < 64; ++i)
    if ((b >> i) & 1) prod ^= static_cast<unsigned __int128>(a) << i;
  for (int i = 127; i >= static_cast<int>(m); --i)
    if ((prod >> i) & 1) prod ^= static_cast<unsigned __int128>(poly) << (i - m);
  return static_cast<std::uint64_t>(prod);
}

MultivariatePolynomial x1x2(const GF2m& f) {
  MultivariatePolynomial p(f, 2);
  p.add_term({1, 1}, 1);
  return p;
}

}  // namespace

TEST_CASE("field arithmetic agrees with carry-less multiplication") {
  Rng rng(31);
  for (unsigned m : {8u, 13u, 16u, 32u, 61u}) {
    GF2m f(m);
    CHECK(is_irreducible(f.modulus(), m));
    for (int t = 0; t < 300; ++t) {
      auto a = f.random(rng), b = f.random(rng);
      CHECK(f.mul(a, b) == slow_mul(a, b, f.modulus(), m));
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
  }
  CHECK_FALSE(is_irreducible(0x101, 8));  // x^8 + 1 = (x + 1)^8
  CHECK(is_irreducible(0x11b, 8));
}

TEST_CASE("irreducible table") {
  for (unsigned m = kMinFieldBits; m <= kMaxFieldBits; ++m) CHECK(is_irreducible(irreducible_poly(m), m));
}

TEST_CASE("interpolation round trip") {
  Rng rng(32);
  GF2m f(16);
  for (std::size_t d = 0; d < 5; ++d) {
    Univariate g;
    for (std::size_t i = 0; i <= d; ++i) g.coeffs.push_back(f.random(rng));
    std::vector<Elem> vals;
    for (Elem x : interpolation_nodes(d + 1)) vals.push_back(g.eval(f, x));
    auto back = interpolate(f, vals);
    back.coeffs.resize(g.coeffs.size(), 0);
    CHECK(back == g);
  }
}

TEST_CASE("polynomial text format round trip") {
  Rng rng(33);
  GF2m f(12);
  auto p = random_polynomial(f, 3, 2, 0.5, rng);
  CHECK(MultivariatePolynomial::parse(p.serialize()) == p);
  auto q = MultivariatePolynomial::parse("# comment\nfield 8\nvars 2\n1 1 1\n");
  CHECK(q == x1x2(GF2m(8)));
  CHECK_THROWS(MultivariatePolynomial::parse("field 8\nvars 2\n1 zz\n"));
}

TEST_CASE("sum-check claims over GF(2^8)") {
  GF2m f(8);
  CHECK(sumcheck_claim(x1x2(f)) == 1);
  CHECK(sumcheck_claim(MultivariatePolynomial(f, 3)) == 0);
  MultivariatePolynomial sum(f, 2);
  sum.add_term({1, 0}, 1);
  sum.add_term({0, 1}, 1);
  CHECK(sumcheck_claim(sum) == 0);
  MultivariatePolynomial constant(f, 2);
  constant.add_term({0, 0}, 0x57);
  CHECK(sumcheck_claim(constant) == 0);
  CHECK(sumcheck_prover_round(constant, {}, 0).coeffs == std::vector<Elem>{0});
}

TEST_CASE("sum-check prover rounds for x1 x2") {
  GF2m f(8);
  auto p = x1x2(f);
  CHECK(sumcheck_prover_round(p, {}, 1).coeffs == std::vector<Elem>{0, 1});
  const Elem r1 = 0x3c;
  const Elem fixed[] = {r1};
  CHECK(sumcheck_prover_round(p, fixed, 1).coeffs == std::vector<Elem>{0, r1});
}

TEST_CASE("sum-check verifier") {
  Rng rng(34);
  GF2m f(16);
  for (int t = 0; t < 50; ++t) {
    SumcheckInstance inst{random_polynomial(f, 4, 2, 0.5, rng), 0, 2};
    inst.claim = sumcheck_claim(inst.f);
    HonestSumcheckProver prover(inst.f, 2);
    CHECK(run_sumcheck(inst, prover, rng));
  }
  CHECK(sumcheck_check_round(f, Univariate{{1, 1, 0}}, 1, 2));
  CHECK_FALSE(sumcheck_check_round(f, Univariate{{1, 1, 0, 1}}, 0, 2));
  CHECK_FALSE(sumcheck_check_round(f, Univariate{{0, 1, 1}}, 1, 2));
}

TEST_CASE("sum-check final check is enforced") {
  GF2m f(8);
  SumcheckInstance inst{x1x2(f), 1, 1};
  const Elem r[] = {5, 9};
  std::vector<Univariate> honest = {{{0, 1}}, {{0, 5}}};
  CHECK(sumcheck_verify_transcript(inst, honest, r));
  // Consistent with the claim round by round but wrong at the end.
  std::vector<Univariate> forged = {{{0, 1}}, {{1, 5}}};
  CHECK_FALSE(sumcheck_verify_transcript(inst, forged, r));
}

TEST_CASE("soundness bounds") {
  CHECK(sumcheck_soundness_bound(4, 2, 256) == doctest::Approx(1.0 / 32));
  CHECK(sumcheck_soundness_bound(7, 0, 256) == 0.0);
  CHECK(sumcheck_soundness_bound(1, 1, 65536) == doctest::Approx(std::pow(2.0, -16)));
  CHECK(rr_soundness_bound(0.5, 3, std::pow(2.0, -20)) == doctest::Approx(0.5 + 9 * std::pow(2.0, -20)));
  CHECK(rr_soundness_bound(0.2, 0, 0.1) == doctest::Approx(0.2));
  CHECK(rr_soundness_bound(0.0, 4, 0.01) == doctest::Approx(0.16));
}

TEST_CASE("round-collapse sum-check") {
  Rng rng(35);
  GF2m f(8);
  SumcheckInstance inst{random_polynomial(f, 3, 2, 0.5, rng), 0, 2};
  inst.claim = sumcheck_claim(inst.f);
  SumcheckProof pi(inst);

  auto [vmsg, secrets] = rr_verifier_message(pi, 4, rng);
  CHECK(vmsg.rounds() == 3);
  CHECK(vmsg.registers[0].size() == pi.message_len());

  Rng a(77), b(77);
  CHECK(rr_verifier_message(pi, 4, a).second.receipts == rr_verifier_message(pi, 4, b).second.receipts);

  HonestSumcheckProver honest(inst.f, 2);
  SumcheckProverAdapter adapter(pi, honest);
  auto pmsg = rr_prover_respond(pi, adapter, vmsg, rng);
  CHECK(rr_verify(pi, secrets, pmsg));

  auto bad = pmsg;
  for (auto& opening : bad.openings) {
    if (!opening.empty() && !opening[0].empty()) {
      opening[0][0] ^= 1;
      break;
    }
  }
  if (bad.openings != pmsg.openings) CHECK_FALSE(rr_verify(pi, secrets, bad));
  CHECK_FALSE(pi.has_simulator());
}

TEST_CASE("round-collapse channel enforces order") {
  Rng rng(36);
  GF2m f(8);
  SumcheckInstance inst{x1x2(f), 1, 1};
  SumcheckProof pi(inst);
  auto [vmsg, secrets] = rr_verifier_message(pi, 2, rng);

  RrChannel early(vmsg);
  CHECK_THROWS_AS(early.read_challenge(), ProtocolViolation);

  RrChannel skip(vmsg);
  skip.take_register();
  CHECK_THROWS_AS(skip.read_challenge(), ProtocolViolation);

  RrChannel greedy(vmsg, 1);
  greedy.take_register();
  CHECK_THROWS_AS(greedy.memory_bound(2), BoundViolation);

  RrChannel ok(vmsg, 1);
  while (!ok.finished()) {
    ok.take_register();
    ok.memory_bound(1);
    ok.read_challenge();
  }
  CHECK(ok.log().size() == 6);
}
