#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bqsm/polynomial.hpp"
#include "bqsm/random.hpp"

namespace bqsm {

/// Sum of f over {0,1}^n. Throws CapacityError above 24 variables.
Elem sumcheck_claim(const MultivariatePolynomial& f);

/// g_i(X) = sum over x_{i+1..n} in {0,1} of f(r_1, ..., r_{i-1}, X, x_{i+1}, ...),
/// with i = |fixed| + 1, returned as d + 1 coefficients.
Univariate sumcheck_prover_round(const MultivariatePolynomial& f, std::span<const Elem> fixed, std::size_t d);

/// n d / |H|.
double sumcheck_soundness_bound(std::size_t n_vars, std::size_t d, double field_size);

/// deg g <= d (and at most d + 1 coefficients) and g(0) + g(1) = prev.
bool sumcheck_check_round(const GF2m& field, const Univariate& g, Elem prev, std::size_t d);

/// Statement: sum of f over the Boolean cube equals `claim`; every variable
/// has degree at most `degree`.
struct SumcheckInstance {
  MultivariatePolynomial f;
  Elem claim = 0;
  std::size_t degree = 0;
  /// Alternative reading of the last step: draw a fresh r_n for the final
  /// evaluation instead of reusing the round-n challenge.
  bool fresh_final_challenge = false;
};

/// Interactive verifier, one call per round.
class SumcheckVerifier {
 public:
  explicit SumcheckVerifier(const SumcheckInstance& inst);

  /// Checks g_i; on success samples and returns r_i, otherwise nullopt.
  std::optional<Elem> receive(const Univariate& g, RandomSource& rng);
  /// After the last round: g_n(r_n) = f(r_1, ..., r_n).
  bool final_check(RandomSource& rng) const;

  const std::vector<Elem>& challenges() const { return r_; }

 private:
  const SumcheckInstance& inst_;
  Elem expected_;
  std::vector<Elem> r_;
  Univariate last_;
};

/// Checks a complete transcript: g_1(0)+g_1(1) = claim, consecutive
/// consistency, degrees, and g_n(r_n) = f(r). With the fresh-challenge reading
/// `fresh_r` replaces r_n in the last check.
bool sumcheck_verify_transcript(const SumcheckInstance& inst, std::span<const Univariate> g, std::span<const Elem> r,
                                std::optional<Elem> fresh_r = std::nullopt);

/// Prover strategy: called once per round with the challenges seen so far.
class SumcheckProver {
 public:
  virtual ~SumcheckProver() = default;
  virtual Univariate round(std::span<const Elem> challenges) = 0;
};

class HonestSumcheckProver final : public SumcheckProver {
 public:
  HonestSumcheckProver(const MultivariatePolynomial& f, std::size_t d) : f_(f), d_(d) {}
  Univariate round(std::span<const Elem> challenges) override;

 private:
  const MultivariatePolynomial& f_;
  std::size_t d_;
};

/// Cheating prover for a false claim. While its running claim differs from
/// the truth it sends a forged g with the required g(0) + g(1); once a
/// challenge makes the claim true it continues honestly.
class CheatingSumcheckProver final : public SumcheckProver {
 public:
  enum class Strategy {
    kRandomConsistent,  // forged g uniformly random subject to the sum constraint
    kRootPlanting,      // forged g agrees with the true g_i on d random points
  };

  CheatingSumcheckProver(const MultivariatePolynomial& f, std::size_t d, Elem false_claim, Strategy strategy,
                         RandomSource& rng)
      : f_(f), d_(d), claim_(false_claim), strategy_(strategy), rng_(rng) {}
  Univariate round(std::span<const Elem> challenges) override;
  /// Continue from `g` as if it had been sent last round.
  void revise_last(Univariate g) { last_ = std::move(g); }

 private:
  const MultivariatePolynomial& f_;
  std::size_t d_;
  Elem claim_;
  Strategy strategy_;
  RandomSource& rng_;
  Univariate last_;
};

/// Plays the interactive protocol; returns the verdict.
bool run_sumcheck(const SumcheckInstance& inst, SumcheckProver& prover, RandomSource& rng);

}  // namespace bqsm
