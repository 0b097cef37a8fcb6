#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bqsm/commitments.hpp"
#include "bqsm/graph.hpp"
#include "bqsm/hashing.hpp"
#include "bqsm/quantum.hpp"
#include "bqsm/random.hpp"
#include "bqsm/rr.hpp"
#include "bqsm/sumcheck.hpp"
#include "bqsm/sumcheck_proof.hpp"

namespace bqsm {

/// What an adversary keeps across a memory-bound marker.
struct RetainedState {
  Bits classical;
  std::optional<DenseState> quantum;

  std::size_t retained_qubits() const { return quantum ? quantum->qubits() : 0; }
};

/// Throws BoundViolation if more than q qubits are retained.
void enforce_bound(const RetainedState& state, std::size_t q);

struct GameArm {
  std::string name;
  std::size_t trials = 0;
  std::size_t successes = 0;

  double rate() const { return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0; }
  /// 3 sigma at the empirical rate.
  double radius() const;
};

struct GameReport {
  /// How the statistic is derived from the arms, so partial reports merge.
  enum class Stat { kArmSum, kFirstArm, kMean };

  std::string game;
  std::string strategy;
  std::size_t trials = 0;
  std::vector<GameArm> arms;
  std::string statistic_name;
  double statistic = 0.0;
  double statistic_radius = 0.0;
  /// Analytic bound at the game's parameters; NaN when there is none.
  double bound = std::numeric_limits<double>::quiet_NaN();
  std::string bound_formula;
  bool vacuous = false;      // bound is at least the trivial maximum
  bool invalidated = false;  // memory bound violated; no rates are meaningful
  bool broken = false;       // the adversary won every trial of every arm
  std::string note;
  Stat stat = Stat::kArmSum;
  double value_sum = 0.0;     // kMean: sum and sum of squares of per-trial values
  double value_sum_sq = 0.0;

  const GameArm& arm(const std::string& name) const;
  /// Recomputes statistic and statistic_radius from arms and sums.
  void refresh();
  /// statistic <= bound + statistic_radius (true when there is no bound).
  bool within_bound() const;
};

/// Adds the trials of `part` (same game and strategy) into `into`.
void merge_reports(GameReport& into, const GameReport& part);

inline constexpr const char* kAdversaryScope =
    "named strategy only; security against every strategy is not tested here";

// Receiver-prepared (DFSS) commitment games.

class DfssCommitter {
 public:
  virtual ~DfssCommitter() = default;
  virtual std::string name() const = 0;
  virtual RetainedState commit(const QuantumMessage& msg, RandomSource& rng) = 0;
  /// Opening for the demanded bit, from the retained state only.
  virtual DfssOpening open(std::uint8_t b, const RetainedState& kept, RandomSource& rng) = 0;
};

/// Measures every qubit in one basis and opens every bit with the outcomes.
/// With basis b this is the honest committer to b.
class MeasureAllCommitter final : public DfssCommitter {
 public:
  explicit MeasureAllCommitter(Basis basis) : basis_(basis) {}
  std::string name() const override;
  RetainedState commit(const QuantumMessage& msg, RandomSource& rng) override;
  DfssOpening open(std::uint8_t b, const RetainedState& kept, RandomSource& rng) override;

 private:
  Basis basis_;
};

/// Measures each qubit in an independent uniform basis.
class RandomBasisCommitter final : public DfssCommitter {
 public:
  std::string name() const override { return "random-basis"; }
  RetainedState commit(const QuantumMessage& msg, RandomSource& rng) override;
  DfssOpening open(std::uint8_t b, const RetainedState& kept, RandomSource& rng) override;
};

/// Keeps the whole register as a dense state and measures in the demanded
/// basis at opening time. Needs q >= n.
class StoreEverythingCommitter final : public DfssCommitter {
 public:
  explicit StoreEverythingCommitter(std::size_t dense_cap = kDefaultDenseCap) : cap_(dense_cap) {}
  std::string name() const override { return "store-everything"; }
  RetainedState commit(const QuantumMessage& msg, RandomSource& rng) override;
  DfssOpening open(std::uint8_t b, const RetainedState& kept, RandomSource& rng) override;

 private:
  std::size_t cap_;
};

/// Arms "p0" and "p1" (success given the demanded bit); statistic p0 + p1.
GameReport dfss_binding_game(DfssCommitter& adversary, std::size_t n, std::size_t q, std::size_t trials,
                             RandomSource& rng);

// Committer-prepared (weak) commitment.

struct SumBindingOracle {
  std::size_t n = 0;
  std::size_t radius = 0;   // delta n
  double norm = 0.0;        // || L0 L1 ||
  double chain_bound = 0.0; // 1 + 2^{2 h(delta) n - n/2}
  double analytic_bound = 0.0; // 1 + 2^{-n/2 + 2 h(delta) n} + 2^{-delta n + 1}
  bool vacuous = false;     // analytic_bound >= 2

  double lhs() const { return 1.0 + norm; }
  bool holds(double tol = 1e-9) const { return lhs() <= chain_bound + tol && lhs() <= analytic_bound + tol; }
};

/// L0 projects onto computational-basis strings within `radius` of x0, L1 onto
/// Hadamard-basis strings within `radius` of x1. With full_matrices the 2^n
/// projectors are built explicitly; otherwise the norm is taken on the
/// Hadamard submatrix between the two balls, which is the same operator.
SumBindingOracle weak_bc_sum_binding_oracle(std::size_t n, std::size_t radius, std::uint64_t x0, std::uint64_t x1,
                                            bool full_matrices = false, std::size_t dense_cap = kDefaultDenseCap);

/// Analytic bound minimised over integer radii 1..n; at small n it is above 2.
double weak_bc_best_analytic_bound(std::size_t n);

/// Committer keeps one half of n EPR pairs and sends the other half.
/// Arms: adaptive-p0/p1 (basis chosen after the demanded bit is known),
/// simultaneous strategies (both openings fixed before), and the honest
/// committer to 0. Needs 2n <= dense_cap.
std::vector<GameReport> weak_bc_purification_attack(std::size_t n, std::size_t trials, RandomSource& rng,
                                                    std::size_t dense_cap = kDefaultDenseCap);

// Oblivious transfer privacy.

enum class OtStrategy { kMeasureBasis0, kMeasureBasis1, kRandomPerQubit, kStoreAllDense };

std::string to_string(OtStrategy s);
std::optional<OtStrategy> ot_strategy_from_string(const std::string& s);

/// Exact distance sum_v |P(h(X) = v) - 2^{-ell}| for the hash of slot c's
/// padded substring, where positions with known[i] = 1 take x[i] and the
/// rest are uniform. Throws CapacityError beyond 26 unknown bits.
double ot_slot_distance(const Bits& x, const Bits& known, const BasisString& theta, std::uint8_t c,
                        const ToeplitzHash& h);

/// Per trial the adversary measures (or stores) the OT qubits; the distance
/// of the better-hidden slot is computed exactly given its view. Statistic:
/// mean distance, radius 3 sigma of the mean. Arm "both-recovered" counts
/// trials where both secrets were learned outright.
GameReport ot_privacy_probe(OtStrategy strategy, std::size_t n, std::size_t ell, std::size_t trials,
                            RandomSource& rng, std::size_t dense_cap = kDefaultDenseCap);

// Round-collapse binding.

/// Single-bit DFSS equivocation: commit measuring in basis 0, open as 1 with
/// the outcomes. Arm "flip" estimates delta.
GameReport dfss_flip_game(std::size_t n, std::size_t trials, RandomSource& rng);

enum class RrCheater {
  kAdaptive,          // forges rounds, flips a committed constant term after seeing r_i when cheap
  kIgnoreCommitments, // commits to zeros and opens whatever it wants with guessed strings
  kHonest,
};

/// Plays a non-honest RR[sum-check] prover through the channel without
/// retaining qubits. n_commit is the verifier's qubits per committed bit.
RrProverMessage rr_sumcheck_cheater_respond(const SumcheckProof& pi, RrCheater cheater, RrChannel& channel,
                                            std::size_t n_commit, std::size_t max_flips, RandomSource& rng);

/// RR[sum-check] on a false claim. Arm "accept". Bound n d / |H| + k^2 delta_hat.
GameReport rr_sumcheck_binding_game(const SumcheckInstance& false_instance, RrCheater cheater, std::size_t n_commit,
                                    std::size_t trials, double delta_hat, RandomSource& rng,
                                    std::size_t max_flips = 2);

/// Hamiltonicity prover asked for both responses from one commitment on a
/// graph without a Hamiltonian cycle. Arms "p0", "p1" checked on the same
/// verifier record; statistic p0 + p1.
GameReport pi_ham_oblivious_game(const Graph& g, std::size_t commit_qubits, std::size_t trials, RandomSource& rng);

}  // namespace bqsm
