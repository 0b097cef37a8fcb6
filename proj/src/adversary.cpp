#include "bqsm/adversary.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bqsm/entropy.hpp"
#include "bqsm/errors.hpp"
#include "bqsm/ot.hpp"
#include "bqsm/pi_ham.hpp"
#include "bqsm/rr.hpp"
#include "bqsm/stats.hpp"
#include "bqsm/sumcheck_proof.hpp"

namespace bqsm {

void enforce_bound(const RetainedState& state, std::size_t q) {
  if (state.retained_qubits() > q) {
    throw BoundViolation("adversary retained " + std::to_string(state.retained_qubits()) + " qubits with bound q = " +
                         std::to_string(q));
  }
}

double GameArm::radius() const { return 3.0 * binomial_sigma(rate(), trials); }

const GameArm& GameReport::arm(const std::string& name) const {
  for (const auto& a : arms) {
    if (a.name == name) return a;
  }
  throw std::out_of_range("GameReport: no arm named " + name);
}

void GameReport::refresh() {
  switch (stat) {
    case Stat::kArmSum:
      statistic = 0.0;
      statistic_radius = 0.0;
      for (const auto& a : arms) {
        statistic += a.rate();
        statistic_radius += a.radius();
      }
      break;
    case Stat::kFirstArm:
      statistic = arms.empty() ? 0.0 : arms[0].rate();
      statistic_radius = std::isnan(bound) || arms.empty()
                             ? (arms.empty() ? 0.0 : arms[0].radius())
                             : 3.0 * binomial_sigma(std::min(1.0, bound), arms[0].trials);
      break;
    case Stat::kMean: {
      const double T = static_cast<double>(trials);
      const double mean = trials ? value_sum / T : 0.0;
      const double var = trials > 1 ? std::max(0.0, (value_sum_sq - T * mean * mean) / (T - 1)) : 0.0;
      statistic = mean;
      statistic_radius = trials ? 3.0 * std::sqrt(var / T) : 0.0;
      break;
    }
  }
}

void merge_reports(GameReport& into, const GameReport& part) {
  if (into.game != part.game || into.strategy != part.strategy || into.arms.size() != part.arms.size()) {
    throw std::invalid_argument("merge_reports: reports from different games");
  }
  into.trials += part.trials;
  for (std::size_t i = 0; i < into.arms.size(); ++i) {
    into.arms[i].trials += part.arms[i].trials;
    into.arms[i].successes += part.arms[i].successes;
  }
  if (into.broken && !part.broken) into.note = part.note;
  into.broken = into.broken && part.broken;
  into.value_sum += part.value_sum;
  into.value_sum_sq += part.value_sum_sq;
  if (part.invalidated && !into.invalidated) {
    into.invalidated = true;
    into.note = part.note;
  }
  into.refresh();
}

bool GameReport::within_bound() const {
  if (invalidated) return false;
  if (std::isnan(bound)) return true;
  return statistic <= bound + statistic_radius;
}

namespace {

std::vector<std::size_t> range(std::size_t begin, std::size_t end, std::size_t step = 1) {
  std::vector<std::size_t> out;
  for (std::size_t i = begin; i < end; i += step) out.push_back(i);
  return out;
}

GameReport invalid_report(GameReport r, const BoundViolation& e) {
  r.invalidated = true;
  r.note = std::string("game invalidated: ") + e.what();
  return r;
}

}  // namespace

// DFSS binding.

std::string MeasureAllCommitter::name() const {
  return basis_ == Basis::kComputational ? "measure-all-+" : "measure-all-x";
}

RetainedState MeasureAllCommitter::commit(const QuantumMessage& msg, RandomSource& rng) {
  return {measure_bb84(msg, constant_bases(msg.length(), basis_), rng).outcome_bits, std::nullopt};
}

DfssOpening MeasureAllCommitter::open(std::uint8_t b, const RetainedState& kept, RandomSource&) {
  return {b, kept.classical};
}

RetainedState RandomBasisCommitter::commit(const QuantumMessage& msg, RandomSource& rng) {
  return {measure_bb84(msg, random_bases(msg.length(), rng), rng).outcome_bits, std::nullopt};
}

DfssOpening RandomBasisCommitter::open(std::uint8_t b, const RetainedState& kept, RandomSource&) {
  return {b, kept.classical};
}

RetainedState StoreEverythingCommitter::commit(const QuantumMessage& msg, RandomSource&) {
  return {{}, densify(msg, cap_).dense()};
}

DfssOpening StoreEverythingCommitter::open(std::uint8_t b, const RetainedState& kept, RandomSource& rng) {
  if (!kept.quantum) throw std::logic_error("StoreEverythingCommitter: nothing stored");
  const auto& st = *kept.quantum;
  const auto bases = constant_bases(st.qubits(), basis_from_bit(b));
  return {b, measure_qubits(st, range(0, st.qubits()), bases, rng).outcomes};
}

GameReport dfss_binding_game(DfssCommitter& adversary, std::size_t n, std::size_t q, std::size_t trials,
                             RandomSource& rng) {
  GameReport r;
  r.game = "dfss-binding";
  r.strategy = adversary.name();
  r.trials = trials;
  r.arms = {{"p0", 0, 0}, {"p1", 0, 0}};
  r.statistic_name = "p0+p1";
  r.bound_formula = "1 + negl(n) when n/4 - q is linear in n (no explicit constant)";
  try {
    for (std::size_t t = 0; t < trials; ++t) {
      auto [msg, receipt] = dfss_prepare(n, rng);
      RetainedState kept = adversary.commit(msg, rng);
      enforce_bound(kept, q);
      const std::uint8_t b = rng.bit() ? 1 : 0;
      const DfssOpening op = adversary.open(b, kept, rng);
      ++r.arms[b].trials;
      r.arms[b].successes += dfss_verify(receipt, op) ? 1 : 0;
    }
  } catch (const BoundViolation& e) {
    return invalid_report(std::move(r), e);
  }
  r.refresh();
  r.vacuous = q >= n / 4;
  r.note = kAdversaryScope;
  r.broken = r.arms[0].rate() == 1.0 && r.arms[1].rate() == 1.0;
  if (r.broken) r.note = "binding broken: both openings always accepted";
  return r;
}

// Weak commitment sum-binding.

double weak_bc_best_analytic_bound(std::size_t n) {
  double best = std::numeric_limits<double>::infinity();
  // The ball-size estimate 2^{h(delta) n} needs delta <= 1/2.
  for (std::size_t radius = 1; 2 * radius <= n; ++radius) {
    const double delta = static_cast<double>(radius) / static_cast<double>(n);
    const double h = binary_entropy(delta);
    const double nn = static_cast<double>(n);
    best = std::min(best, 1.0 + std::exp2(-nn / 2 + 2 * h * nn) + std::exp2(-delta * nn + 1));
  }
  return best;
}

SumBindingOracle weak_bc_sum_binding_oracle(std::size_t n, std::size_t radius, std::uint64_t x0, std::uint64_t x1,
                                            bool full_matrices, std::size_t dense_cap) {
  if (n == 0 || n > std::min<std::size_t>(dense_cap, 20)) throw CapacityError("sum-binding oracle: n over the cap");
  if (full_matrices && n > 10) throw CapacityError("sum-binding oracle: full projectors limited to n <= 10");
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (x0 >= dim || x1 >= dim) throw std::invalid_argument("sum-binding oracle: centre out of range");
  if (radius > n) radius = n;

  std::vector<std::uint64_t> ball0, ball1;
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (static_cast<std::size_t>(std::popcount(x ^ x0)) <= radius) ball0.push_back(x);
    if (static_cast<std::size_t>(std::popcount(x ^ x1)) <= radius) ball1.push_back(x);
  }
  const double scale = std::exp2(-static_cast<double>(n) / 2.0);
  auto hadamard = [scale](std::uint64_t x, std::uint64_t y) { return (std::popcount(x & y) & 1) ? -scale : scale; };

  SumBindingOracle out;
  out.n = n;
  out.radius = radius;
  if (full_matrices) {
    const auto d = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXd H(d, d), L0 = Eigen::MatrixXd::Zero(d, d), D1 = Eigen::MatrixXd::Zero(d, d);
    for (std::uint64_t x = 0; x < dim; ++x) {
      for (std::uint64_t y = 0; y < dim; ++y) H(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = hadamard(x, y);
    }
    for (auto x : ball0) L0(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = 1.0;
    for (auto y : ball1) D1(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(y)) = 1.0;
    const Eigen::MatrixXd L1 = H * D1 * H;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(L0 * L1);
    out.norm = svd.singularValues()(0);
  } else {
    Eigen::MatrixXd M(static_cast<Eigen::Index>(ball0.size()), static_cast<Eigen::Index>(ball1.size()));
    for (std::size_t i = 0; i < ball0.size(); ++i) {
      for (std::size_t j = 0; j < ball1.size(); ++j) {
        M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = hadamard(ball0[i], ball1[j]);
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    out.norm = svd.singularValues()(0);
  }
  const double nn = static_cast<double>(n);
  const double delta = static_cast<double>(radius) / nn;
  const double h = binary_entropy(delta);
  out.chain_bound = 1.0 + std::exp2(2 * h * nn - nn / 2);
  out.analytic_bound = 1.0 + std::exp2(-nn / 2 + 2 * h * nn) + std::exp2(-delta * nn + 1);
  out.vacuous = out.analytic_bound >= 2.0;
  return out;
}

namespace {

struct EprRun {
  WeakBcReceipt receipt;
  DenseState state;
};

// Committer prepares n EPR pairs and sends the V halves; the receiver
// measures them on reception in uniform bases.
EprRun epr_commit(std::size_t n, RandomSource& rng, std::size_t cap) {
  DenseState st = epr_pairs(n, cap);
  WeakBcReceipt rec;
  rec.theta = random_bases(n, rng);
  auto pm = measure_qubits(st, range(1, 2 * n, 2), rec.theta, rng);
  rec.x_prime = std::move(pm.outcomes);
  return {std::move(rec), std::move(pm.post)};
}

Bits measure_halves(const DenseState& st, std::size_t n, std::span<const Basis> bases, RandomSource& rng) {
  return measure_qubits(st, range(0, 2 * n, 2), bases, rng).outcomes;
}

GameReport purification_report(const std::string& strategy, std::size_t trials, double bound) {
  GameReport r;
  r.game = "weak-bc-sum-binding";
  r.strategy = strategy;
  r.trials = trials;
  r.arms = {{"p0", 0, 0}, {"p1", 0, 0}};
  r.statistic_name = "p0+p1";
  r.bound = bound;
  r.bound_formula = "1 + 2^{-n/2 + 2h(delta)n} + 2^{-delta n + 1}, minimised over delta n";
  r.vacuous = bound >= 2.0;
  return r;
}

void finish(GameReport& r) { r.refresh(); }

}  // namespace

std::vector<GameReport> weak_bc_purification_attack(std::size_t n, std::size_t trials, RandomSource& rng,
                                                    std::size_t dense_cap) {
  if (n == 0 || 2 * n > dense_cap) throw CapacityError("purification attack: 2n exceeds the dense cap");
  const double bound = weak_bc_best_analytic_bound(n);
  std::vector<GameReport> out;

  // Adaptive: the committer learns b first and measures its halves in basis b.
  GameReport adaptive = purification_report("epr-adaptive", trials, std::numeric_limits<double>::quiet_NaN());
  adaptive.bound_formula = "none: the opening basis is chosen after b is known (sum-binding is not claimed)";
  adaptive.vacuous = false;
  for (std::size_t t = 0; t < trials; ++t) {
    auto run = epr_commit(n, rng, dense_cap);
    const std::uint8_t b = rng.bit() ? 1 : 0;
    const Bits x = measure_halves(run.state, n, constant_bases(n, basis_from_bit(b)), rng);
    ++adaptive.arms[b].trials;
    adaptive.arms[b].successes += weak_bc_verify(run.receipt, {b, x}) ? 1 : 0;
  }
  finish(adaptive);
  adaptive.note = "the purification lets the committer open either bit";
  out.push_back(std::move(adaptive));

  // Simultaneous: both openings fixed before b; both checked on the same record.
  auto simultaneous = [&](const std::string& name, auto&& openings) {
    GameReport r = purification_report(name, trials, bound);
    for (std::size_t t = 0; t < trials; ++t) {
      auto run = epr_commit(n, rng, dense_cap);
      const auto [x0, x1] = openings(run.state);
      for (std::uint8_t b = 0; b < 2; ++b) {
        ++r.arms[b].trials;
        r.arms[b].successes += weak_bc_verify(run.receipt, {b, b ? x1 : x0}) ? 1 : 0;
      }
    }
    finish(r);
    r.note = r.vacuous ? "bound is vacuous (>= 2) at this n; reported for completeness" : kAdversaryScope;
    out.push_back(std::move(r));
  };
  simultaneous("epr-simultaneous-plus", [&](const DenseState& st) {
    Bits x0 = measure_halves(st, n, constant_bases(n, Basis::kComputational), rng);
    return std::pair{std::move(x0), random_bits(n, rng)};
  });
  simultaneous("epr-simultaneous-random-bases", [&](const DenseState& st) {
    Bits y = measure_halves(st, n, random_bases(n, rng), rng);
    return std::pair{y, y};
  });

  GameReport honest = purification_report("honest-commit-0", trials, bound);
  for (std::size_t t = 0; t < trials; ++t) {
    auto [msg, opening] = weak_bc_commit(0, n, rng);
    const auto receipt = weak_bc_receive(msg, rng);
    for (std::uint8_t b = 0; b < 2; ++b) {
      ++honest.arms[b].trials;
      honest.arms[b].successes += weak_bc_verify(receipt, {b, opening.x}) ? 1 : 0;
    }
  }
  finish(honest);
  honest.note = "p0 = 1 for the committed bit; p1 = (3/4)^n";
  out.push_back(std::move(honest));
  return out;
}

// OT privacy.

std::string to_string(OtStrategy s) {
  switch (s) {
    case OtStrategy::kMeasureBasis0: return "measure-all-0";
    case OtStrategy::kMeasureBasis1: return "measure-all-1";
    case OtStrategy::kRandomPerQubit: return "random-per-qubit";
    case OtStrategy::kStoreAllDense: return "store-all-dense";
  }
  return "?";
}

std::optional<OtStrategy> ot_strategy_from_string(const std::string& s) {
  for (auto v : {OtStrategy::kMeasureBasis0, OtStrategy::kMeasureBasis1, OtStrategy::kRandomPerQubit,
                 OtStrategy::kStoreAllDense}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

double ot_slot_distance(const Bits& x, const Bits& known, const BasisString& theta, std::uint8_t c,
                        const ToeplitzHash& h) {
  const std::size_t n = x.size();
  const std::size_t ell = h.out_len();
  if (known.size() != n || theta.size() != n || h.in_len() != n) {
    throw std::invalid_argument("ot_slot_distance: length mismatch");
  }
  if (ell > 20) throw CapacityError("ot_slot_distance: output over 20 bits");
  // Padded substring: slot position j holds x at the j-th index with theta = c.
  Bits base(n, 0);
  std::vector<std::size_t> unknown;
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (basis_bit(theta[i]) != c) continue;
    if (known[i]) {
      base[j] = x[i];
    } else {
      unknown.push_back(j);
    }
    ++j;
  }
  if (unknown.size() > 26) throw CapacityError("ot_slot_distance: more than 26 unknown bits");
  std::vector<double> hist(std::size_t{1} << ell, 0.0);
  const std::uint64_t count = std::uint64_t{1} << unknown.size();
  if (n <= 64) {
    std::uint64_t packed = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (base[i]) packed |= std::uint64_t{1} << (n - 1 - i);
    }
    // Gray-code walk over the unknown positions.
    for (std::uint64_t g = 0; g < count; ++g) {
      if (g) packed ^= std::uint64_t{1} << (n - 1 - unknown[static_cast<std::size_t>(std::countr_zero(g))]);
      hist[h.apply_packed(packed)] += 1.0;
    }
  } else {
    for (std::uint64_t m = 0; m < count; ++m) {
      Bits v = base;
      for (std::size_t u = 0; u < unknown.size(); ++u) v[unknown[u]] = (m >> u) & 1u;
      hist[uint_from_bits(h.apply(v))] += 1.0;
    }
  }
  const double uniform = 1.0 / static_cast<double>(hist.size());
  double dist = 0.0;
  for (double c_v : hist) dist += std::abs(c_v / static_cast<double>(count) - uniform);
  return dist;
}

GameReport ot_privacy_probe(OtStrategy strategy, std::size_t n, std::size_t ell, std::size_t trials,
                            RandomSource& rng, std::size_t dense_cap) {
  const bool dense = strategy == OtStrategy::kStoreAllDense;
  if (dense && n > dense_cap) throw CapacityError("ot_privacy_probe: store-all-dense needs n <= dense_cap");
  const std::size_t q = dense ? n : 0;
  GameReport r;
  r.game = "ot-privacy";
  r.strategy = to_string(strategy);
  r.trials = trials;
  r.arms = {{"both-recovered", trials, 0}};
  r.statistic_name = "mean distance of the better-hidden slot";
  r.stat = GameReport::Stat::kMean;
  r.bound = ot_security_bound(n, ell, q, 1);
  r.bound_formula = "2^{-n/4 + ell + q}";
  r.vacuous = r.bound >= 2.0 * (1.0 - std::exp2(-static_cast<double>(ell)));
  try {
    for (std::size_t t = 0; t < trials; ++t) {
      const Bits s0 = random_bits(ell, rng), s1 = random_bits(ell, rng);
      auto sent = ot_send(s0, s1, n, rng);
      const auto& cp = sent.classical;
      double d = 0.0;
      if (dense) {
        RetainedState kept{{}, densify(sent.qubits, dense_cap).dense()};
        enforce_bound(kept, q);
        // After the bound the adversary learns theta and measures accordingly.
        const Bits x = measure_qubits(*kept.quantum, range(0, n), cp.theta, rng).outcomes;
        const auto r0 = ot_receive_classical(0, x, cp);
        const auto r1 = ot_receive_classical(1, x, cp);
        const bool both = r0 && r1 && *r0 == s0 && *r1 == s1;
        r.arms[0].successes += both ? 1 : 0;
        const Bits all(n, 1);
        d = std::min(ot_slot_distance(x, all, cp.theta, 0, cp.h0), ot_slot_distance(x, all, cp.theta, 1, cp.h1));
      } else {
        BasisString bases;
        if (strategy == OtStrategy::kRandomPerQubit) {
          bases = random_bases(n, rng);
        } else {
          bases = constant_bases(n, strategy == OtStrategy::kMeasureBasis1 ? Basis::kHadamard : Basis::kComputational);
        }
        RetainedState kept{measure_bb84(sent.qubits, bases, rng).outcome_bits, std::nullopt};
        enforce_bound(kept, q);
        Bits known(n);
        for (std::size_t i = 0; i < n; ++i) known[i] = bases[i] == cp.theta[i] ? 1 : 0;
        const double d0 = ot_slot_distance(kept.classical, known, cp.theta, 0, cp.h0);
        const double d1 = ot_slot_distance(kept.classical, known, cp.theta, 1, cp.h1);
        d = std::min(d0, d1);
        const double point = 2.0 * (1.0 - std::exp2(-static_cast<double>(ell)));
        r.arms[0].successes += (d0 >= point - 1e-12 && d1 >= point - 1e-12) ? 1 : 0;
      }
      r.value_sum += d;
      r.value_sum_sq += d * d;
    }
  } catch (const BoundViolation& e) {
    return invalid_report(std::move(r), e);
  }
  r.refresh();
  r.note = dense ? "store-everything control: bound is vacuous at q = n" : kAdversaryScope;
  r.broken = r.arms[0].trials > 0 && r.arms[0].rate() == 1.0;
  return r;
}

// Round-collapse binding.

GameReport dfss_flip_game(std::size_t n, std::size_t trials, RandomSource& rng) {
  GameReport r;
  r.game = "dfss-flip";
  r.strategy = "commit-0-open-1";
  r.trials = trials;
  r.arms = {{"flip", trials, 0}};
  for (std::size_t t = 0; t < trials; ++t) {
    auto [msg, receipt] = dfss_prepare(n, rng);
    const Bits x = dfss_commit(0, msg, rng);
    r.arms[0].successes += dfss_verify(receipt, {1, x}) ? 1 : 0;
  }
  r.statistic_name = "single-bit equivocation rate (delta_hat)";
  r.stat = GameReport::Stat::kFirstArm;
  r.bound_formula = "none; (3/4)^n is the exact value for this strategy";
  r.note = "exact rate (3/4)^n = " + std::to_string(std::pow(0.75, static_cast<double>(n)));
  r.refresh();
  return r;
}

RrProverMessage rr_sumcheck_cheater_respond(const SumcheckProof& pi, RrCheater cheater, RrChannel& channel,
                                            std::size_t n_commit, std::size_t max_flips, RandomSource& rng) {
  const auto& inst = pi.instance();
  const auto& field = inst.f.field();
  const std::size_t k = pi.rounds();
  CheatingSumcheckProver base(inst.f, inst.degree, inst.claim, CheatingSumcheckProver::Strategy::kRootPlanting, rng);
  std::vector<Elem> r;
  std::vector<Bits> intended;
  std::vector<std::vector<Bits>> z;
  for (std::size_t i = 0; i < k; ++i) {
    Univariate g = base.round(r);
    Bits a = pi.encode(g);
    const auto regs = channel.take_register();
    if (cheater == RrCheater::kIgnoreCommitments) {
      dfss_string_commit(Bits(a.size(), 0), regs, rng);
      std::vector<Bits> guessed;
      for (std::size_t j = 0; j < a.size(); ++j) guessed.push_back(random_bits(n_commit, rng));
      z.push_back(std::move(guessed));
    } else {
      z.push_back(dfss_string_commit(a, regs, rng));
    }
    channel.memory_bound(0);
    r.push_back(pi.decode_challenge(channel.read_challenge()));
    if (cheater == RrCheater::kAdaptive) {
      // Shifting the constant term keeps g(0) + g(1); it moves g(r) onto the true partial sum.
      const Univariate truth = sumcheck_prover_round(inst.f, std::span<const Elem>(r).first(i), inst.degree);
      const Elem v = truth.eval(field, r.back()) ^ g.eval(field, r.back());
      if (v != 0 && static_cast<std::size_t>(std::popcount(v)) <= max_flips) {
        g.coeffs[0] ^= v;
        a = pi.encode(g);
        base.revise_last(g);
      }
    }
    intended.push_back(std::move(a));
  }
  RrProverMessage pm;
  for (std::size_t i = 0; i < k; ++i) {
    pm.revealed.push_back(intended[i]);
    pm.openings.push_back(z[i]);
  }
  return pm;
}

namespace {

bool run_rr_sumcheck_cheater(const SumcheckProof& pi, RrCheater cheater, std::size_t n_commit, std::size_t max_flips,
                             RandomSource& rng) {
  auto [vmsg, secrets] = rr_verifier_message(pi, n_commit, rng);
  RrChannel channel(vmsg, 0);
  if (cheater == RrCheater::kHonest) {
    HonestSumcheckProver honest(pi.instance().f, pi.instance().degree);
    SumcheckProverAdapter adapter(pi, honest);
    return rr_verify(pi, secrets, rr_prover_respond(pi, adapter, channel, rng));
  }
  return rr_verify(pi, secrets, rr_sumcheck_cheater_respond(pi, cheater, channel, n_commit, max_flips, rng));
}

}  // namespace

GameReport rr_sumcheck_binding_game(const SumcheckInstance& instance, RrCheater cheater, std::size_t n_commit,
                                    std::size_t trials, double delta_hat, RandomSource& rng, std::size_t max_flips) {
  SumcheckProof pi(instance);
  const std::size_t k = pi.rounds();
  GameReport r;
  r.game = "rr-binding";
  r.strategy = cheater == RrCheater::kAdaptive            ? "adaptive-flip"
               : cheater == RrCheater::kIgnoreCommitments ? "ignore-commitments"
                                                          : "honest";
  r.trials = trials;
  r.arms = {{"accept", trials, 0}};
  try {
    for (std::size_t t = 0; t < trials; ++t) {
      r.arms[0].successes += run_rr_sumcheck_cheater(pi, cheater, n_commit, max_flips, rng) ? 1 : 0;
    }
  } catch (const BoundViolation& e) {
    return invalid_report(std::move(r), e);
  }
  const double eps = sumcheck_soundness_bound(k, instance.degree, static_cast<double>(instance.f.field().size()));
  r.statistic_name = "acceptance rate";
  r.stat = GameReport::Stat::kFirstArm;
  if (cheater != RrCheater::kHonest) {
    r.bound = rr_soundness_bound(eps, k, delta_hat);
    r.bound_formula = "n d / |H| + k^2 delta_hat";
  } else {
    r.bound_formula = "none: the claim is true";
  }
  r.refresh();
  r.vacuous = r.bound >= 1.0;
  r.note = cheater == RrCheater::kHonest ? "honest prover; the bound applies to false claims only" : kAdversaryScope;
  return r;
}

GameReport pi_ham_oblivious_game(const Graph& g, std::size_t commit_qubits, std::size_t trials, RandomSource& rng) {
  PiHam pi(g, commit_qubits);
  PiHamGuessingProver prover(pi);
  GameReport r;
  r.game = "pi-ham-oblivious";
  r.strategy = "guessing-prover";
  r.trials = trials;
  r.arms = {{"p0", trials, 0}, {"p1", trials, 0}};
  for (std::size_t t = 0; t < trials; ++t) {
    const FirstMessage first = prover.first_message(rng);
    const Bits r0 = prover.respond(Bits{0});
    const Bits r1 = prover.respond(Bits{1});
    const VerifierRecord rec = pi.receive(first.quantum, rng);
    r.arms[0].successes += pi.verify(rec, first.classical, Bits{0}, r0) ? 1 : 0;
    r.arms[1].successes += pi.verify(rec, first.classical, Bits{1}, r1) ? 1 : 0;
  }
  finish(r);
  r.statistic_name = "p0+p1";
  r.bound = weak_bc_best_analytic_bound(commit_qubits);
  r.bound_formula = "1 + 2^{-n/2 + 2h(delta)n} + 2^{-delta n + 1} at the per-entry qubit count";
  r.vacuous = r.bound >= 2.0;
  r.note = kAdversaryScope;
  return r;
}

}  // namespace bqsm
