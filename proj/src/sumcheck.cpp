#include "bqsm/sumcheck.hpp"

#include <algorithm>
#include <stdexcept>

#include "bqsm/errors.hpp"

namespace bqsm {
namespace {

constexpr std::size_t kMaxCubeVars = 24;

/// Sum of f(prefix, x_tail) over x_tail in {0,1}^{n - |prefix|}.
Elem cube_sum(const MultivariatePolynomial& f, std::vector<Elem>& point, std::size_t from) {
  const std::size_t n = f.n_vars();
  if (n - from > kMaxCubeVars) throw CapacityError("sum-check: too many variables for Boolean-cube summation");
  Elem acc = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - from)); ++mask) {
    for (std::size_t j = from; j < n; ++j) point[j] = (mask >> (n - 1 - j)) & 1u;
    acc ^= f.eval(point);
  }
  return acc;
}

}  // namespace

Elem sumcheck_claim(const MultivariatePolynomial& f) {
  std::vector<Elem> point(f.n_vars(), 0);
  return cube_sum(f, point, 0);
}

Univariate sumcheck_prover_round(const MultivariatePolynomial& f, std::span<const Elem> fixed, std::size_t d) {
  const std::size_t i = fixed.size();
  if (i >= f.n_vars()) throw std::invalid_argument("sumcheck_prover_round: round index out of range");
  std::vector<Elem> point(f.n_vars(), 0);
  std::copy(fixed.begin(), fixed.end(), point.begin());
  const auto nodes = interpolation_nodes(d + 1);
  std::vector<Elem> values(d + 1);
  for (std::size_t t = 0; t <= d; ++t) {
    point[i] = nodes[t];
    values[t] = cube_sum(f, point, i + 1);
  }
  return interpolate(f.field(), values);
}

double sumcheck_soundness_bound(std::size_t n_vars, std::size_t d, double field_size) {
  return static_cast<double>(n_vars) * static_cast<double>(d) / field_size;
}

bool sumcheck_check_round(const GF2m& field, const Univariate& g, Elem prev, std::size_t d) {
  if (g.coeffs.size() > d + 1 || g.degree() > static_cast<int>(d)) return false;
  for (auto c : g.coeffs) {
    if (!field.contains(c)) return false;
  }
  return (g.eval(field, 0) ^ g.eval(field, 1)) == prev;
}

SumcheckVerifier::SumcheckVerifier(const SumcheckInstance& inst) : inst_(inst), expected_(inst.claim) {}

std::optional<Elem> SumcheckVerifier::receive(const Univariate& g, RandomSource& rng) {
  const auto& field = inst_.f.field();
  if (r_.size() >= inst_.f.n_vars()) return std::nullopt;
  if (!sumcheck_check_round(field, g, expected_, inst_.degree)) return std::nullopt;
  const Elem r = field.random(rng);
  r_.push_back(r);
  expected_ = g.eval(field, r);
  last_ = g;
  return r;
}

bool SumcheckVerifier::final_check(RandomSource& rng) const {
  if (r_.size() != inst_.f.n_vars()) return false;
  if (r_.empty()) return inst_.claim == inst_.f.eval(r_);
  if (!inst_.fresh_final_challenge) return expected_ == inst_.f.eval(r_);
  auto point = r_;
  point.back() = inst_.f.field().random(rng);
  return last_.eval(inst_.f.field(), point.back()) == inst_.f.eval(point);
}

bool sumcheck_verify_transcript(const SumcheckInstance& inst, std::span<const Univariate> g, std::span<const Elem> r,
                                std::optional<Elem> fresh_r) {
  const std::size_t n = inst.f.n_vars();
  const auto& field = inst.f.field();
  if (g.size() != n || r.size() != n) return false;
  if (n == 0) return inst.claim == inst.f.eval(r);
  Elem expected = inst.claim;
  for (std::size_t i = 0; i < n; ++i) {
    if (!field.contains(r[i]) || !sumcheck_check_round(field, g[i], expected, inst.degree)) return false;
    expected = g[i].eval(field, r[i]);
  }
  if (fresh_r) {
    std::vector<Elem> point(r.begin(), r.end());
    point.back() = *fresh_r;
    return g.back().eval(field, *fresh_r) == inst.f.eval(point);
  }
  return expected == inst.f.eval(r);
}

Univariate HonestSumcheckProver::round(std::span<const Elem> challenges) {
  return sumcheck_prover_round(f_, challenges, d_);
}

Univariate CheatingSumcheckProver::round(std::span<const Elem> challenges) {
  const auto& field = f_.field();
  const Elem claim = challenges.empty() ? claim_ : last_.eval(field, challenges.back());
  const Univariate truth = sumcheck_prover_round(f_, challenges, d_);
  const Elem true_sum = truth.eval(field, 0) ^ truth.eval(field, 1);
  if (claim == true_sum || d_ == 0) {
    last_ = truth;
    return last_;
  }
  Univariate g{std::vector<Elem>(d_ + 1, 0)};
  if (strategy_ == Strategy::kRandomConsistent) {
    // In characteristic 2, g(0) + g(1) = c_1 + ... + c_d.
    Elem rest = 0;
    for (std::size_t t = 0; t <= d_; ++t) g.coeffs[t] = field.random(rng_);
    for (std::size_t t = 2; t <= d_; ++t) rest ^= g.coeffs[t];
    g.coeffs[1] = claim ^ rest;
  } else {
    // g = truth + kappa * prod_j (X - t_j) with distinct random roots t_j.
    Univariate p;
    while (true) {
      std::vector<Elem> roots;
      while (roots.size() < d_) {
        const Elem t = field.random(rng_);
        if (std::find(roots.begin(), roots.end(), t) == roots.end()) roots.push_back(t);
      }
      p.coeffs.assign(1, 1);
      for (Elem t : roots) {
        std::vector<Elem> next(p.coeffs.size() + 1, 0);
        for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
          next[k + 1] ^= p.coeffs[k];
          next[k] ^= field.mul(p.coeffs[k], t);
        }
        p.coeffs = std::move(next);
      }
      if ((p.eval(field, 0) ^ p.eval(field, 1)) != 0) break;
    }
    const Elem kappa = field.div(claim ^ true_sum, p.eval(field, 0) ^ p.eval(field, 1));
    for (std::size_t t = 0; t <= d_; ++t) g.coeffs[t] = truth.coeffs[t] ^ field.mul(kappa, p.coeffs[t]);
  }
  last_ = g;
  return last_;
}

bool run_sumcheck(const SumcheckInstance& inst, SumcheckProver& prover, RandomSource& rng) {
  SumcheckVerifier v(inst);
  std::vector<Elem> challenges;
  for (std::size_t i = 0; i < inst.f.n_vars(); ++i) {
    auto r = v.receive(prover.round(challenges), rng);
    if (!r) return false;
    challenges.push_back(*r);
  }
  return v.final_check(rng);
}

}  // namespace bqsm
