#include "bqsm/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace bqsm {
namespace {

constexpr double kSlack = 1e-12;

using Key = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;

Key project(const Atom& a, unsigned vars) {
  return {(vars & kVarX0) ? a.x0 : 0, (vars & kVarX1) ? a.x1 : 0, (vars & kVarZ) ? a.z : 0};
}

/// max over conditioning values y of max_t P(t | y), from (t, y, p) triples.
template <class T, class Y>
double worst_case_guess(const std::vector<std::tuple<T, Y, double>>& rows) {
  std::map<Y, double> marg;
  std::map<std::pair<T, Y>, double> joint;
  for (const auto& [t, y, p] : rows) {
    if (p <= 0.0) continue;
    marg[y] += p;
    joint[{t, y}] += p;
  }
  if (marg.empty()) throw std::domain_error("min_entropy: empty conditioning event");
  double best = 0.0;
  for (const auto& [ty, p] : joint) best = std::max(best, p / marg.at(ty.second));
  return best;
}

}  // namespace

std::size_t hamming_distance(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
  if (x.size() != y.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += (x[i] != y[i]) ? 1 : 0;
  return d;
}

double relative_distance(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
  const std::size_t d = hamming_distance(x, y);
  return x.empty() ? 0.0 : static_cast<double>(d) / static_cast<double>(x.size());
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binary_entropy: p outside [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double ball_size_bound(std::size_t n, double delta) {
  if (!(delta >= 0.0 && delta <= 0.5)) throw std::domain_error("ball_size_bound: delta outside [0, 1/2]");
  return std::exp2(binary_entropy(delta) * static_cast<double>(n));
}

double hamming_ball_size(std::size_t n, std::size_t radius) {
  double total = 0.0;
  double binom = 1.0;
  for (std::size_t k = 0; k <= std::min(n, radius); ++k) {
    if (k > 0) binom = binom * static_cast<double>(n - k + 1) / static_cast<double>(k);
    total += binom;
  }
  return total;
}

FiniteDistribution::FiniteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  double total = 0.0;
  for (const auto& a : atoms_) {
    if (!(a.p >= 0.0)) throw std::invalid_argument("FiniteDistribution: negative probability");
    total += a.p;
  }
  if (std::abs(total - 1.0) > kSlack) throw std::invalid_argument("FiniteDistribution: probabilities must sum to 1");
}

double min_entropy(const FiniteDistribution& dist, unsigned target, unsigned conditioning) {
  std::vector<std::tuple<Key, Key, double>> rows;
  rows.reserve(dist.size());
  for (const auto& a : dist.atoms()) rows.emplace_back(project(a, target), project(a, conditioning), a.p);
  return -std::log2(worst_case_guess(rows));
}

double unchosen_min_entropy(const FiniteDistribution& dist, std::span<const std::uint8_t> c) {
  if (c.size() != dist.size()) throw std::invalid_argument("unchosen_min_entropy: one choice bit per atom");
  using T = std::pair<std::uint8_t, std::uint64_t>;  // (which variable, its value)
  using Y = std::pair<std::uint64_t, std::uint8_t>;  // (z, c)
  std::vector<std::tuple<T, Y, double>> rows;
  rows.reserve(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const auto& a = dist.atoms()[i];
    const std::uint8_t ci = c[i] & 1u;
    rows.emplace_back(T{ci, ci ? a.x0 : a.x1}, Y{a.z, ci}, a.p);
  }
  return -std::log2(worst_case_guess(rows));
}

std::optional<SplitResult> split_min_entropy_oracle(const FiniteDistribution& dist, double alpha,
                                                    std::size_t exhaustive_cap) {
  const double joint = min_entropy(dist, kVarX0 | kVarX1, kVarZ);
  if (joint + 1e-9 < alpha) throw std::invalid_argument("split_min_entropy_oracle: H(X0 X1 | Z) < alpha");
  const double target = alpha / 2.0 - 1.0;
  const auto& atoms = dist.atoms();

  // Threshold construction.
  std::map<std::uint64_t, double> pz;
  std::map<std::pair<std::uint64_t, std::uint64_t>, double> pzx0;
  for (const auto& a : atoms) {
    pz[a.z] += a.p;
    pzx0[{a.z, a.x0}] += a.p;
  }
  const double light = std::exp2(-alpha / 2.0);
  SplitAssignment c(atoms.size(), 0);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const double mz = pz[atoms[i].z];
    if (mz > 0.0 && pzx0[{atoms[i].z, atoms[i].x0}] / mz < light) c[i] = 1;
  }
  double h = unchosen_min_entropy(dist, c);
  if (h + 1e-9 >= target) return SplitResult{std::move(c), h, true};

  if (atoms.size() > exhaustive_cap || atoms.size() >= 63) return std::nullopt;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms.size()); ++mask) {
    for (std::size_t i = 0; i < atoms.size(); ++i) c[i] = (mask >> i) & 1u;
    h = unchosen_min_entropy(dist, c);
    if (h + 1e-9 >= target) return SplitResult{c, h, false};
  }
  return std::nullopt;
}

}  // namespace bqsm
