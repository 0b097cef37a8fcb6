#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bqsm {

std::size_t hamming_distance(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y);
double relative_distance(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y);

/// Binary entropy in bits; throws std::domain_error outside [0, 1].
double binary_entropy(double p);
/// 2^{H(delta) n}; throws std::domain_error unless 0 <= delta <= 1/2.
double ball_size_bound(std::size_t n, double delta);
/// Exact number of strings within Hamming distance `radius` of a fixed n-bit string.
double hamming_ball_size(std::size_t n, std::size_t radius);

/// Joint distribution of (X0, X1, Z) given as a list of atoms.
struct Atom {
  std::uint64_t x0 = 0;
  std::uint64_t x1 = 0;
  std::uint64_t z = 0;
  double p = 0.0;
};

class FiniteDistribution {
 public:
  /// Throws std::invalid_argument on negative mass or a total off 1 by more than 1e-12.
  explicit FiniteDistribution(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

 private:
  std::vector<Atom> atoms_;
};

/// Bitmask naming a subset of {X0, X1, Z}.
enum Var : unsigned { kVarNone = 0, kVarX0 = 1, kVarX1 = 2, kVarZ = 4 };

/// Worst-case conditional min-entropy
///   H(T | Y) = -lg max_{y : P(y) > 0} max_t P(T = t | Y = y).
/// Throws std::domain_error if the distribution carries no mass.
double min_entropy(const FiniteDistribution& dist, unsigned target, unsigned conditioning);

/// Assignment of a choice bit to every atom of a distribution.
using SplitAssignment = std::vector<std::uint8_t>;

/// H(X_{1-C} | Z C) for the given assignment.
double unchosen_min_entropy(const FiniteDistribution& dist, std::span<const std::uint8_t> c);

struct SplitResult {
  SplitAssignment c;
  double achieved = 0.0;  // H(X_{1-C} | Z C)
  bool greedy = false;    // found by the threshold construction
};

/// Searches for C with H(X_{1-C} | Z C) >= alpha/2 - 1.
///
/// Tries the threshold construction first (per z, C = 1 on atoms whose x0 has
/// conditional mass below 2^{-alpha/2}), then every assignment when the support
/// has at most `exhaustive_cap` atoms. Throws std::invalid_argument when
/// H(X0 X1 | Z) < alpha. Returns nullopt if no assignment works.
std::optional<SplitResult> split_min_entropy_oracle(const FiniteDistribution& dist, double alpha,
                                                    std::size_t exhaustive_cap = 20);

}  // namespace bqsm
