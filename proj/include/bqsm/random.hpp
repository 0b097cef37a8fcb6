#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace bqsm {

/// Source of protocol randomness.
///
/// Protocol code draws every coin through these three primitives so that the
/// same code can run against a seeded generator (Rng) or be explored branch
/// by branch (BranchEnumerator) to obtain exact output distributions.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  virtual bool bit() = 0;
  /// Uniform in [0, bound). bound must be positive.
  virtual std::uint64_t below(std::uint64_t bound) = 0;
  /// Index i with probability weights[i] / sum(weights).
  virtual std::size_t weighted(std::span<const double> weights) = 0;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seeded, splittable generator (mt19937_64 underneath).
class Rng final : public RandomSource {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Independent stream for trial `index` of a run seeded with `seed`. The
  /// result does not depend on how trials are scheduled across workers.
  static Rng substream(std::uint64_t seed, std::uint64_t index);

  bool bit() override;
  std::uint64_t below(std::uint64_t bound) override;
  std::size_t weighted(std::span<const double> weights) override;

  std::uint64_t next_u64() { return engine_(); }
  double uniform01();
  /// Child generator seeded from this one; advances this generator.
  Rng split();

 private:
  std::mt19937_64 engine_;
  std::uint64_t bit_buffer_ = 0;
  int bits_left_ = 0;
};

/// Runs a randomized computation once per coin path.
///
/// Every draw becomes a branch point; zero-weight branches are skipped. The
/// sink receives each path's result with its exact probability. Only usable
/// for computations whose coin tree is small.
class BranchEnumerator final : public RandomSource {
 public:
  template <class Fn, class Sink>
  static void for_each_branch(Fn&& fn, Sink&& sink) {
    BranchEnumerator e;
    do {
      e.depth_ = 0;
      auto result = fn(static_cast<RandomSource&>(e));
      e.frames_.resize(e.depth_);
      sink(std::move(result), e.path_probability());
    } while (e.advance());
  }

  bool bit() override;
  std::uint64_t below(std::uint64_t bound) override;
  std::size_t weighted(std::span<const double> weights) override;

 private:
  struct Frame {
    std::vector<std::size_t> options;  // values that may be returned
    std::vector<double> probs;
    std::size_t cursor = 0;
  };

  BranchEnumerator() = default;
  std::size_t replay();
  std::size_t draw(std::vector<std::size_t> options, std::vector<double> probs);
  double path_probability() const;
  bool advance();

  std::vector<Frame> frames_;
  std::size_t depth_ = 0;
};

}  // namespace bqsm
