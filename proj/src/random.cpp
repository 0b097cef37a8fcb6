#include "bqsm/random.hpp"

#include <numeric>
#include <stdexcept>

namespace bqsm {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(seed) ^ splitmix64(index + 0x51ed2701ULL));
}

bool Rng::bit() {
  if (bits_left_ == 0) {
    bit_buffer_ = engine_();
    bits_left_ = 64;
  }
  bool b = bit_buffer_ & 1u;
  bit_buffer_ >>= 1;
  --bits_left_;
  return b;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  if ((bound & (bound - 1)) == 0) return engine_() & (bound - 1);
  // Rejection sampling on the largest multiple of bound.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

double Rng::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t Rng::weighted(std::span<const double> weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) throw std::invalid_argument("Rng::weighted: weights must have positive sum");
  const double u = uniform01() * total;
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    acc += weights[i];
    last_positive = i;
    if (u < acc) return i;
  }
  return last_positive;
}

Rng Rng::split() { return Rng(engine_()); }

bool BranchEnumerator::bit() {
  if (depth_ < frames_.size()) return replay() == 1;
  return draw({0, 1}, {0.5, 0.5}) == 1;
}

std::uint64_t BranchEnumerator::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("BranchEnumerator::below: bound must be positive");
  if (depth_ < frames_.size()) return replay();
  std::vector<std::size_t> options(bound);
  std::iota(options.begin(), options.end(), std::size_t{0});
  return draw(std::move(options), std::vector<double>(bound, 1.0 / static_cast<double>(bound)));
}

std::size_t BranchEnumerator::weighted(std::span<const double> weights) {
  if (depth_ < frames_.size()) return replay();
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) throw std::invalid_argument("BranchEnumerator::weighted: weights must have positive sum");
  std::vector<std::size_t> options;
  std::vector<double> probs;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] > 0.0) {
      options.push_back(i);
      probs.push_back(weights[i] / total);
    }
  }
  return draw(std::move(options), std::move(probs));
}

std::size_t BranchEnumerator::replay() {
  const Frame& f = frames_[depth_++];
  return f.options[f.cursor];
}

std::size_t BranchEnumerator::draw(std::vector<std::size_t> options, std::vector<double> probs) {
  if (depth_ < frames_.size()) return replay();
  frames_.push_back(Frame{std::move(options), std::move(probs), 0});
  ++depth_;
  return frames_.back().options[0];
}

double BranchEnumerator::path_probability() const {
  double p = 1.0;
  for (const Frame& f : frames_) p *= f.probs[f.cursor];
  return p;
}

bool BranchEnumerator::advance() {
  while (!frames_.empty()) {
    Frame& f = frames_.back();
    if (f.cursor + 1 < f.options.size()) {
      ++f.cursor;
      return true;
    }
    frames_.pop_back();
  }
  return false;
}

}  // namespace bqsm
