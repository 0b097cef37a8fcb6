#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bqsm/bits.hpp"
#include "bqsm/random.hpp"

namespace bqsm {

/// Toeplitz matrix over GF(2) of shape out_len x in_len, determined by its
/// in_len + out_len - 1 diagonal entries. T[i][j] = seed[i - j + in_len - 1].
class ToeplitzHash {
 public:
  ToeplitzHash(std::size_t in_len, std::size_t out_len, Bits seed);

  static ToeplitzHash sample(std::size_t in_len, std::size_t out_len, RandomSource& rng);

  std::size_t in_len() const { return in_len_; }
  std::size_t out_len() const { return out_len_; }
  const Bits& seed() const { return seed_; }

  /// Throws std::invalid_argument if |x| != in_len.
  Bits apply(std::span<const std::uint8_t> x) const;

  /// Fast path for in_len, out_len <= 64. Input bit j of the hash is bit
  /// (in_len - 1 - j) of `x`; output is packed the same way.
  std::uint64_t apply_packed(std::uint64_t x) const;

  bool operator==(const ToeplitzHash& other) const {
    return in_len_ == other.in_len_ && out_len_ == other.out_len_ && seed_ == other.seed_;
  }

 private:
  std::size_t in_len_;
  std::size_t out_len_;
  Bits seed_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;      // out_len rows of words_ words, LSB-first by column
  std::vector<std::uint64_t> msb_rows_;  // in_len <= 64 only; column j at bit in_len-1-j
};

using UniversalHash = ToeplitzHash;

inline UniversalHash sample_hash(std::size_t in_len, std::size_t out_len, RandomSource& rng) {
  return ToeplitzHash::sample(in_len, out_len, rng);
}

inline Bits apply_hash(const UniversalHash& h, std::span<const std::uint8_t> x) { return h.apply(x); }

}  // namespace bqsm
