#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bqsm/random.hpp"

namespace bqsm {

/// One entry per bit, each 0 or 1.
using Bits = std::vector<std::uint8_t>;

/// Conjugate-coding basis: computational (+) or Hadamard (x).
enum class Basis : std::uint8_t { kComputational = 0, kHadamard = 1 };

using BasisString = std::vector<Basis>;

inline Basis basis_from_bit(std::uint8_t b) { return b ? Basis::kHadamard : Basis::kComputational; }
inline std::uint8_t basis_bit(Basis b) { return static_cast<std::uint8_t>(b); }
inline Basis flip(Basis b) { return b == Basis::kComputational ? Basis::kHadamard : Basis::kComputational; }

/// Parses "0110"; throws std::invalid_argument on any other character.
Bits bits_from_string(std::string_view s);
std::string to_string(std::span<const std::uint8_t> bits);

/// Parses "+x+" (also accepts "0"/"1").
BasisString bases_from_string(std::string_view s);
std::string to_string(std::span<const Basis> bases);

BasisString bases_from_bits(std::span<const std::uint8_t> bits);
Bits bits_from_bases(std::span<const Basis> bases);
BasisString constant_bases(std::size_t n, Basis b);

Bits random_bits(std::size_t n, RandomSource& rng);
BasisString random_bases(std::size_t n, RandomSource& rng);

Bits xor_bits(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// Big-endian unsigned integer <-> fixed-width bit string.
Bits bits_from_uint(std::uint64_t value, std::size_t width);
std::uint64_t uint_from_bits(std::span<const std::uint8_t> bits);

/// Number of bits needed to index `count` values (ceil(lg count), 0 for count <= 1).
std::size_t index_width(std::uint64_t count);

/// Bits packed MSB-first into bytes; the last byte is zero-padded.
std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits);
Bits unpack_bits(std::span<const std::uint8_t> bytes, std::size_t nbits);

/// Length-prefixed binary encoding used for transcript payloads.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  /// u32 bit length followed by the packed bits.
  void bits(std::span<const std::uint8_t> b);
  void bases(std::span<const Basis> b);

  const std::vector<std::uint8_t>& bytes() const& { return out_; }
  std::vector<std::uint8_t> bytes() && { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

/// Reader for ByteWriter output; throws std::out_of_range on truncation.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  Bits bits();
  BasisString bases();
  bool done() const { return pos_ == in_.size(); }
  std::size_t position() const { return pos_; }

 private:
  std::span<const std::uint8_t> take(std::size_t n);

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

}  // namespace bqsm
