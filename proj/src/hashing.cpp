#include "bqsm/hashing.hpp"

#include <bit>
#include <stdexcept>

namespace bqsm {

ToeplitzHash::ToeplitzHash(std::size_t in_len, std::size_t out_len, Bits seed)
    : in_len_(in_len), out_len_(out_len), seed_(std::move(seed)), words_((in_len + 63) / 64) {
  const std::size_t need = in_len + out_len == 0 ? 0 : in_len + out_len - 1;
  if (in_len == 0 || out_len == 0) {
    if (!seed_.empty()) throw std::invalid_argument("ToeplitzHash: degenerate shape takes an empty seed");
  } else if (seed_.size() != need) {
    throw std::invalid_argument("ToeplitzHash: seed must have in_len + out_len - 1 bits");
  }
  rows_.assign(out_len_ * words_, 0);
  if (out_len_ == 0 || in_len_ == 0) return;
  // Row i + 1 is row i moved one column right, with seed[i + in_len] entering at column 0.
  for (std::size_t j = 0; j < in_len_; ++j) {
    if (seed_[in_len_ - 1 - j]) rows_[j / 64] |= std::uint64_t{1} << (j % 64);
  }
  const std::uint64_t top_mask = in_len_ % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (in_len_ % 64)) - 1;
  for (std::size_t i = 1; i < out_len_; ++i) {
    const std::uint64_t* prev = &rows_[(i - 1) * words_];
    std::uint64_t* row = &rows_[i * words_];
    std::uint64_t carry = seed_[i - 1 + in_len_];
    for (std::size_t w = 0; w < words_; ++w) {
      row[w] = (prev[w] << 1) | carry;
      carry = prev[w] >> 63;
    }
    row[words_ - 1] &= top_mask;
  }
  if (in_len_ <= 64) {
    msb_rows_.assign(out_len_, 0);
    for (std::size_t i = 0; i < out_len_; ++i) {
      std::uint64_t r = 0;
      for (std::size_t j = 0; j < in_len_; ++j) r |= ((rows_[i] >> j) & 1u) << (in_len_ - 1 - j);
      msb_rows_[i] = r;
    }
  }
}

ToeplitzHash ToeplitzHash::sample(std::size_t in_len, std::size_t out_len, RandomSource& rng) {
  const std::size_t len = (in_len == 0 || out_len == 0) ? 0 : in_len + out_len - 1;
  return ToeplitzHash(in_len, out_len, random_bits(len, rng));
}

Bits ToeplitzHash::apply(std::span<const std::uint8_t> x) const {
  if (x.size() != in_len_) throw std::invalid_argument("apply_hash: input length mismatch");
  std::vector<std::uint64_t> packed(words_, 0);
  for (std::size_t j = 0; j < in_len_; ++j) {
    if (x[j] & 1u) packed[j / 64] |= std::uint64_t{1} << (j % 64);
  }
  Bits out(out_len_, 0);
  for (std::size_t i = 0; i < out_len_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_; ++w) acc ^= rows_[i * words_ + w] & packed[w];
    out[i] = static_cast<std::uint8_t>(std::popcount(acc) & 1);
  }
  return out;
}

std::uint64_t ToeplitzHash::apply_packed(std::uint64_t x) const {
  if (in_len_ > 64 || out_len_ > 64) throw std::invalid_argument("apply_packed: shape exceeds 64 bits");
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < out_len_; ++i) {
    out = (out << 1) | static_cast<std::uint64_t>(std::popcount(msb_rows_[i] & x) & 1);
  }
  return out;
}

}  // namespace bqsm
