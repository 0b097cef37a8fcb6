#include "bqsm/bits.hpp"

#include <stdexcept>

namespace bqsm {

Bits bits_from_string(std::string_view s) {
  Bits out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string may only contain 0 and 1");
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

std::string to_string(std::span<const std::uint8_t> bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

BasisString bases_from_string(std::string_view s) {
  BasisString out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '+' || c == '0') {
      out.push_back(Basis::kComputational);
    } else if (c == 'x' || c == '1') {
      out.push_back(Basis::kHadamard);
    } else {
      throw std::invalid_argument("basis string may only contain '+' and 'x'");
    }
  }
  return out;
}

std::string to_string(std::span<const Basis> bases) {
  std::string s;
  s.reserve(bases.size());
  for (auto b : bases) s.push_back(b == Basis::kComputational ? '+' : 'x');
  return s;
}

BasisString bases_from_bits(std::span<const std::uint8_t> bits) {
  BasisString out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) out[i] = basis_from_bit(bits[i]);
  return out;
}

Bits bits_from_bases(std::span<const Basis> bases) {
  Bits out(bases.size());
  for (std::size_t i = 0; i < bases.size(); ++i) out[i] = basis_bit(bases[i]);
  return out;
}

BasisString constant_bases(std::size_t n, Basis b) { return BasisString(n, b); }

Bits random_bits(std::size_t n, RandomSource& rng) {
  Bits out(n);
  for (auto& b : out) b = rng.bit() ? 1 : 0;
  return out;
}

BasisString random_bases(std::size_t n, RandomSource& rng) {
  BasisString out(n);
  for (auto& b : out) b = rng.bit() ? Basis::kHadamard : Basis::kComputational;
  return out;
}

Bits xor_bits(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("xor_bits: length mismatch");
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

Bits bits_from_uint(std::uint64_t value, std::size_t width) {
  if (width < 64 && (value >> width) != 0) throw std::invalid_argument("bits_from_uint: value does not fit");
  Bits out(width, 0);
  for (std::size_t i = 0; i < width && i < 64; ++i) out[width - 1 - i] = (value >> i) & 1u;
  return out;
}

std::uint64_t uint_from_bits(std::span<const std::uint8_t> bits) {
  if (bits.size() > 64) throw std::invalid_argument("uint_from_bits: more than 64 bits");
  std::uint64_t v = 0;
  for (auto b : bits) v = (v << 1) | (b & 1u);
  return v;
}

std::size_t index_width(std::uint64_t count) {
  std::size_t w = 0;
  while (w < 64 && (std::uint64_t{1} << w) < count) ++w;
  return w;
}

std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return out;
}

Bits unpack_bits(std::span<const std::uint8_t> bytes, std::size_t nbits) {
  if (bytes.size() * 8 < nbits) throw std::invalid_argument("unpack_bits: not enough bytes");
  Bits out(nbits);
  for (std::size_t i = 0; i < nbits; ++i) out[i] = (bytes[i / 8] >> (7 - i % 8)) & 1u;
  return out;
}

void ByteWriter::u32(std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out_.push_back(static_cast<std::uint8_t>(v >> s));
}

void ByteWriter::u64(std::uint64_t v) {
  for (int s = 56; s >= 0; s -= 8) out_.push_back(static_cast<std::uint8_t>(v >> s));
}

void ByteWriter::bits(std::span<const std::uint8_t> b) {
  u32(static_cast<std::uint32_t>(b.size()));
  auto packed = pack_bits(b);
  out_.insert(out_.end(), packed.begin(), packed.end());
}

void ByteWriter::bases(std::span<const Basis> b) { bits(bits_from_bases(b)); }

std::span<const std::uint8_t> ByteReader::take(std::size_t n) {
  if (in_.size() - pos_ < n) throw std::out_of_range("ByteReader: truncated payload");
  auto s = in_.subspan(pos_, n);
  pos_ += n;
  return s;
}

std::uint8_t ByteReader::u8() { return take(1)[0]; }

std::uint32_t ByteReader::u32() {
  std::uint32_t v = 0;
  for (auto b : take(4)) v = (v << 8) | b;
  return v;
}

std::uint64_t ByteReader::u64() {
  std::uint64_t v = 0;
  for (auto b : take(8)) v = (v << 8) | b;
  return v;
}

Bits ByteReader::bits() {
  const std::uint32_t n = u32();
  // Trailing pad bits must be zero for a canonical encoding.
  auto bytes = take((static_cast<std::size_t>(n) + 7) / 8);
  if (n % 8 != 0 && (bytes.back() & (0xffu >> (n % 8))) != 0) {
    throw std::out_of_range("ByteReader: nonzero padding bits");
  }
  return unpack_bits(bytes, n);
}

BasisString ByteReader::bases() { return bases_from_bits(bits()); }

}  // namespace bqsm
