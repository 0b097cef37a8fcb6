#pragma once

#include <cstdint>
#include <vector>

#include "bqsm/random.hpp"

namespace bqsm {

/// Supported extension degrees.
inline constexpr unsigned kMinFieldBits = 8;
inline constexpr unsigned kMaxFieldBits = 61;
inline constexpr unsigned kDefaultFieldBits = 16;

/// Irreducible polynomial of degree m over GF(2) from the built-in table,
/// including the x^m term (bit i = coefficient of x^i).
std::uint64_t irreducible_poly(unsigned m);

/// Rabin's test: x^{2^m} = x mod f and gcd(x^{2^{m/p}} - x, f) = 1 for every
/// prime p dividing m. `poly` must have degree exactly m (m <= 62).
bool is_irreducible(std::uint64_t poly, unsigned m);

/// GF(2^m) with elements encoded as polynomials in x (bit i = coefficient of x^i).
class GF2m {
 public:
  using Elem = std::uint64_t;

  explicit GF2m(unsigned m = kDefaultFieldBits);

  unsigned bits() const { return m_; }
  std::uint64_t modulus() const { return poly_; }
  /// |H| = 2^m.
  std::uint64_t size() const { return std::uint64_t{1} << m_; }
  bool contains(Elem a) const { return (a >> m_) == 0; }

  static Elem add(Elem a, Elem b) { return a ^ b; }
  static Elem sub(Elem a, Elem b) { return a ^ b; }
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// Throws std::domain_error for 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem random(RandomSource& rng) const { return rng.below(size()); }

  bool operator==(const GF2m& o) const { return m_ == o.m_; }

 private:
  unsigned m_;
  std::uint64_t poly_;
  std::uint64_t top_;  // x^m
};

}  // namespace bqsm
