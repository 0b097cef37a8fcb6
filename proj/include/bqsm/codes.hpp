#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bqsm/bits.hpp"

namespace bqsm {

/// Generator matrix of a binary linear [N, n, d] code, stored as N rows of n
/// bits so that the codeword of a is G * a.
class GeneratorMatrix {
 public:
  /// Checks shape and rank n. The minimum distance is computed by enumerating
  /// all 2^n codewords, so n is limited to 24.
  explicit GeneratorMatrix(std::vector<Bits> rows, std::string name = "custom");

  static GeneratorMatrix repetition(std::size_t N);
  /// [n, n, 1]; makes the code-basis commitment a plain bitwise DFSS string commitment.
  static GeneratorMatrix identity(std::size_t n);
  /// [7, 4, 3] Hamming code.
  static GeneratorMatrix hamming7_4();
  /// [8, 4, 4] extended Hamming code.
  static GeneratorMatrix extended_hamming8_4();
  /// [15, 7, 5] and [15, 5, 7] narrow-sense BCH codes (cyclic, from their generator polynomials).
  static GeneratorMatrix bch15_7();
  static GeneratorMatrix bch15_5();
  /// Looks up a library code by name: "rep<N>", "id<n>", "hamming7", "ehamming8", "bch15-7", "bch15-5".
  static GeneratorMatrix by_name(const std::string& name);

  std::size_t N() const { return rows_.size(); }
  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  const std::string& name() const { return name_; }
  const std::vector<Bits>& rows() const { return rows_; }

  Bits encode(std::span<const std::uint8_t> a) const;

 private:
  std::vector<Bits> rows_;
  std::size_t n_ = 0;
  std::size_t d_ = 0;
  std::string name_;
};

/// Rank of a set of equal-length bit vectors over GF(2).
std::size_t gf2_rank(std::vector<Bits> vectors);

/// Cyclic code of length N generated by the polynomial whose coefficient of
/// x^i is bit i of `generator`.
GeneratorMatrix cyclic_code(std::size_t N, std::uint64_t generator, std::string name);

}  // namespace bqsm
