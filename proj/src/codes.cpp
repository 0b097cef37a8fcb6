#include "bqsm/codes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bqsm {

std::size_t gf2_rank(std::vector<Bits> vectors) {
  std::size_t rank = 0;
  if (vectors.empty()) return 0;
  const std::size_t width = vectors.front().size();
  for (std::size_t col = 0; col < width && rank < vectors.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < vectors.size() && !vectors[pivot][col]) ++pivot;
    if (pivot == vectors.size()) continue;
    std::swap(vectors[rank], vectors[pivot]);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
      if (r != rank && vectors[r][col]) {
        for (std::size_t j = 0; j < width; ++j) vectors[r][j] ^= vectors[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

GeneratorMatrix::GeneratorMatrix(std::vector<Bits> rows, std::string name)
    : rows_(std::move(rows)), name_(std::move(name)) {
  if (rows_.empty()) throw std::invalid_argument("GeneratorMatrix: no rows");
  n_ = rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != n_) throw std::invalid_argument("GeneratorMatrix: ragged rows");
  }
  if (n_ == 0 || n_ > 24) throw std::invalid_argument("GeneratorMatrix: n must be in [1, 24]");
  if (rows_.size() > 64) throw std::invalid_argument("GeneratorMatrix: N must be at most 64");
  // Column j of G as an N-bit word; rank of G equals rank of its columns.
  std::vector<std::uint64_t> cols(n_, 0);
  std::vector<Bits> col_bits(n_, Bits(rows_.size()));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (rows_[i][j]) {
        cols[j] |= std::uint64_t{1} << i;
        col_bits[j][i] = 1;
      }
    }
  }
  if (gf2_rank(col_bits) != n_) throw std::invalid_argument("GeneratorMatrix: rank is below n");
  // Gray-code walk over all nonzero messages.
  std::size_t best = rows_.size();
  std::uint64_t word = 0;
  for (std::uint64_t g = 1; g < (std::uint64_t{1} << n_); ++g) {
    word ^= cols[std::countr_zero(g)];
    best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(word)));
  }
  d_ = best;
}

GeneratorMatrix GeneratorMatrix::repetition(std::size_t N) {
  return GeneratorMatrix(std::vector<Bits>(N, Bits{1}), "rep" + std::to_string(N));
}

GeneratorMatrix GeneratorMatrix::identity(std::size_t n) {
  std::vector<Bits> rows(n, Bits(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return GeneratorMatrix(std::move(rows), "id" + std::to_string(n));
}

GeneratorMatrix GeneratorMatrix::hamming7_4() {
  // Systematic form: data bits then parity bits.
  return GeneratorMatrix({{1, 0, 0, 0},
                          {0, 1, 0, 0},
                          {0, 0, 1, 0},
                          {0, 0, 0, 1},
                          {1, 1, 0, 1},
                          {1, 0, 1, 1},
                          {0, 1, 1, 1}},
                         "hamming7");
}

GeneratorMatrix GeneratorMatrix::extended_hamming8_4() {
  auto rows = hamming7_4().rows();
  rows.push_back({1, 1, 1, 0});  // overall parity
  return GeneratorMatrix(std::move(rows), "ehamming8");
}

GeneratorMatrix cyclic_code(std::size_t N, std::uint64_t generator, std::string name) {
  const int deg = 63 - std::countl_zero(generator);
  if (generator == 0 || static_cast<std::size_t>(deg) >= N) throw std::invalid_argument("cyclic_code: bad generator");
  const std::size_t n = N - static_cast<std::size_t>(deg);
  std::vector<Bits> rows(N, Bits(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (int t = 0; t <= deg; ++t) {
      if ((generator >> t) & 1u) rows[j + static_cast<std::size_t>(t)][j] = 1;
    }
  }
  return GeneratorMatrix(std::move(rows), std::move(name));
}

GeneratorMatrix GeneratorMatrix::bch15_7() { return cyclic_code(15, 0x1D1, "bch15-7"); }
GeneratorMatrix GeneratorMatrix::bch15_5() { return cyclic_code(15, 0x537, "bch15-5"); }

GeneratorMatrix GeneratorMatrix::by_name(const std::string& name) {
  if (name == "hamming7") return hamming7_4();
  if (name == "ehamming8") return extended_hamming8_4();
  if (name == "bch15-7") return bch15_7();
  if (name == "bch15-5") return bch15_5();
  auto numeric = [&](std::size_t prefix) -> std::size_t {
    const std::string rest = name.substr(prefix);
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("unknown code: " + name);
    }
    return static_cast<std::size_t>(std::stoul(rest));
  };
  if (name.rfind("rep", 0) == 0) return repetition(numeric(3));
  if (name.rfind("id", 0) == 0) return identity(numeric(2));
  throw std::invalid_argument("unknown code: " + name);
}

Bits GeneratorMatrix::encode(std::span<const std::uint8_t> a) const {
  if (a.size() != n_) throw std::invalid_argument("encode: message length != n");
  Bits out(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint8_t acc = 0;
    for (std::size_t j = 0; j < n_; ++j) acc ^= rows_[i][j] & a[j];
    out[i] = acc & 1u;
  }
  return out;
}

}  // namespace bqsm
