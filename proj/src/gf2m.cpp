#include "bqsm/gf2m.hpp"

#include <array>
#include <bit>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace bqsm {
namespace {

std::uint64_t from_terms(std::initializer_list<unsigned> terms) {
  std::uint64_t p = 0;
  for (unsigned t : terms) p |= std::uint64_t{1} << t;
  return p;
}

// Low-weight irreducible polynomials, one per degree 8..61 (terms listed by
// exponent). Each entry is re-checked by is_irreducible in the unit tests.
const std::array<std::uint64_t, 54>& table() {
  static const std::array<std::uint64_t, 54> t = {
      from_terms({8, 4, 3, 1, 0}),  from_terms({9, 1, 0}),        from_terms({10, 3, 0}),
      from_terms({11, 2, 0}),       from_terms({12, 3, 0}),       from_terms({13, 4, 3, 1, 0}),
      from_terms({14, 5, 0}),       from_terms({15, 1, 0}),       from_terms({16, 5, 3, 1, 0}),
      from_terms({17, 3, 0}),       from_terms({18, 3, 0}),       from_terms({19, 5, 2, 1, 0}),
      from_terms({20, 3, 0}),       from_terms({21, 2, 0}),       from_terms({22, 1, 0}),
      from_terms({23, 5, 0}),       from_terms({24, 4, 3, 1, 0}), from_terms({25, 3, 0}),
      from_terms({26, 4, 3, 1, 0}), from_terms({27, 5, 2, 1, 0}), from_terms({28, 1, 0}),
      from_terms({29, 2, 0}),       from_terms({30, 1, 0}),       from_terms({31, 3, 0}),
      from_terms({32, 7, 3, 2, 0}), from_terms({33, 10, 0}),      from_terms({34, 7, 0}),
      from_terms({35, 2, 0}),       from_terms({36, 9, 0}),       from_terms({37, 6, 4, 1, 0}),
      from_terms({38, 6, 5, 1, 0}), from_terms({39, 4, 0}),       from_terms({40, 5, 4, 3, 0}),
      from_terms({41, 3, 0}),       from_terms({42, 7, 0}),       from_terms({43, 6, 4, 3, 0}),
      from_terms({44, 5, 0}),       from_terms({45, 4, 3, 1, 0}), from_terms({46, 1, 0}),
      from_terms({47, 5, 0}),       from_terms({48, 5, 3, 2, 0}), from_terms({49, 9, 0}),
      from_terms({50, 4, 3, 2, 0}), from_terms({51, 6, 3, 1, 0}), from_terms({52, 3, 0}),
      from_terms({53, 6, 2, 1, 0}), from_terms({54, 9, 0}),       from_terms({55, 7, 0}),
      from_terms({56, 7, 4, 2, 0}), from_terms({57, 4, 0}),       from_terms({58, 19, 0}),
      from_terms({59, 7, 4, 2, 0}), from_terms({60, 1, 0}),       from_terms({61, 5, 2, 1, 0}),
  };
  return t;
}

int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

// Polynomial arithmetic over GF(2) modulo f of degree m <= 62.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f, unsigned m) {
  const std::uint64_t top = std::uint64_t{1} << m;
  std::uint64_t r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= f;
  }
  return r;
}

std::uint64_t gcd_poly(std::uint64_t a, std::uint64_t b) {
  while (b) {
    while (a && degree(a) >= degree(b)) a ^= b << (degree(a) - degree(b));
    std::swap(a, b);
  }
  return a;
}

}  // namespace

std::uint64_t irreducible_poly(unsigned m) {
  if (m < kMinFieldBits || m > kMaxFieldBits) {
    throw std::invalid_argument("field exponent must be in [8, 61], got " + std::to_string(m));
  }
  return table()[m - kMinFieldBits];
}

bool is_irreducible(std::uint64_t poly, unsigned m) {
  if (m == 0 || m > 62 || degree(poly) != static_cast<int>(m)) return false;
  // x^{2^k} mod f by repeated squaring of x.
  auto frobenius = [&](unsigned k) {
    std::uint64_t y = 2;  // x
    for (unsigned i = 0; i < k; ++i) y = mulmod(y, y, poly, m);
    return y;
  };
  if (frobenius(m) != 2) return false;
  unsigned rest = m;
  for (unsigned p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    const std::uint64_t g = gcd_poly(poly, frobenius(m / p) ^ 2);
    if (degree(g) != 0) return false;
  }
  return true;
}

GF2m::GF2m(unsigned m) : m_(m), poly_(irreducible_poly(m)), top_(std::uint64_t{1} << m) {}

GF2m::Elem GF2m::mul(Elem a, Elem b) const {
  Elem r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top_) a ^= poly_;
  }
  return r;
}

GF2m::Elem GF2m::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

GF2m::Elem GF2m::inv(Elem a) const {
  if (a == 0) throw std::domain_error("GF2m::inv: zero has no inverse");
  return pow(a, size() - 2);
}

}  // namespace bqsm
