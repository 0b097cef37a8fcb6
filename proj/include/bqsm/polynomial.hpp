#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bqsm/gf2m.hpp"

namespace bqsm {

using Elem = GF2m::Elem;

/// Univariate polynomial over GF(2^m); coefficient i multiplies X^i.
struct Univariate {
  std::vector<Elem> coeffs;

  /// Index of the highest nonzero coefficient, -1 for the zero polynomial.
  int degree() const;
  Elem eval(const GF2m& field, Elem x) const;
  bool operator==(const Univariate&) const = default;
};

/// Interpolation nodes 0, 1, ..., count-1 read as field elements.
std::vector<Elem> interpolation_nodes(std::size_t count);

/// Unique polynomial of degree < |values| through (node_j, values[j]).
Univariate interpolate(const GF2m& field, std::span<const Elem> values);

/// Multivariate polynomial stored as a sparse map exponent-vector -> coefficient.
class MultivariatePolynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;

  MultivariatePolynomial(GF2m field, std::size_t n_vars);

  const GF2m& field() const { return field_; }
  std::size_t n_vars() const { return n_vars_; }
  /// Largest exponent of any single variable.
  std::size_t degree() const;
  const std::map<Exponents, Elem>& terms() const { return terms_; }

  /// Adds coef * prod x_j^{e_j}; zero results are dropped.
  void add_term(const Exponents& e, Elem coef);
  Elem eval(std::span<const Elem> point) const;

  /// Text format: optional "field <m>" and "vars <n>" header lines, then one
  /// monomial per line as "<e_1> ... <e_n> <coef-hex>". '#' starts a comment.
  static MultivariatePolynomial parse(std::string_view text, unsigned default_field_bits = kDefaultFieldBits);
  std::string serialize() const;

  bool operator==(const MultivariatePolynomial& o) const {
    return field_ == o.field_ && n_vars_ == o.n_vars_ && terms_ == o.terms_;
  }

 private:
  GF2m field_;
  std::size_t n_vars_;
  std::map<Exponents, Elem> terms_;
};

/// Random polynomial with every monomial of per-variable degree <= d present
/// with probability `density`.
MultivariatePolynomial random_polynomial(const GF2m& field, std::size_t n_vars, std::size_t d, double density,
                                         RandomSource& rng);

}  // namespace bqsm
