#include "bqsm/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "bqsm/errors.hpp"

namespace bqsm {

int Univariate::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Elem Univariate::eval(const GF2m& field, Elem x) const {
  Elem acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = field.mul(acc, x) ^ coeffs[i];
  return acc;
}

std::vector<Elem> interpolation_nodes(std::size_t count) {
  std::vector<Elem> nodes(count);
  for (std::size_t i = 0; i < count; ++i) nodes[i] = i;
  return nodes;
}

Univariate interpolate(const GF2m& field, std::span<const Elem> values) {
  const std::size_t k = values.size();
  const auto nodes = interpolation_nodes(k);
  Univariate out{std::vector<Elem>(k, 0)};
  for (std::size_t j = 0; j < k; ++j) {
    // Basis polynomial prod_{i != j} (X - x_i) / (x_j - x_i).
    std::vector<Elem> basis{1};
    Elem denom = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == j) continue;
      std::vector<Elem> next(basis.size() + 1, 0);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] ^= basis[t];
        next[t] ^= field.mul(basis[t], nodes[i]);
      }
      basis = std::move(next);
      denom = field.mul(denom, nodes[j] ^ nodes[i]);
    }
    const Elem scale = field.mul(values[j], field.inv(denom));
    for (std::size_t t = 0; t < k; ++t) out.coeffs[t] ^= field.mul(basis[t], scale);
  }
  return out;
}

MultivariatePolynomial::MultivariatePolynomial(GF2m field, std::size_t n_vars) : field_(field), n_vars_(n_vars) {}

std::size_t MultivariatePolynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) {
    for (auto v : e) d = std::max<std::size_t>(d, v);
  }
  return d;
}

void MultivariatePolynomial::add_term(const Exponents& e, Elem coef) {
  if (e.size() != n_vars_) throw std::invalid_argument("add_term: exponent vector has wrong length");
  if (!field_.contains(coef)) throw std::invalid_argument("add_term: coefficient outside the field");
  const Elem v = terms_[e] ^ coef;
  if (v == 0) {
    terms_.erase(e);
  } else {
    terms_[e] = v;
  }
}

Elem MultivariatePolynomial::eval(std::span<const Elem> point) const {
  if (point.size() != n_vars_) throw std::invalid_argument("eval: point has wrong dimension");
  Elem acc = 0;
  for (const auto& [e, c] : terms_) {
    Elem t = c;
    for (std::size_t j = 0; j < n_vars_ && t != 0; ++j) {
      if (e[j] != 0) t = field_.mul(t, field_.pow(point[j], e[j]));
    }
    acc ^= t;
  }
  return acc;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view s, T& out, int base) {
  if (base == 16 && s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out, base);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

MultivariatePolynomial MultivariatePolynomial::parse(std::string_view text, unsigned default_field_bits) {
  unsigned field_bits = default_field_bits;
  long long vars = -1;
  struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
  };
  std::vector<Line> monomials;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    ++lineno;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tokens[0] == "field" || tokens[0] == "vars") {
      if (!monomials.empty()) throw ParseError(lineno, "header after monomials");
      unsigned long v = 0;
      if (tokens.size() != 2 || !parse_number(tokens[1], v, 10)) throw ParseError(lineno, "malformed header");
      if (tokens[0] == "field") {
        if (v < kMinFieldBits || v > kMaxFieldBits) throw ParseError(lineno, "field exponent out of range");
        field_bits = static_cast<unsigned>(v);
      } else {
        vars = static_cast<long long>(v);
      }
    } else {
      monomials.push_back({lineno, std::move(tokens)});
    }
    if (end == text.size()) break;
  }
  if (vars < 0) vars = monomials.empty() ? 0 : static_cast<long long>(monomials.front().tokens.size()) - 1;
  MultivariatePolynomial f(GF2m(field_bits), static_cast<std::size_t>(vars));
  for (const auto& m : monomials) {
    if (m.tokens.size() != static_cast<std::size_t>(vars) + 1) {
      throw ParseError(m.number, "expected " + std::to_string(vars) + " exponents and a coefficient");
    }
    Exponents e(static_cast<std::size_t>(vars));
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (!parse_number(m.tokens[j], e[j], 10)) throw ParseError(m.number, "bad exponent");
    }
    Elem c = 0;
    if (!parse_number(m.tokens.back(), c, 16)) throw ParseError(m.number, "bad hex coefficient");
    if (!f.field().contains(c)) throw ParseError(m.number, "coefficient outside the field");
    f.add_term(e, c);
  }
  return f;
}

std::string MultivariatePolynomial::serialize() const {
  std::ostringstream os;
  os << "field " << field_.bits() << "\n";
  os << "vars " << n_vars_ << "\n";
  for (const auto& [e, c] : terms_) {
    for (auto v : e) os << v << ' ';
    os << "0x" << std::hex << c << std::dec << "\n";
  }
  return os.str();
}

MultivariatePolynomial random_polynomial(const GF2m& field, std::size_t n_vars, std::size_t d, double density,
                                         RandomSource& rng) {
  MultivariatePolynomial f(field, n_vars);
  MultivariatePolynomial::Exponents e(n_vars, 0);
  const std::uint64_t scale = 1u << 20;
  const auto threshold = static_cast<std::uint64_t>(density * static_cast<double>(scale));
  while (true) {
    if (rng.below(scale) < threshold) f.add_term(e, field.random(rng));
    std::size_t j = 0;
    while (j < n_vars && e[j] == d) e[j++] = 0;
    if (j == n_vars) break;
    ++e[j];
  }
  return f;
}

}  // namespace bqsm
