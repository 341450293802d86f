#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "edgeal/graph.hpp"

namespace edgeal {

/// Exponent overflow beyond the 16-bit storage.
class ExponentOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Ambient-size mismatch between operands.
class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Monomial x_1^{e_1} ... x_n^{e_n} in a polynomial ring with n <= 32
/// variables. Slot i holds deg_{x_{i+1}}. Slots at and beyond n are zero.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  /// The monomial 1 in n variables.
  explicit Monomial(int n);
  Monomial(int n, std::initializer_list<int> exps);
  Monomial(int n, std::span<const int> exps);

  static Monomial variable(int n, int i);
  static Monomial squarefree(int n, VertexSet support);
  static Monomial edge(int n, Edge e) { return squarefree(n, VertexSet::single(e.u) | VertexSet::single(e.v)); }

  int ambient() const { return n_; }
  Exponent operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  Exponent& operator[](int i) { return exps_[static_cast<std::size_t>(i)]; }
  std::span<const Exponent> exponents() const { return {exps_.data(), static_cast<std::size_t>(n_)}; }

  int degree() const;
  VertexSet support() const;
  bool is_one() const { return degree() == 0; }
  bool is_squarefree() const;

  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<Exponent, kMaxVertices> exps_{};
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// a / gcd(a, b): the generator of ((a) : b).
Monomial colon(const Monomial& a, const Monomial& b);
/// Exact quotient; throws std::invalid_argument when b does not divide a.
Monomial divide(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& a, int k);

/// Canonical total order: lower total degree first, then lexicographically
/// larger exponent vector first (x1^2 < x1*x2 < x2^2).
bool canonical_less(const Monomial& a, const Monomial& b);

struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return canonical_less(a, b); }
};

/// "x1^2*x3"; the unit monomial prints as "1".
std::string to_string(const Monomial& m);
/// Inverse of to_string. Throws std::invalid_argument on malformed text or a
/// variable index outside 1..n.
Monomial parse_monomial(std::string_view text, int n);

}  // namespace edgeal
