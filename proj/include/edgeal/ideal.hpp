#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "edgeal/graph.hpp"
#include "edgeal/monomial.hpp"
#include "json.hpp"

namespace edgeal {

/// Monomial ideal held by its minimal generating set G(I), sorted by
/// canonical_less. Two ideals are equal iff their generator lists are equal.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Zero ideal in n variables.
  explicit MonomialIdeal(int n);
  /// Minimises the given generators.
  MonomialIdeal(int n, std::vector<Monomial> gens);

  static MonomialIdeal unit(int n) { return MonomialIdeal(n, {Monomial(n)}); }
  /// (x_i : i in vars).
  static MonomialIdeal prime(int n, VertexSet vars);

  int ambient() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_squarefree() const;

  /// Largest exponent of each variable among the generators.
  Monomial exponent_bound() const;

  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal, canonically ordered generating set.
std::vector<Monomial> minimize(std::vector<Monomial> gens);

MonomialIdeal edge_ideal(const Graph& g);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// a^s for s >= 0; a^0 is the unit ideal.
MonomialIdeal power(const MonomialIdeal& a, int s);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& u);
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);
inline bool equals(const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; }

/// Variables contained in the ideal, i.e. its degree-one generators.
VertexSet variables_in(const MonomialIdeal& a);

/// Minimal primes of a squarefree monomial ideal, as variable sets sorted by
/// bitset value (the minimal transversals of the generator supports). The
/// zero ideal has the single prime (0), returned as the empty set; the unit
/// ideal has none. Throws std::invalid_argument if a is not squarefree.
std::vector<VertexSet> minimal_primes(const MonomialIdeal& a);

/// "(x1*x2, x2*x3)"; zero ideal "(0)", unit ideal "(1)".
std::string to_string(const MonomialIdeal& a);
MonomialIdeal parse_ideal(std::string_view text, int n);

/// Exponent vectors as integer arrays: {"n": 3, "gens": [[1,1,0], ...]}.
nlohmann::json to_json(const MonomialIdeal& a);
nlohmann::json to_json(const Monomial& m);

}  // namespace edgeal
