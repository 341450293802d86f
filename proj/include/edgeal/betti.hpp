#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "edgeal/deadline.hpp"
#include "edgeal/homology.hpp"
#include "edgeal/ideal.hpp"
#include "json.hpp"

namespace edgeal {

/// Regularity (or a Betti table) requested for an ideal where it is not
/// defined by this toolkit: the zero ideal or the unit ideal.
class RegularityUndefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct BettiOptions {
  Field field{};
  Deadline deadline{};
};

struct BettiEntry {
  int i = 0;             // homological index
  Monomial degree;       // multidegree b
  std::size_t rank = 0;  // beta_{i,b}, always positive

  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/// Nonzero multigraded Betti numbers of a monomial ideal I (as an S-module),
/// sorted by (i, total degree, multidegree in canonical order).
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(int n, std::vector<BettiEntry> entries);

  int ambient() const { return n_; }
  const std::vector<BettiEntry>& entries() const { return entries_; }
  std::size_t rank(int i, const Monomial& b) const;
  /// Coarse graded numbers beta_{i,j}, j the total degree.
  std::map<std::pair<int, int>, std::size_t> graded() const;
  /// max { |b| - i : beta_{i,b} != 0 }.
  int regularity() const;
  /// Largest homological index with a nonzero entry.
  int projective_dimension() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int n_ = 0;
  std::vector<BettiEntry> entries_;
};

/// Closure of the generators under lcm. Throws RegularityUndefined for the
/// zero ideal.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& a, const Deadline& deadline = {});

/// Faces: squarefree F inside supp(b) with x^{b - F} in a.
SimplicialComplex upper_koszul(const MonomialIdeal& a, const Monomial& b);

/// beta_{i,b}(a) = dim reduced H_{i-1}(upper_koszul(a, b)) over every b in the
/// lcm lattice. Degrees are processed in parallel with OpenMP; the table does
/// not depend on the schedule. Throws RegularityUndefined for the zero ideal
/// and TimeoutError when the deadline passes.
BettiTable betti_table(const MonomialIdeal& a, const BettiOptions& opts = {});
/// Single-threaded reference of betti_table.
BettiTable betti_table_serial(const MonomialIdeal& a, const BettiOptions& opts = {});

/// Throws RegularityUndefined for the zero and the unit ideal.
int regularity(const MonomialIdeal& a, const BettiOptions& opts = {});

inline constexpr std::size_t kTaylorMaxGenerators = 12;

/// Independent route through the Taylor resolution: in multidegree b the
/// Tor complex has a basis of the nonempty generator subsets with lcm
/// exactly b. Throws std::invalid_argument beyond 12 generators.
BettiTable taylor_betti_oracle(const MonomialIdeal& a, const BettiOptions& opts = {});

/// [{"i", "multidegree", "total_degree", "rank"}, ...] in table order.
nlohmann::json to_json(const BettiTable& t);

}  // namespace edgeal
