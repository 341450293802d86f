#pragma once

#include <vector>

#include "edgeal/graph.hpp"
#include "edgeal/ideal.hpp"
#include "edgeal/monomial.hpp"

namespace edgeal {

/// The minimal primes of a squarefree monomial ideal, each given by its
/// variable set. For an edge ideal these are the minimal vertex covers.
/// Covers are pairwise incomparable and sorted by bitset value. {empty set}
/// describes the zero ideal; an empty list describes the unit ideal.
struct CoverSystem {
  int n = 0;
  std::vector<VertexSet> covers;

  friend bool operator==(const CoverSystem&, const CoverSystem&) = default;
};

CoverSystem cover_system(const Graph& g);
/// Throws std::invalid_argument unless a is squarefree.
CoverSystem cover_system(const MonomialIdeal& a);

/// m lies in the s-th symbolic power iff every cover C satisfies
/// sum_{i in C} deg_{x_i}(m) >= s. Throws std::invalid_argument for s < 1.
bool symbolic_member(const CoverSystem& cs, const Monomial& m, int s);

/// The <=-minimal nonnegative integer vectors satisfying every covering
/// inequality sum_{i in C} e_i >= s, in canonical order. Every coordinate of
/// a minimal solution is at most s.
std::vector<Monomial> minimal_solutions(const CoverSystem& cs, int s);

/// s-th symbolic power as the intersection of the s-th powers of the primes.
/// Memoised per (cover system, s); safe to call concurrently.
MonomialIdeal symbolic_power(const CoverSystem& cs, int s);
MonomialIdeal symbolic_power(const Graph& g, int s);
/// Symbolic power of a squarefree monomial ideal.
MonomialIdeal symbolic_power(const MonomialIdeal& squarefree, int s);

inline constexpr int kOracleMaxOrder = 7;
inline constexpr int kOracleMaxPower = 4;

/// Independent route: vertex covers by subset enumeration, then the explicit
/// intersection of the ideals p_C^s generated by all degree-s monomials in
/// the cover's variables. Throws std::invalid_argument beyond n <= 7, s <= 4.
MonomialIdeal symbolic_power_oracle(const Graph& g, int s);

/// Drops every memoised symbolic power.
void clear_symbolic_cache();

}  // namespace edgeal
