#pragma once

#include <map>
#include <vector>

#include "edgeal/graph.hpp"
#include "edgeal/integer_rank.hpp"

namespace edgeal {

/// Finite abstract simplicial complex on vertices 0..31, stored by its facets.
/// The void complex has no faces at all; the irrelevant complex has only the
/// empty face. Both are distinct from each other and from a point.
class SimplicialComplex {
 public:
  /// The void complex.
  SimplicialComplex() = default;

  static SimplicialComplex void_complex() { return {}; }
  static SimplicialComplex irrelevant() { return from_facets({VertexSet{}}); }
  static SimplicialComplex simplex(VertexSet vertices) { return from_facets({vertices}); }
  /// Keeps the inclusion-maximal sets; an empty list gives the void complex.
  static SimplicialComplex from_facets(std::vector<VertexSet> facets);

  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_[0].empty(); }
  const std::vector<VertexSet>& facets() const { return facets_; }
  VertexSet vertex_set() const;
  /// -1 for the irrelevant complex, -2 for the void complex.
  int dimension() const;
  bool contains(VertexSet face) const;

  /// Every face, ordered by size then bitset value.
  std::vector<VertexSet> faces() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<VertexSet> facets_;  // sorted, pairwise incomparable
};

/// Nonzero reduced homology ranks keyed by dimension. The irrelevant complex
/// has rank 1 in dimension -1; the void complex has no homology.
std::map<int, std::size_t> reduced_homology_ranks(const SimplicialComplex& k, Field f = {});

/// Same, from an explicit downward-closed face list (no validation).
std::map<int, std::size_t> reduced_homology_from_faces(const std::vector<VertexSet>& faces, Field f = {});

/// Reduced Euler characteristic sum_d (-1)^d f_d, counting the empty face in
/// dimension -1.
long reduced_euler_characteristic(const std::vector<VertexSet>& faces);

}  // namespace edgeal
