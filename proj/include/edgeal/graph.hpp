#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edgeal {

inline constexpr int kMaxVertices = 32;

/// Subset of {0, ..., n-1} packed into one machine word. Vertex i is the
/// variable x_{i+1}.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint32_t{1} << v); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr void insert(int v) { bits_ |= std::uint32_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint32_t{1} << v); }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

  /// Ascending vertex indices.
  std::vector<int> members() const;

  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  constexpr auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on at most 32 vertices. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Throws std::invalid_argument on loops or endpoints out of range.
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[static_cast<std::size_t>(v)]); }
  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
  int degree(int v) const { return neighbors(v).size(); }
  int edge_count() const;
  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  Graph with_edge(int u, int v) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::array<std::uint32_t, kMaxVertices> adj_{};
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;  // original[new vertex] = old vertex
};

Graph complement(const Graph& g);
bool is_chordal(const Graph& g);
bool is_bipartite(const Graph& g);
/// Length of a shortest odd cycle; nullopt when the graph is bipartite.
std::optional<int> odd_girth(const Graph& g);
bool is_gap_free(const Graph& g);
/// Two disjoint edges inducing exactly themselves, if any.
std::optional<std::pair<Edge, Edge>> find_gap(const Graph& g);
/// Sorted by bitset value.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g);
/// Maximal independent sets, sorted by bitset value.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

bool is_vertex_cover(const Graph& g, VertexSet c);

/// All permutations are applied as new_label = perm[old_label].
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Bits of the upper triangle in graph6 order, first pair most significant.
/// Only meaningful for n <= 11.
std::uint64_t adjacency_key(const Graph& g);

/// Canonical relabeling by exhaustive minimisation of adjacency_key over
/// permutations that respect the colour-refinement partition.
Graph canonical_form(const Graph& g);
/// Same canonical-class semantics by minimisation over all n! permutations.
/// Test oracle; n <= 8.
Graph canonical_form_exhaustive(const Graph& g);

/// Graph identifier used in reports: graph6 of the canonical form for
/// n <= 8, of the graph itself otherwise.
std::string graph_id(const Graph& g);

}  // namespace edgeal
