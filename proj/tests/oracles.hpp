// Brute-force reference implementations used only by the tests. Each one
// takes the most direct route from the definition and shares no code with
// the library beyond the basic value types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "edgeal/graph.hpp"
#include "edgeal/ideal.hpp"
#include "edgeal/monomial.hpp"

namespace oracle {

using edgeal::Edge;
using edgeal::Graph;
using edgeal::Monomial;
using edgeal::MonomialIdeal;
using edgeal::VertexSet;

inline bool adjacent(const Graph& g, int a, int b) { return g.neighbors(a).contains(b); }

// Calls visit on every exponent vector with 0 <= e_i <= bound[i].
inline void for_each_bounded(const std::vector<int>& bound, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> e(bound.size(), 0);
  while (true) {
    visit(e);
    std::size_t i = 0;
    while (i < e.size() && e[i] == bound[i]) e[i++] = 0;
    if (i == e.size()) return;
    ++e[i];
  }
}

inline bool divides(const std::vector<int>& a, const Monomial& m) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > m[static_cast<int>(i)]) return false;
  return true;
}

inline bool member(const MonomialIdeal& a, const std::vector<int>& e) {
  for (const Monomial& g : a.gens()) {
    bool ok = true;
    for (std::size_t i = 0; i < e.size() && ok; ++i) ok = g[static_cast<int>(i)] <= e[i];
    if (ok) return true;
  }
  return false;
}

// Minimal elements (under componentwise order) of a finite set of vectors.
inline std::vector<std::vector<int>> minimal_vectors(const std::vector<std::vector<int>>& vs) {
  std::vector<std::vector<int>> out;
  for (const auto& v : vs) {
    bool minimal = true;
    for (const auto& w : vs) {
      if (w == v) continue;
      bool le = true;
      for (std::size_t i = 0; i < v.size() && le; ++i) le = w[i] <= v[i];
      if (le) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(v);
  }
  return out;
}

inline MonomialIdeal ideal_from_vectors(int n, const std::vector<std::vector<int>>& vs) {
  std::vector<Monomial> gens;
  for (const auto& v : vs) gens.emplace_back(n, std::span<const int>(v));
  return MonomialIdeal(n, gens);
}

// (a : u) by membership: m is in the colon iff m*u is in a. Generators of the
// colon never need exponents beyond those of a's generators.
inline MonomialIdeal colon(const MonomialIdeal& a, const Monomial& u) {
  const int n = a.ambient();
  std::vector<int> bound(static_cast<std::size_t>(n), 0);
  for (const Monomial& g : a.gens())
    for (int i = 0; i < n; ++i) bound[static_cast<std::size_t>(i)] = std::max<int>(bound[static_cast<std::size_t>(i)], g[i]);
  std::vector<std::vector<int>> members;
  for_each_bounded(bound, [&](const std::vector<int>& e) {
    std::vector<int> prod(e);
    for (int i = 0; i < n; ++i) prod[static_cast<std::size_t>(i)] += u[i];
    if (member(a, prod)) members.push_back(e);
  });
  return ideal_from_vectors(n, minimal_vectors(members));
}

inline bool is_cover(const Graph& g, std::uint32_t c) {
  for (Edge e : g.edges())
    if (!((c >> e.u) & 1U) && !((c >> e.v) & 1U)) return false;
  return true;
}

// Minimal vertex covers by subset enumeration, sorted by bit value.
inline std::vector<VertexSet> minimal_covers(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> out;
  for (std::uint32_t c = 0; c < (std::uint32_t{1} << n); ++c) {
    if (!is_cover(g, c)) continue;
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v)
      if (((c >> v) & 1U) && is_cover(g, c & ~(std::uint32_t{1} << v))) minimal = false;
    if (minimal) out.push_back(VertexSet(c));
  }
  return out;
}

// Vertex subset induces a chordless cycle: connected and 2-regular.
inline bool induces_cycle(const Graph& g, std::uint32_t s) {
  std::vector<int> vs;
  for (int v = 0; v < g.order(); ++v)
    if ((s >> v) & 1U) vs.push_back(v);
  for (int v : vs) {
    int deg = 0;
    for (int w : vs) deg += adjacent(g, v, w);
    if (deg != 2) return false;
  }
  std::uint32_t seen = std::uint32_t{1} << vs[0];
  std::vector<int> stack{vs[0]};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : vs)
      if (adjacent(g, v, w) && !((seen >> w) & 1U)) {
        seen |= std::uint32_t{1} << w;
        stack.push_back(w);
      }
  }
  return seen == s;
}

inline bool chordal(const Graph& g) {
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << g.order()); ++s)
    if (std::popcount(s) >= 4 && induces_cycle(g, s)) return false;
  return true;
}

inline bool two_colorable(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (int start = 0; start < g.order(); ++start) {
    if (color[static_cast<std::size_t>(start)] >= 0) continue;
    color[static_cast<std::size_t>(start)] = 0;
    std::deque<int> q{start};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w = 0; w < g.order(); ++w) {
        if (!adjacent(g, v, w)) continue;
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - color[static_cast<std::size_t>(v)];
          q.push_back(w);
        } else if (cw == color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Shortest odd closed walk through BFS on the bipartite double cover; its
// length is the odd girth.
inline std::optional<int> odd_girth(const Graph& g) {
  const int n = g.order();
  std::optional<int> best;
  for (int v = 0; v < n; ++v) {
    std::vector<int> dist(static_cast<std::size_t>(2 * n), -1);
    dist[static_cast<std::size_t>(2 * v)] = 0;
    std::deque<int> q{2 * v};
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      const int a = x / 2, parity = x % 2;
      for (int b = 0; b < n; ++b) {
        if (!adjacent(g, a, b)) continue;
        const int y = 2 * b + (1 - parity);
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          q.push_back(y);
        }
      }
    }
    const int d = dist[static_cast<std::size_t>(2 * v + 1)];
    if (d > 0 && (!best || d < *best)) best = d;
  }
  return best;
}

inline bool gap_free(const Graph& g) {
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge a = edges[i], b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      if (!adjacent(g, a.u, b.u) && !adjacent(g, a.u, b.v) && !adjacent(g, a.v, b.u) && !adjacent(g, a.v, b.v))
        return false;
    }
  return true;
}

// Random monomial ideal with exponents below max_exp.
inline MonomialIdeal random_ideal(std::mt19937& rng, int n, int gens, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<Monomial> out;
  for (int k = 0; k < gens; ++k) {
    Monomial m(n);
    for (int i = 0; i < n; ++i) m[i] = static_cast<Monomial::Exponent>(e(rng));
    out.push_back(m);
  }
  return MonomialIdeal(n, out);
}

inline Monomial random_monomial(std::mt19937& rng, int n, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  Monomial m(n);
  for (int i = 0; i < n; ++i) m[i] = static_cast<Monomial::Exponent>(e(rng));
  return m;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace oracle
