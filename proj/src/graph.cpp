#include "edgeal/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "edgeal/graph_io.hpp"

namespace edgeal {

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph order must be in 1..32, got " + std::to_string(n));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
    adj_[static_cast<std::size_t>(e.u)] |= std::uint32_t{1} << e.v;
    adj_[static_cast<std::size_t>(e.v)] |= std::uint32_t{1} << e.u;
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u).members())
      if (v > u) out.push_back({u, v});
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  auto es = edges();
  es.push_back({std::min(u, v), std::max(u, v)});
  return Graph(n_, es);
}

Graph complement(const Graph& g) {
  std::vector<Edge> es;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) es.push_back({u, v});
  return Graph(g.order(), es);
}

bool is_chordal(const Graph& g) {
  // Maximum cardinality search; the reverse visit order is a perfect
  // elimination ordering iff g is chordal.
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  VertexSet visited;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!visited.contains(v) && (best < 0 || weight[v] > weight[best])) best = v;
    // Neighbours visited earlier are eliminated later; they must be a clique.
    VertexSet earlier = g.neighbors(best) & visited;
    for (int x : earlier.members()) {
      VertexSet rest = earlier;
      rest.erase(x);
      if (!rest.is_subset_of(g.neighbors(x))) return false;
    }
    visited.insert(best);
    for (int w : g.neighbors(best).members())
      if (!visited.contains(w)) ++weight[w];
  }
  return true;
}

bool is_bipartite(const Graph& g) { return !odd_girth(g).has_value(); }

std::optional<int> odd_girth(const Graph& g) {
  // From each root, an edge joining two vertices at equal BFS depth d closes
  // an odd walk of length 2d+1; the minimum over all roots is the odd girth.
  const int n = g.order();
  std::optional<int> best;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int w : g.neighbors(v).members()) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        } else if (dist[w] == dist[v]) {
          int len = 2 * dist[v] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::optional<std::pair<Edge, Edge>> find_gap(const Graph& g) {
  auto es = g.edges();
  for (std::size_t a = 0; a < es.size(); ++a) {
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      const Edge& e = es[a];
      const Edge& f = es[b];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      if (!g.adjacent(e.u, f.u) && !g.adjacent(e.u, f.v) && !g.adjacent(e.v, f.u) &&
          !g.adjacent(e.v, f.v))
        return std::make_pair(e, f);
    }
  }
  return std::nullopt;
}

bool is_gap_free(const Graph& g) { return !find_gap(g).has_value(); }

namespace {

// Bron-Kerbosch with Tomita pivoting over an explicit neighbourhood table.
void bron_kerbosch(const std::vector<std::uint32_t>& nbr, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  int pivot_hits = -1;
  for (int u : (p | x).members()) {
    int hits = (p & VertexSet(nbr[u])).size();
    if (hits > pivot_hits) {
      pivot = u;
      pivot_hits = hits;
    }
  }
  for (int v : p.minus(VertexSet(nbr[pivot])).members()) {
    VertexSet nv(nbr[v]);
    VertexSet rv = r;
    rv.insert(v);
    bron_kerbosch(nbr, rv, p & nv, x & nv, out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint32_t> co(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    co[v] = g.vertices().minus(g.neighbors(v)).minus(VertexSet::single(v)).bits();
  std::vector<VertexSet> out;
  bron_kerbosch(co, VertexSet{}, g.vertices(), VertexSet{}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
  std::vector<VertexSet> out;
  for (VertexSet s : maximal_independent_sets(g)) out.push_back(g.vertices().minus(s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_vertex_cover(const Graph& g, VertexSet c) {
  for (const Edge& e : g.edges())
    if (!c.contains(e.u) && !c.contains(e.v)) return false;
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  if (keep.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  if (!keep.is_subset_of(g.vertices()))
    throw std::invalid_argument("induced_subgraph: vertex out of range");
  InducedSubgraph out;
  out.original = keep.members();
  std::vector<int> to_new(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) to_new[out.original[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (keep.contains(e.u) && keep.contains(e.v)) es.push_back({to_new[e.u], to_new[e.v]});
  out.graph = Graph(static_cast<int>(out.original.size()), es);
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) throw std::invalid_argument("relabel: wrong permutation size");
  std::uint32_t seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= g.order() || ((seen >> p) & 1U)) throw std::invalid_argument("relabel: not a permutation");
    seen |= std::uint32_t{1} << p;
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    int a = perm[e.u];
    int b = perm[e.v];
    es.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(g.order(), es);
}

std::uint64_t adjacency_key(const Graph& g) {
  std::uint64_t key = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) key = (key << 1) | (g.adjacent(i, j) ? 1U : 0U);
  return key;
}

namespace {

// Key of g relabelled by perm, without materialising the graph.
std::uint64_t permuted_key(const Graph& g, const std::vector<int>& inverse) {
  std::uint64_t key = 0;
  const int n = g.order();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      key = (key << 1) | (g.adjacent(inverse[i], inverse[j]) ? 1U : 0U);
  return key;
}

std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (int w : g.neighbors(v).members()) sig[v].second.push_back(colour[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    int now = static_cast<int>(sorted.size());
    if (now == classes) break;
    classes = now;
  }
  return colour;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw std::invalid_argument("canonical_form: n must be <= 11");
  auto colour = refine_colours(g);
  // Positions are filled cell by cell; inverse[pos] = original vertex.
  std::vector<int> inverse(static_cast<std::size_t>(n));
  std::iota(inverse.begin(), inverse.end(), 0);
  std::stable_sort(inverse.begin(), inverse.end(),
                   [&](int a, int b) { return colour[a] < colour[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end) in position space
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[inverse[j]] == colour[inverse[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> best_inverse = inverse;
  // Odometer over the permutations of every cell.
  while (true) {
    std::uint64_t key = permuted_key(g, inverse);
    if (key < best) {
      best = key;
      best_inverse = inverse;
    }
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto first = inverse.begin() + cells[c].first;
      auto last = inverse.begin() + cells[c].second;
      if (std::next_permutation(first, last)) break;
    }
    if (c == cells.size()) break;
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) perm[best_inverse[pos]] = pos;
  return relabel(g, perm);
}

Graph canonical_form_exhaustive(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw std::invalid_argument("canonical_form_exhaustive: n must be <= 8");
  std::vector<int> inverse(static_cast<std::size_t>(n));
  std::iota(inverse.begin(), inverse.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> best_inverse = inverse;
  do {
    std::uint64_t key = permuted_key(g, inverse);
    if (key < best) {
      best = key;
      best_inverse = inverse;
    }
  } while (std::next_permutation(inverse.begin(), inverse.end()));
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) perm[best_inverse[pos]] = pos;
  return relabel(g, perm);
}

std::string graph_id(const Graph& g) {
  return encode_graph6(g.order() <= 8 ? canonical_form(g) : g);
}

}  // namespace edgeal
