#include "edgeal/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "edgeal/graph_io.hpp"

namespace edgeal {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("enumeration order must be in 1..8, got " + std::to_string(n));
}

Graph from_key(int n, std::uint64_t key) {
  const int m = n * (n - 1) / 2;
  std::vector<Edge> es;
  int bit = m - 1;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, --bit)
      if ((key >> bit) & 1U) es.push_back({i, j});
  return Graph(n, es);
}

// Canonical classes on n vertices, grown by attaching one vertex to every
// class on n-1 vertices in every possible way.
const std::vector<Graph>& classes(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  std::vector<Graph> result;
  if (n == 1) {
    result.push_back(Graph(1));
  } else {
    const auto& smaller = classes(n - 1);
    std::map<std::string, Graph> seen;
    for (const Graph& h : smaller) {
      auto base = h.edges();
      for (std::uint32_t nb = 0; nb < (std::uint32_t{1} << (n - 1)); ++nb) {
        auto es = base;
        for (int v : VertexSet(nb).members()) es.push_back({v, n - 1});
        Graph c = canonical_form(Graph(n, es));
        seen.emplace(encode_graph6(c), c);
      }
    }
    for (auto& [id, g] : seen) result.push_back(g);
  }
  std::lock_guard lock(mu);
  return memo.emplace(n, std::move(result)).first->second;
}

}  // namespace

void for_each_graph(int n, bool dedupe_iso, const std::function<void(const Graph&)>& visit) {
  check_order(n);
  if (dedupe_iso) {
    for (const Graph& g : classes(n)) visit(g);
    return;
  }
  const int m = n * (n - 1) / 2;
  for (std::uint64_t key = 0; key < (std::uint64_t{1} << m); ++key) visit(from_key(n, key));
}

std::vector<Graph> enumerate_graphs(int n, bool dedupe_iso) {
  std::vector<Graph> out;
  for_each_graph(n, dedupe_iso, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> enumerate_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto& part = classes((check_order(n), n));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace edgeal
