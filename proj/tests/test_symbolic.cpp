#include "doctest.h"
#include "edgeal/enumerate.hpp"
#include "edgeal/graph_io.hpp"
#include "edgeal/symbolic.hpp"
#include "oracles.hpp"

using namespace edgeal;

namespace {

std::vector<std::vector<int>> as_vectors(const std::vector<Monomial>& ms) {
  std::vector<std::vector<int>> out;
  for (const Monomial& m : ms) out.emplace_back(m.exponents().begin(), m.exponents().end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("symbolic membership") {
  const auto k3 = cover_system(complete_graph(3));
  CHECK(symbolic_member(k3, parse_monomial("x1*x2*x3", 3), 2));
  CHECK(!symbolic_member(k3, parse_monomial("x1*x2", 3), 2));
  const Graph g = example42_graph();
  const auto cs = cover_system(g);
  for (Edge e : g.edges()) CHECK(symbolic_member(cs, Monomial::edge(7, e), 1));
  CHECK(symbolic_member(cs, parse_monomial("x3*x5*x1*x2*x6*x7", 7), 4));
  CHECK_THROWS_AS(symbolic_member(k3, Monomial(3), 0), std::invalid_argument);
}

TEST_CASE("minimal solutions of covering inequalities") {
  CoverSystem two{2, {VertexSet(0b01), VertexSet(0b10)}};
  CHECK(as_vectors(minimal_solutions(two, 1)) == std::vector<std::vector<int>>{{1, 1}});
  CoverSystem one{2, {VertexSet(0b11)}};
  CHECK(as_vectors(minimal_solutions(one, 2)) == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
  const auto k3 = minimal_solutions(cover_system(complete_graph(3)), 2);
  CHECK(std::find(k3.begin(), k3.end(), Monomial(3, {1, 1, 1})) != k3.end());
  CHECK_THROWS_AS(minimal_solutions(one, 0), std::invalid_argument);
}

TEST_CASE("symbolic power examples") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) REQUIRE(symbolic_power(g, 1) == edge_ideal(g));
  const Graph c4 = cycle_graph(4);
  for (int s = 1; s <= 4; ++s) CHECK(symbolic_power(c4, s) == power(edge_ideal(c4), s));
  const Graph k3 = complete_graph(3);
  CHECK(symbolic_power(k3, 2) == sum(power(edge_ideal(k3), 2), parse_ideal("(x1*x2*x3)", 3)));
  CHECK(symbolic_power(Graph(4), 3).is_zero());
  CHECK(symbolic_power_oracle(Graph(4), 3).is_zero());
  CHECK(symbolic_power_oracle(complete_graph(2), 2) == parse_ideal("(x1^2*x2^2)", 2));
  CHECK_THROWS_AS(symbolic_power(k3, 0), std::invalid_argument);
  CHECK_THROWS_AS(symbolic_power_oracle(complete_graph(8), 2), std::invalid_argument);
  CHECK_THROWS_AS(symbolic_power_oracle(k3, 5), std::invalid_argument);
  CHECK(symbolic_power(edge_ideal(k3), 2) == symbolic_power(k3, 2));
  CHECK_THROWS(symbolic_power(parse_ideal("(x1^2)", 2), 2));
}

TEST_CASE("generator exponents never exceed s") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, true))
      for (int s = 1; s <= 3; ++s) {
        const auto sym = symbolic_power(g, s);
        for (const Monomial& m : sym.gens())
          for (auto e : m.exponents()) REQUIRE(e <= s);
      }
}

TEST_CASE("membership agrees with the generator set") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      if (g.edge_count() == 0) continue;
      const auto cs = cover_system(g);
      for (int s = 1; s <= 3; ++s) {
        const auto sym = symbolic_power(g, s);
        oracle::for_each_bounded(std::vector<int>(static_cast<std::size_t>(n), s), [&](const std::vector<int>& e) {
          const Monomial m(n, std::span<const int>(e));
          REQUIRE(sym.contains(m) == symbolic_member(cs, m, s));
        });
      }
    }
}

TEST_CASE("fast symbolic power matches the iterated-intersection oracle") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, true))
      for (int s = 1; s <= 3; ++s) REQUIRE(symbolic_power(g, s) == symbolic_power_oracle(g, s));
}

TEST_CASE("ordinary powers sit inside symbolic powers") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, true))
      for (int s = 1; s <= 3; ++s) REQUIRE(is_subset(power(edge_ideal(g), s), symbolic_power(g, s)));
}

TEST_CASE("memo cache gives identical results under threads") {
  const auto graphs = enumerate_graphs(5, true);
  std::vector<MonomialIdeal> serial;
  clear_symbolic_cache();
  for (const Graph& g : graphs) serial.push_back(symbolic_power(g, 3));
  clear_symbolic_cache();
  std::vector<MonomialIdeal> threaded(graphs.size(), MonomialIdeal(5));
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < static_cast<long>(2 * graphs.size()); ++i) {
    const std::size_t k = static_cast<std::size_t>(i) % graphs.size();
    auto value = symbolic_power(graphs[k], 3);
    if (static_cast<std::size_t>(i) < graphs.size()) threaded[k] = value;
  }
  CHECK(serial == threaded);
}
