#include "doctest.h"
#include "edgeal/betti.hpp"
#include "edgeal/enumerate.hpp"
#include "edgeal/graph_io.hpp"
#include "edgeal/symbolic.hpp"
#include "oracles.hpp"

using namespace edgeal;

namespace {

MonomialIdeal I(const char* text, int n) { return parse_ideal(text, n); }

}  // namespace

TEST_CASE("lcm lattice") {
  const auto lat = lcm_lattice(I("(x1, x2)", 2));
  CHECK(lat == std::vector<Monomial>{Monomial(2, {1, 0}), Monomial(2, {0, 1}), Monomial(2, {1, 1})});
  CHECK(lcm_lattice(I("(x1^2*x3)", 3)).size() == 1);
  const auto c4 = lcm_lattice(edge_ideal(cycle_graph(4)));
  // 4 edges, 4 paths of length two, and x1x2x3x4
  CHECK(c4.size() == 4 + 4 + 1);
  CHECK_THROWS_AS(lcm_lattice(MonomialIdeal(2)), RegularityUndefined);
}

TEST_CASE("upper Koszul complexes") {
  const auto a = I("(x1*x2)", 2);
  CHECK(upper_koszul(a, Monomial(2, {1, 1})).is_irrelevant());
  CHECK(upper_koszul(I("(x1*x2)", 3), Monomial(3, {1, 0, 1})).is_void());
  const auto k3 = edge_ideal(complete_graph(3));
  const auto k = upper_koszul(k3, Monomial(3, {1, 1, 1}));
  // x1x2x3 / x_i is an edge for every i: three isolated vertices
  CHECK(k.facets().size() == 3);
  CHECK(reduced_homology_ranks(k) == std::map<int, std::size_t>{{0, 2}});
  CHECK_THROWS_AS(upper_koszul(k3, Monomial(2)), AmbientMismatch);
}

TEST_CASE("Betti tables of small ideals") {
  const auto principal = betti_table(I("(x1^2*x2)", 2));
  REQUIRE(principal.entries().size() == 1);
  CHECK(principal.entries()[0].i == 0);
  CHECK(principal.entries()[0].rank == 1);
  const auto xy = betti_table(I("(x1, x2)", 2));
  CHECK(xy.rank(0, Monomial(2, {1, 0})) == 1);
  CHECK(xy.rank(0, Monomial(2, {0, 1})) == 1);
  CHECK(xy.rank(1, Monomial(2, {1, 1})) == 1);
  CHECK(xy.entries().size() == 3);
  const auto koszul = betti_table(I("(x1, x2, x3)", 3)).graded();
  CHECK(koszul.at({0, 1}) == 3);
  CHECK(koszul.at({1, 2}) == 3);
  CHECK(koszul.at({2, 3}) == 1);
  CHECK(betti_table(MonomialIdeal::unit(2)).rank(0, Monomial(2)) == 1);
  CHECK_THROWS_AS(betti_table(MonomialIdeal(2)), RegularityUndefined);
}

TEST_CASE("regularity") {
  CHECK(regularity(edge_ideal(path_graph(3))) == 2);
  CHECK(regularity(edge_ideal(cycle_graph(5))) == 3);
  CHECK(regularity(power(edge_ideal(path_graph(3)), 2)) == 4);
  CHECK(regularity(I("(x1^3)", 1)) == 3);
  CHECK_THROWS_AS(regularity(MonomialIdeal(3)), RegularityUndefined);
  CHECK_THROWS_AS(regularity(MonomialIdeal::unit(3)), RegularityUndefined);
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, true))
      if (g.edge_count() > 0) REQUIRE(regularity(edge_ideal(g)) >= 2);
}

TEST_CASE("I(C5) against the Taylor oracle") {
  const auto a = edge_ideal(cycle_graph(5));
  CHECK(betti_table(a) == taylor_betti_oracle(a));
  CHECK(taylor_betti_oracle(a).regularity() == 3);
  CHECK(taylor_betti_oracle(I("(x1^2*x2)", 2)) == betti_table(I("(x1^2*x2)", 2)));
  const auto koszul = taylor_betti_oracle(I("(x1, x2, x3)", 3)).graded();
  CHECK(koszul.at({0, 1}) == 3);
  CHECK(koszul.at({1, 2}) == 3);
  CHECK(koszul.at({2, 3}) == 1);
  CHECK_THROWS_AS(taylor_betti_oracle(power(edge_ideal(complete_graph(5)), 2)), std::invalid_argument);
}

TEST_CASE("Betti tables agree with Taylor on edge ideals and their powers") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      if (g.edge_count() == 0) continue;
      for (int s = 1; s <= 3; ++s) {
        for (const auto& a : {power(edge_ideal(g), s), symbolic_power(g, s)}) {
          if (a.size() > 10) continue;
          REQUIRE(betti_table(a) == taylor_betti_oracle(a));
        }
      }
    }
}

TEST_CASE("Betti tables on random monomial ideals") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 4;
    const auto a = oracle::random_ideal(rng, n, 1 + trial % 7, 2);
    if (a.is_zero()) continue;
    const auto table = betti_table(a);
    REQUIRE(table == taylor_betti_oracle(a));
    REQUIRE(table == betti_table_serial(a));
    REQUIRE(betti_table(a, {Field{2}, {}}) == taylor_betti_oracle(a, {Field{2}, {}}));
    // beta_0 is exactly the minimal generators, each with rank one
    std::vector<Monomial> zeroth;
    for (const auto& e : table.entries())
      if (e.i == 0) {
        REQUIRE(e.rank == 1);
        zeroth.push_back(e.degree);
      }
    std::sort(zeroth.begin(), zeroth.end(), canonical_less);
    REQUIRE(zeroth == a.gens());
    // every recorded degree lies in the lcm lattice
    const auto lattice = lcm_lattice(a);
    for (const auto& e : table.entries())
      REQUIRE(std::find(lattice.begin(), lattice.end(), e.degree) != lattice.end());
  }
}

TEST_CASE("alternating Betti sums equal the Euler characteristic of the upper Koszul complex") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const auto a = oracle::random_ideal(rng, n, 1 + trial % 6, 3);
    if (a.is_zero()) continue;
    const auto table = betti_table(a);
    for (const Monomial& b : lcm_lattice(a)) {
      long alt = 0;
      for (const auto& e : table.entries())
        if (e.degree == b) alt += (e.i % 2 == 0 ? 1 : -1) * static_cast<long>(e.rank);
      // beta_{i,b} = H~_{i-1}, so sum (-1)^i beta_i = -chi~.
      REQUIRE(alt == -reduced_euler_characteristic(upper_koszul(a, b).faces()));
    }
  }
}

TEST_CASE("parallel and serial tables are identical") {
  for (int n = 4; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      if (g.edge_count() == 0) continue;
      const auto a = symbolic_power(g, 2);
      REQUIRE(betti_table(a) == betti_table_serial(a));
    }
}

TEST_CASE("deadline stops the computation") {
  const auto a = symbolic_power(cycle_graph(7), 3);
  BettiOptions opts;
  opts.deadline = Deadline::after(std::chrono::duration<double>(-1.0));
  CHECK_THROWS_AS(betti_table(a, opts), TimeoutError);
  CHECK_THROWS_AS(betti_table_serial(a, opts), TimeoutError);
  CHECK_THROWS_AS(betti_table(a, {Field{4}, {}}), std::invalid_argument);
}

TEST_CASE("JSON rendering") {
  const auto j = to_json(betti_table(I("(x1, x2)", 2)));
  REQUIRE(j.size() == 3);
  CHECK(j[0]["i"] == 0);
  CHECK(j[2]["i"] == 1);
  CHECK(j[2]["multidegree"] == nlohmann::json::parse("[1,1]"));
  CHECK(j[2]["total_degree"] == 2);
  CHECK(j[2]["rank"] == 1);
}
