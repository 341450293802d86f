#include "doctest.h"
#include "edgeal/graph_io.hpp"
#include "edgeal/ideal.hpp"
#include "oracles.hpp"

using namespace edgeal;

namespace {

MonomialIdeal I(const char* text, int n) { return parse_ideal(text, n); }
Monomial M(const char* text, int n) { return parse_monomial(text, n); }

}  // namespace

TEST_CASE("monomials") {
  const Monomial a(3, {2, 0, 1});
  CHECK(a.degree() == 3);
  CHECK(a.support() == VertexSet(0b101));
  CHECK(!a.is_squarefree());
  CHECK(to_string(a) == "x1^2*x3");
  CHECK(to_string(Monomial(3)) == "1");
  CHECK(parse_monomial("x1^2*x3", 3) == a);
  CHECK(parse_monomial("1", 3).is_one());
  CHECK(parse_monomial("x3*x1*x1", 3) == a);
  CHECK_THROWS(parse_monomial("x4", 3));
  CHECK_THROWS(parse_monomial("y1", 3));
  CHECK_THROWS(parse_monomial("x1^", 3));
  CHECK(lcm(a, Monomial(3, {0, 1, 2})) == Monomial(3, {2, 1, 2}));
  CHECK(gcd(a, Monomial(3, {1, 1, 2})) == Monomial(3, {1, 0, 1}));
  CHECK(colon(a, Monomial(3, {1, 1, 0})) == Monomial(3, {1, 0, 1}));
  CHECK(a.divides(Monomial(3, {2, 5, 1})));
  CHECK(!a.divides(Monomial(3, {1, 5, 1})));
  CHECK(pow(Monomial::variable(2, 1), 3) == Monomial(2, {0, 3}));
  CHECK_THROWS_AS(a * Monomial(2), AmbientMismatch);
  Monomial big(1, {60000});
  CHECK_THROWS_AS(big * big, ExponentOverflow);
  CHECK_THROWS(Monomial(2, {-1, 0}));
}

TEST_CASE("canonical order: degree, then larger exponent vector first") {
  CHECK(canonical_less(M("x2", 3), M("x1*x2", 3)));
  CHECK(canonical_less(M("x1", 3), M("x2", 3)));
  CHECK(canonical_less(M("x1^2", 3), M("x1*x2", 3)));
  CHECK(!canonical_less(M("x1", 3), M("x1", 3)));
}

TEST_CASE("ideal text and minimisation") {
  CHECK(to_string(MonomialIdeal(2)) == "(0)");
  CHECK(to_string(MonomialIdeal::unit(2)) == "(1)");
  CHECK(I("(x1, x1*x2)", 2) == I("(x1)", 2));
  CHECK(MonomialIdeal(2, {}).is_zero());
  CHECK(I("(x1^2*x2, x1*x2^2, x1^2*x2^2)", 2) == I("(x1^2*x2, x1*x2^2)", 2));
  CHECK(to_string(I("(x2*x3, x1*x2)", 3)) == "(x1*x2, x2*x3)");
  CHECK(parse_ideal(to_string(edge_ideal(example42_graph())), 7) == edge_ideal(example42_graph()));
  CHECK_THROWS(parse_ideal("x1, x2", 2));
  CHECK_THROWS(parse_ideal("(x1,, x2)", 2));
  const auto j = to_json(I("(x1*x2)", 3));
  CHECK(j["n"] == 3);
  CHECK(j["gens"] == nlohmann::json::parse("[[1,1,0]]"));
}

TEST_CASE("edge ideals") {
  CHECK(edge_ideal(cycle_graph(4)) == I("(x1*x2, x2*x3, x3*x4, x1*x4)", 4));
  CHECK(edge_ideal(Graph(4)).is_zero());
  const auto e42 = edge_ideal(example42_graph());
  CHECK(e42 == I("(x1*x2, x1*x3, x2*x3, x3*x4, x4*x5, x5*x6, x5*x7, x6*x7)", 7));
}

TEST_CASE("sum, product, power, intersection") {
  const auto k3 = edge_ideal(complete_graph(3));
  CHECK(power(k3, 1) == k3);
  CHECK(power(MonomialIdeal(3), 2).is_zero());
  CHECK(power(k3, 0).is_unit());
  CHECK(power(k3, 2) == I("(x1^2*x2^2, x1^2*x2*x3, x1*x2^2*x3, x1^2*x3^2, x1*x2*x3^2, x2^2*x3^2)", 3));
  CHECK(intersect(k3, k3) == k3);
  CHECK(intersect(I("(x1)", 2), I("(x2)", 2)) == I("(x1*x2)", 2));
  CHECK(sum(I("(x1*x2)", 2), I("(x1)", 2)) == I("(x1)", 2));
  CHECK(intersect(MonomialIdeal(2), I("(x1)", 2)).is_zero());
  CHECK_THROWS_AS(sum(I("(x1)", 2), I("(x1)", 3)), AmbientMismatch);
  CHECK_THROWS_AS(product(I("(x1)", 2), I("(x1)", 3)), AmbientMismatch);
  CHECK_THROWS_AS(intersect(I("(x1)", 2), I("(x1)", 3)), AmbientMismatch);
}

TEST_CASE("containment") {
  CHECK(!MonomialIdeal(3).contains(M("x1", 3)));
  CHECK(!power(edge_ideal(complete_graph(3)), 2).contains(M("x1*x2*x3", 3)));
  CHECK(MonomialIdeal::unit(3).contains(Monomial(3)));
  CHECK(is_subset(MonomialIdeal(2), I("(x1)", 2)));
  CHECK(!is_subset(I("(x1)", 2), MonomialIdeal(2)));
  CHECK_THROWS_AS(I("(x1)", 2).contains(M("x1", 3)), AmbientMismatch);
}

TEST_CASE("colon by a monomial") {
  const auto k3 = edge_ideal(complete_graph(3));
  CHECK(colon(k3, Monomial(3)) == k3);
  CHECK(colon(k3, M("x1*x2", 3)).is_unit());
  CHECK(colon(I("(x1^2*x2)", 2), M("x1", 2)) == I("(x1*x2)", 2));
  CHECK(colon(MonomialIdeal(2), M("x1", 2)).is_zero());
  CHECK_THROWS_AS(colon(k3, M("x1", 2)), AmbientMismatch);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 4;
    const auto a = oracle::random_ideal(rng, n, 1 + trial % 5, 3);
    const auto u = oracle::random_monomial(rng, n, 3);
    REQUIRE(colon(a, u) == oracle::colon(a, u));
  }
}

TEST_CASE("minimal primes of squarefree ideals") {
  const auto primes = minimal_primes(edge_ideal(path_graph(3)));
  CHECK(primes == std::vector<VertexSet>{VertexSet(0b010), VertexSet(0b101)});
  CHECK(minimal_primes(MonomialIdeal(3)) == std::vector<VertexSet>{VertexSet{}});
  CHECK(minimal_primes(MonomialIdeal::unit(3)).empty());
  CHECK_THROWS(minimal_primes(I("(x1^2)", 2)));
  for (int n = 1; n <= 6; ++n) {
    std::mt19937 rng(static_cast<unsigned>(n));
    for (int t = 0; t < 30; ++t) {
      const Graph g = oracle::random_graph(rng, n, 0.5);
      auto p = minimal_primes(edge_ideal(g));
      std::sort(p.begin(), p.end());
      REQUIRE(p == oracle::minimal_covers(g));
    }
  }
}

TEST_CASE("algebraic properties on random ideals") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 5;
    const auto a = oracle::random_ideal(rng, n, 1 + trial % 6, 3);
    const auto b = oracle::random_ideal(rng, n, 1 + (trial / 3) % 5, 3);
    const auto u = oracle::random_monomial(rng, n, 2);
    const auto v = oracle::random_monomial(rng, n, 2);

    // minimize is idempotent and order-insensitive
    auto gens = a.gens();
    REQUIRE(minimize(gens) == gens);
    std::vector<Monomial> doubled = gens;
    doubled.insert(doubled.end(), gens.rbegin(), gens.rend());
    std::shuffle(doubled.begin(), doubled.end(), rng);
    REQUIRE(minimize(doubled) == gens);

    REQUIRE(is_subset(a, colon(a, u)));
    REQUIRE(colon(colon(a, u), v) == colon(a, u * v));

    const auto meet = intersect(a, b);
    REQUIRE(is_subset(meet, a));
    REQUIRE(is_subset(meet, b));
    const auto join = sum(a, b);
    REQUIRE(is_subset(a, join));
    REQUIRE(is_subset(b, join));
    const auto prod = product(a, b);
    REQUIRE(is_subset(prod, meet));
    // membership of lcm-based intersection matches the definition
    oracle::for_each_bounded(std::vector<int>(static_cast<std::size_t>(n), 4), [&](const std::vector<int>& e) {
      const Monomial m(n, std::span<const int>(e));
      REQUIRE(meet.contains(m) == (a.contains(m) && b.contains(m)));
      REQUIRE(join.contains(m) == (a.contains(m) || b.contains(m)));
    });
    // greatest lower bound: any c inside both lies inside the intersection
    const auto c = product(meet, oracle::random_ideal(rng, n, 2, 1));
    REQUIRE(is_subset(c, meet));
  }
}

TEST_CASE("variables_in") {
  CHECK(variables_in(I("(x1, x2*x3, x4^2)", 4)) == VertexSet(0b0001));
  CHECK(variables_in(MonomialIdeal(2)).empty());
}
