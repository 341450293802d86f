#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "doctest.h"
#include "edgeal/homology.hpp"
#include "edgeal/integer_rank.hpp"

using namespace edgeal;

namespace {

// Gaussian elimination over exact rationals.
std::size_t rank_by_fractions(const IntMatrix& m) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> a(m.rows(), std::vector<Q>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = Q(m(r, c));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Q f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi, double density) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::bernoulli_distribution keep(density);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) m(r, c) = val(rng);
  return m;
}

VertexSet vs(std::initializer_list<int> l) {
  VertexSet s;
  for (int v : l) s.insert(v);
  return s;
}

}  // namespace

TEST_CASE("field validation") {
  CHECK_NOTHROW(validate_field({0}));
  CHECK_NOTHROW(validate_field({2}));
  CHECK_NOTHROW(validate_field({32003}));
  CHECK_THROWS_AS(validate_field({1}), std::invalid_argument);
  CHECK_THROWS_AS(validate_field({4}), std::invalid_argument);
  CHECK_THROWS_AS(validate_field({-3}), std::invalid_argument);
}

TEST_CASE("integer rank on fixed matrices") {
  IntMatrix zero(3, 4);
  CHECK(rank_rational(zero) == 0);
  CHECK(rank_bareiss(zero) == 0);
  IntMatrix empty(0, 5);
  CHECK(rank_rational(empty) == 0);
  IntMatrix two(2, 2);
  two(0, 0) = 2;
  two(0, 1) = 4;
  two(1, 0) = 1;
  two(1, 1) = 2;
  CHECK(rank_rational(two) == 1);
  CHECK(rank_mod_p(two, 2) == 1);
  IntMatrix d(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 3;
  CHECK(rank_rational(d) == 2);
  CHECK(rank_mod_p(d, 2) == 1);
  CHECK(rank_mod_p(d, 3) == 1);
  CHECK(rank_mod_p(d, 5) == 2);
  CHECK(rank(d, Field{2}) == 1);
}

TEST_CASE("rank routes agree on random matrices") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + static_cast<std::size_t>(trial % 9);
    const std::size_t cols = 1 + static_cast<std::size_t>((trial / 9) % 9);
    const bool signs = trial % 2 == 0;
    const IntMatrix m = signs ? random_matrix(rng, rows, cols, -1, 1, 0.5) : random_matrix(rng, rows, cols, -9, 9, 0.6);
    const std::size_t expected = rank_by_fractions(m);
    REQUIRE(rank_rational(m) == expected);
    REQUIRE(rank_bareiss(m) == expected);
    // A large prime sees the same rank for these small entries almost surely;
    // never more than the rational rank.
    REQUIRE(rank_mod_p(m, 1000003) <= expected);
  }
}

TEST_CASE("rank survives int64 overflow through the big-integer path") {
  // Rows of large, nearly dependent entries force the fallback.
  IntMatrix m(3, 3);
  const std::int64_t big = std::int64_t{1} << 40;
  m(0, 0) = big;
  m(0, 1) = big + 1;
  m(0, 2) = 3;
  m(1, 0) = big + 1;
  m(1, 1) = big + 2;
  m(1, 2) = 5;
  m(2, 0) = 2 * big + 1;
  m(2, 1) = 2 * big + 3;
  m(2, 2) = 8;
  CHECK(rank_rational(m) == rank_by_fractions(m));
  CHECK(rank_bareiss(m) == rank_by_fractions(m));
}

TEST_CASE("simplicial complex basics") {
  const auto v = SimplicialComplex::void_complex();
  const auto irr = SimplicialComplex::irrelevant();
  CHECK(v.is_void());
  CHECK(!irr.is_void());
  CHECK(irr.is_irrelevant());
  CHECK(v != irr);
  CHECK(v.dimension() == -2);
  CHECK(irr.dimension() == -1);
  CHECK(v.faces().empty());
  CHECK(irr.faces() == std::vector<VertexSet>{VertexSet{}});
  const auto k = SimplicialComplex::from_facets({vs({0, 1}), vs({1, 2}), vs({1})});
  CHECK(k.facets().size() == 2);
  CHECK(k.contains(vs({1})));
  CHECK(!k.contains(vs({0, 2})));
  CHECK(k.faces().size() == 1 + 3 + 2);
  CHECK(k.dimension() == 1);
}

TEST_CASE("reduced homology of standard fixtures") {
  const auto hollow = SimplicialComplex::from_facets({vs({0, 1}), vs({1, 2}), vs({0, 2})});
  CHECK(reduced_homology_ranks(hollow) == std::map<int, std::size_t>{{1, 1}});
  CHECK(reduced_homology_ranks(SimplicialComplex::simplex(vs({0, 1, 2, 3}))).empty());
  CHECK(reduced_homology_ranks(SimplicialComplex::from_facets({vs({0}), vs({1})})) ==
        std::map<int, std::size_t>{{0, 1}});
  CHECK(reduced_homology_ranks(SimplicialComplex::irrelevant()) == std::map<int, std::size_t>{{-1, 1}});
  CHECK(reduced_homology_ranks(SimplicialComplex::void_complex()).empty());
  // boundary of the 3-simplex is a 2-sphere
  std::vector<VertexSet> sphere;
  for (int drop = 0; drop < 4; ++drop) {
    VertexSet f = vs({0, 1, 2, 3});
    f.erase(drop);
    sphere.push_back(f);
  }
  CHECK(reduced_homology_ranks(SimplicialComplex::from_facets(sphere)) == std::map<int, std::size_t>{{2, 1}});
}

TEST_CASE("projective plane: homology depends on the characteristic") {
  const std::vector<std::vector<int>> tri = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                             {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  std::vector<VertexSet> facets;
  for (const auto& t : tri) facets.push_back(vs({t[0], t[1], t[2]}));
  const auto rp2 = SimplicialComplex::from_facets(facets);
  CHECK(reduced_homology_ranks(rp2, Field{0}).empty());
  CHECK(reduced_homology_ranks(rp2, Field{3}).empty());
  CHECK(reduced_homology_ranks(rp2, Field{2}) == std::map<int, std::size_t>{{1, 1}, {2, 1}});
}

TEST_CASE("Euler characteristic matches alternating homology ranks") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    std::uniform_int_distribution<std::uint32_t> pick(1, (std::uint32_t{1} << n) - 1);
    std::vector<VertexSet> facets;
    for (int k = 0; k < 1 + trial % 5; ++k) facets.push_back(VertexSet(pick(rng)));
    const auto c = SimplicialComplex::from_facets(facets);
    long alt = 0;
    for (auto [d, r] : reduced_homology_ranks(c)) alt += (d % 2 == 0 ? 1 : -1) * static_cast<long>(r);
    REQUIRE(alt == reduced_euler_characteristic(c.faces()));
  }
}
