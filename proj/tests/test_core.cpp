#include <doctest.h>

#include <random>

#include "costas/core.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using costas::CostasCube;
using costas::Permutation;
using costas::ProjectionPair;

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
  const Permutation p({3, 5, 4, 2, 6, 1});
  CHECK(p(1) == 3);
  CHECK(p.inverse().inverse() == p);
  CHECK(p.inverse()(3) == 1);
}

TEST_CASE("max off-phase autocorrelation examples") {
  CHECK(costas::max_offphase_autocorrelation(Permutation({1})) == 0);
  CHECK(costas::max_offphase_autocorrelation(Permutation({3, 5, 4, 2, 6, 1})) == 1);
  CHECK(costas::max_offphase_autocorrelation(Permutation({1, 2, 3})) == 2);
}

TEST_CASE("is_costas examples") {
  CHECK(costas::is_costas(Permutation({2, 1})));
  CHECK(costas::is_costas(Permutation({2, 4, 5, 1, 6, 3})));
  CHECK_FALSE(costas::is_costas(Permutation({1, 2, 3, 4})));
  const auto rep = costas::repeated_difference_vector(Permutation({1, 2, 3, 4}));
  REQUIRE(rep);
  CHECK(*rep == costas::DifferenceVector{1, 1});
  CHECK_FALSE(costas::repeated_difference_vector(Permutation({2, 4, 5, 1, 6, 3})));
}

TEST_CASE("is_costas agrees with autocorrelation and the dense oracle, all permutations n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : oracle::all_permutations(n)) {
      const bool c = costas::is_costas(p);
      CHECK(c == (costas::max_offphase_autocorrelation(p) <= 1));
      CHECK(c == oracle::brute_is_costas(p));
      CHECK(costas::max_offphase_autocorrelation(p) == oracle::brute_autocorrelation(oracle::to_dense(p)));
    }
  }
}

TEST_CASE("is_costas agrees with autocorrelation on random permutations, orders 7 and 8") {
  std::mt19937_64 rng(oracle::test_seed());
  for (int n : {7, 8}) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    for (int trial = 0; trial < 3000; ++trial) {
      std::shuffle(v.begin(), v.end(), rng);
      const Permutation p(v);
      CHECK(costas::is_costas(p) == (costas::max_offphase_autocorrelation(p) <= 1));
      CHECK(costas::is_costas(p) == oracle::brute_is_costas(p));
    }
  }
}

TEST_CASE("is_costas beyond the 64-bit fast path") {
  // Order 40 identity is not Costas; a random order-40 permutation is checked
  // against the pairwise oracle.
  CHECK_FALSE(costas::is_costas(Permutation::identity(40)));
  std::mt19937_64 rng(oracle::test_seed());
  std::vector<int> v(40);
  std::iota(v.begin(), v.end(), 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::shuffle(v.begin(), v.end(), rng);
    CHECK(costas::is_costas(Permutation(v)) == oracle::brute_is_costas(Permutation(v)));
  }
}

TEST_CASE("projections of the order-6 example") {
  const auto cube = fixtures::kOrder6.cube();
  const auto p = costas::projections(cube);
  CHECK(p.a.values() == fixtures::kOrder6.a);
  CHECK(p.b.values() == fixtures::kOrder6.b);
  CHECK(p.c.values() == fixtures::kOrder6.c);
  CHECK(costas::is_costas_cube(cube));
}

TEST_CASE("projections of order-1 cube and GF(16) listing") {
  const auto p1 = costas::projections(CostasCube::diagonal(1));
  CHECK(p1.a == Permutation({1}));
  CHECK(p1.b == Permutation({1}));
  CHECK(p1.c == Permutation({1}));
  const auto p = costas::projections(fixtures::kGf16.cube());
  CHECK(p.a.values() == fixtures::kGf16.a);
  CHECK(p.b.values() == fixtures::kGf16.b);
  CHECK(p.c.values() == fixtures::kGf16.c);
}

TEST_CASE("cube_from_projections examples") {
  const auto cube = costas::cube_from_projections(Permutation(fixtures::kOrder6.a), Permutation(fixtures::kOrder6.b));
  CHECK(cube == fixtures::kOrder6.cube());

  const auto diag = costas::cube_from_projections(Permutation::identity(5), Permutation::identity(5));
  CHECK(diag == CostasCube::diagonal(5));
  CHECK(costas::projections(diag).c == Permutation::identity(5));

  const auto p13 = costas::cube_from_projections(Permutation(fixtures::kP13.a), Permutation(fixtures::kP13.b));
  CHECK(p13 == fixtures::kP13.cube());

  CHECK_THROWS_AS(costas::cube_from_projections(Permutation({1, 2}), Permutation({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("cube_from_pair examples") {
  const Permutation a(fixtures::kOrder6.a), b(fixtures::kOrder6.b), c(fixtures::kOrder6.c);
  CHECK(costas::cube_from_pair(ProjectionPair::AB, a, b) == costas::cube_from_projections(a, b));
  CHECK(costas::cube_from_pair(ProjectionPair::AC, a, c) == fixtures::kOrder6.cube());
  CHECK(costas::cube_from_pair(ProjectionPair::BC, b, c) == fixtures::kOrder6.cube());
  CHECK(costas::cube_from_pair(ProjectionPair::BC, Permutation::identity(4), Permutation::identity(4)) ==
        CostasCube::diagonal(4));
  CHECK_THROWS_AS(costas::cube_from_pair(ProjectionPair::AC, a, Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("is_costas_cube examples") {
  CHECK(costas::is_costas_cube(fixtures::kOrder6.cube()));
  CHECK_FALSE(costas::is_costas_cube(CostasCube::diagonal(4)));
  CHECK(costas::is_costas_cube(fixtures::kGf27D.cube()));
}

TEST_CASE("cube validation") {
  CHECK_THROWS_AS(CostasCube({{1, 1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(CostasCube({{1, 1}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CostasCube::from_triples({{1, 1, 1}, {1, 2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(CostasCube::from_triples({{1, 1, 1}, {3, 2, 2}}), std::invalid_argument);
  const auto c = CostasCube::from_triples({{2, 1, 2}, {1, 2, 1}});
  CHECK(c.row(1).j == 2);
}

TEST_CASE("reconstruction round trip and dense projection C, all pairs n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = oracle::all_permutations(n);
    for (const auto& a : perms) {
      for (const auto& b : perms) {
        const auto cube = costas::cube_from_projections(a, b);
        const auto p = costas::projections(cube);
        REQUIRE(p.a == a);
        REQUIRE(p.b == b);
        for (auto which : {ProjectionPair::AB, ProjectionPair::AC, ProjectionPair::BC}) {
          const auto& x = which == ProjectionPair::BC ? p.b : p.a;
          const auto& y = which == ProjectionPair::AB ? p.b : p.c;
          REQUIRE(costas::cube_from_pair(which, x, y) == cube);
        }
        // Projection C by summation over the dense cube, and via a^{-1} o b.
        const auto dense = oracle::dense_projections(oracle::to_dense(cube));
        const auto c_dense = oracle::to_permutation(dense[2]);
        REQUIRE(c_dense);
        const auto a_inv = a.inverse();
        std::vector<int> composed;
        for (int k = 1; k <= n; ++k) composed.push_back(a_inv(b(k)));
        CHECK(*c_dense == p.c);
        CHECK(p.c.values() == composed);
        CHECK(*oracle::to_permutation(dense[0]) == p.a);
        CHECK(*oracle::to_permutation(dense[1]) == p.b);
      }
    }
  }
}
