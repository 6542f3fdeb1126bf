#include <doctest.h>

#include "kgt/perm.hpp"

using namespace kgt;

TEST_CASE("cycle notation parsing round trips") {
  auto p = Permutation::parse("(1 2 4 3)", 4);
  CHECK(p.apply1(1) == 2);
  CHECK(p.apply1(2) == 4);
  CHECK(p.apply1(4) == 3);
  CHECK(p.apply1(3) == 1);
  CHECK(p.to_cycle_string() == "(1 2 4 3)");

  CHECK(Permutation::parse("(12)(34)", 4).to_cycle_string() == "(1 2)(3 4)");
  CHECK(Permutation::parse("()", 3) == Permutation::identity(3));
  CHECK(Permutation::parse("(124653)", 6).apply1(1) == 2);
  CHECK(Permutation::parse("[2,3,6,1,4,5]", 6).apply1(3) == 6);
}

TEST_CASE("parse errors carry kinds") {
  CHECK_THROWS_AS(Permutation::parse("(1 1 2)", 4), Error);
  CHECK_THROWS_AS(Permutation::parse("(1 9)", 4), Error);
  CHECK_THROWS_AS(Permutation::parse("(1 2", 4), Error);
}

TEST_CASE("compose, inverse, cycles") {
  auto p = Permutation::parse("(1 2 3)", 5);
  auto q = Permutation::parse("(3 4 5)", 5);
  CHECK(p.compose(p.inverse()) == Permutation::identity(5));
  // (this o other): apply other first
  CHECK(p.compose(q).apply1(3) == 4);
  CHECK(p.compose(q).apply1(5) == 1);
  auto cy = Permutation::parse("(2 5)(3 4)", 6).cycles();
  CHECK(cy.size() == 4);  // two transpositions plus fixed points 1, 6
}

TEST_CASE("cycle types and centralizer orders") {
  CHECK(cycle_type(Permutation::parse("(1 2)(3 4)", 4)) == CycleType{2, 2});
  CHECK(cycle_type(Permutation::parse("(1 2 3)", 4)) == CycleType{3, 1});
  CHECK(centralizer_order({2, 2}) == 8);
  CHECK(centralizer_order({3, 1}) == 3);
  CHECK(centralizer_order({1, 1, 1, 1}) == 24);
  CHECK(centralizer_order({6}) == 6);
}

TEST_CASE("grid embedding sends (i,j) to (sigma(i), tau(j))") {
  auto sigma = Permutation::parse("(1 2)", 2);
  auto tau = Permutation::parse("(1 2 3)", 3);
  GridPermutation g = embed_product(sigma, tau);
  CHECK(g.shape == GridShape{2, 3});
  for (int i = 1; i <= 2; i++)
    for (int j = 1; j <= 3; j++)
      CHECK(g.perm.apply(g.cell(i, j)) == g.cell(sigma.apply1(i), tau.apply1(j)));
  CHECK(product_subgroup({2, 3}).size() == 12);
}

TEST_CASE("orbit counting by the class equation") {
  CHECK(count_conjugacy_orbits({1, 1}) == 1);
  CHECK(count_conjugacy_orbits({2, 2}) == 12);
  CHECK(count_conjugacy_orbits({2, 3}) == 84);
  CHECK(count_conjugacy_orbits({3, 4}) == 3333212);
}
