#include <doctest.h>

#include <set>

#include "kgt/classify.hpp"

using namespace kgt;

TEST_CASE("the cyclic 2x3 catalog has the expected fourteen classes") {
  OrbitCatalog cat = conjugacy_orbits({2, 3}, CatalogScope::CyclicOnly);
  REQUIRE(cat.entries.size() == 14);
  long total = 0;
  for (const auto& e : cat.entries) {
    total += e.orbit_size;
    CHECK(e.minimal_variety);
    CHECK(12 % e.orbit_size == 0);  // orbit-stabilizer
  }
  CHECK(total == 120);  // all full 6-cycles

  std::vector<std::string> reps;
  for (const auto& e : cat.entries) reps.push_back(e.rep.perm.to_cycle_string());
  std::vector<std::string> expected{
      "(1 2 3 4 5 6)", "(1 2 3 4 6 5)", "(1 2 3 5 6 4)", "(1 2 3 5 4 6)",
      "(1 2 3 6 5 4)", "(1 2 4 3 5 6)", "(1 2 4 6 3 5)", "(1 2 4 3 6 5)",
      "(1 2 4 5 3 6)", "(1 2 5 6 3 4)", "(1 2 5 4 3 6)", "(1 4 2 5 3 6)",
      "(1 4 2 6 3 5)", "(1 5 3 4 2 6)"};
  CHECK(reps == expected);

  InversePairingSummary inv = inverse_pairing_summary(cat);
  CHECK(inv.self_paired == 10);
  CHECK(inv.swapped_pairs == 2);
}

TEST_CASE("full 2x2 catalog and semigroup class count") {
  OrbitCatalog cat = conjugacy_orbits({2, 2}, CatalogScope::All);
  CHECK(cat.entries.size() == 12);
  CHECK(count_semigroup_classes({2, 2}) == 9);
  CHECK(count_semigroup_classes({2, 3}) == 84);  // n != m: no color swap
}

TEST_CASE("serial and parallel enumerations agree") {
  for (auto scope : {CatalogScope::All, CatalogScope::CyclicOnly}) {
    OrbitCatalog par = conjugacy_orbits({2, 2}, scope);
    OrbitCatalog ser = conjugacy_orbits_serial({2, 2}, scope);
    REQUIRE(par.entries.size() == ser.entries.size());
    for (size_t i = 0; i < par.entries.size(); i++) {
      CHECK(par.entries[i].rep == ser.entries[i].rep);
      CHECK(par.entries[i].orbit_size == ser.entries[i].orbit_size);
    }
  }
}

TEST_CASE("canonical representative identifies product conjugacy") {
  GridShape sh{2, 3};
  GridPermutation g{sh, Permutation::parse("(1 2 3 6 5 4)", 6)};
  for (const GridPermutation& h : product_subgroup(sh)) {
    GridPermutation c{sh, h.perm.compose(g.perm).compose(h.perm.inverse())};
    CHECK(canonical_rep(c) == canonical_rep(g));
  }
  GridPermutation other{sh, Permutation::parse("(1 2 3 4 5 6)", 6)};
  CHECK_FALSE(canonical_rep(other) == canonical_rep(g));
}

TEST_CASE("catalog JSON round trips") {
  OrbitCatalog cat = conjugacy_orbits({2, 2}, CatalogScope::CyclicOnly);
  OrbitCatalog back = OrbitCatalog::from_json(cat.to_json());
  REQUIRE(back.entries.size() == cat.entries.size());
  for (size_t i = 0; i < cat.entries.size(); i++) {
    CHECK(back.entries[i].rep == cat.entries[i].rep);
    CHECK(back.entries[i].stats == cat.entries[i].stats);
    CHECK(back.entries[i].inverse_class == cat.entries[i].inverse_class);
  }
}

TEST_CASE("stats of the class containing a named witness") {
  OrbitCatalog cat = conjugacy_orbits({2, 3}, CatalogScope::CyclicOnly);
  GridPermutation g{{2, 3}, Permutation::parse("(1 2 3 6 5 4)", 6)};
  GridPermutation c = canonical_rep(g);
  bool found = false;
  for (const auto& e : cat.entries)
    if (e.rep == c) {
      found = true;
      CHECK(e.stats.h == 4);
      CHECK(e.stats.r == 4);
      CHECK(e.stats.v == 2);
    }
  CHECK(found);
}
