#include <doctest.h>

#include "kgt/classify.hpp"
#include "kgt/equiv.hpp"

using namespace kgt;

namespace {

GridPermutation gp(int n, int m, const std::string& cycles) {
  GridShape sh{n, m};
  return GridPermutation{sh, Permutation::parse(cycles, sh.cells())};
}

}  // namespace

TEST_CASE("intertwiner dimension matches the cycle-gcd formula on all 2x2 pairs") {
  auto perms = all_permutations(4);
  GridShape sh{2, 2};
  for (const auto& p : perms)
    for (const auto& q : perms) {
      GridPermutation theta{sh, p}, tau{sh, q};
      IntertwinerSpace W = intertwiner_space(theta, tau);
      CHECK(W.dim == intertwiner_dim_formula(theta, tau));
      // every basis element really intertwines
      for (const QMat& X : W.basis) {
        for (int r = 0; r < 4; r++)
          for (int c = 0; c < 4; c++)
            CHECK(X.at(r, c) == X.at(p.apply(r), q.apply(c)));
      }
    }
}

TEST_CASE("conjugator search finds witnesses and certifies misses") {
  GridPermutation g = gp(2, 3, "(1 2 3 6 5 4)");
  auto sigma = Permutation::parse("(1 2)", 2);
  auto rho = Permutation::parse("(2 3)", 3);
  GridPermutation h = embed_product(sigma, rho);
  GridPermutation conj{g.shape, h.perm.compose(g.perm).compose(h.perm.inverse())};
  auto w = product_conjugate(conj, g);
  REQUIRE(w.has_value());
  GridPermutation back = embed_product(w->first, w->second);
  CHECK(back.perm.compose(g.perm).compose(back.perm.inverse()) == conj.perm);

  // a named class and its inverse are not conjugate
  GridPermutation a = gp(2, 3, "(124653)");
  GridPermutation b{a.shape, a.perm.inverse()};
  CHECK(b.perm.to_cycle_string() == "(1 3 5 6 4 2)");
  CHECK_FALSE(product_conjugate(a, b).has_value());
}

TEST_CASE("cycle type obstruction short-circuits") {
  auto v = decide_product_unitary_equivalence(gp(2, 2, "(1 2)"), gp(2, 2, "(1 2 3)"));
  CHECK(v.status == EquivStatus::NotEquivalent);
  CHECK(v.filter == "cycle_type");
  CHECK(verify_verdict(gp(2, 2, "(1 2)"), gp(2, 2, "(1 2 3)"), v));
}

TEST_CASE("the two full-cycle 2x2 classes are inequivalent by tensor elimination") {
  GridPermutation theta = gp(2, 2, "(1 2 4 3)");
  GridPermutation tau = gp(2, 2, "(1 2 3 4)");
  CHECK_FALSE(product_conjugate(theta, tau).has_value());
  CHECK_FALSE(invertible_elementary_tensor_exists(theta, tau));
  auto v = decide_product_unitary_equivalence(theta, tau);
  CHECK(v.status == EquivStatus::NotEquivalent);
  CHECK(v.filter == "tensor_elimination");
  CHECK(verify_verdict(theta, tau, v));
}

TEST_CASE("the two 3-cycle 2x2 classes are unitarily equivalent but not conjugate") {
  GridPermutation theta = gp(2, 2, "(1 4 2)");
  GridPermutation tau = gp(2, 2, "(1 2 4)");
  CHECK_FALSE(product_conjugate(theta, tau).has_value());
  CHECK(invertible_elementary_tensor_exists(theta, tau));
  auto v = decide_product_unitary_equivalence(theta, tau);
  CHECK(v.status == EquivStatus::Equivalent);
  CHECK(v.filter == "unitary_tensor");
  REQUIRE(v.unitary_witness.has_value());
  CHECK(unitary_intertwining_residual(theta, tau, v.unitary_witness->first,
                                      v.unitary_witness->second) < 1e-12);
  CHECK(verify_verdict(theta, tau, v));
}

TEST_CASE("self pairs are equivalent via the identity conjugator") {
  GridPermutation g = gp(2, 3, "(1 2 4 6 3 5)");
  auto v = decide_product_unitary_equivalence(g, g);
  CHECK(v.status == EquivStatus::Equivalent);
  CHECK(v.filter == "conjugacy");
  CHECK(verify_verdict(g, g, v));
}

TEST_CASE("rank-1 orbit analysis of full cycles") {
  for (auto g : {gp(2, 2, "(1 2 3 4)"), gp(2, 2, "(1 2 4 3)"), gp(2, 3, "(1 2 3 4 5 6)")}) {
    Rank1Report r = rank1_orbit_analysis(g);
    // every admissible family has at least two nonzero entries, and every
    // rejected support carries replayable proof data
    for (const auto& fam : r.admissible_families)
      CHECK(fam.row_support.size() * fam.col_support.size() >= 2);
    for (const auto& rej : r.rejections) {
      CHECK(rej.contains("reason"));
      std::string reason = rej["reason"].get<std::string>();
      CHECK((reason == "zero_clash" || reason == "constants_only"));
    }
  }
  // non-cycles are outside the hypotheses
  CHECK_THROWS_AS(rank1_orbit_analysis(gp(2, 2, "(1 2)")), Error);
}

TEST_CASE("sample of distinct 2x3 cyclic pairs is inequivalent") {
  OrbitCatalog cat = conjugacy_orbits({2, 3}, CatalogScope::CyclicOnly);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {0, 13}, {4, 9}, {6, 7}}) {
    auto v = decide_product_unitary_equivalence(cat.entries[a].rep, cat.entries[b].rep);
    CHECK(v.status == EquivStatus::NotEquivalent);
    CHECK(verify_verdict(cat.entries[a].rep, cat.entries[b].rep, v));
  }
}

TEST_CASE("bigraded map check accepts conjugacy witnesses and rejects junk") {
  GridPermutation g = gp(2, 2, "(1 2 3 4)");
  auto sigma = Permutation::parse("(1 2)", 2);
  auto rho = Permutation::parse("(1 2)", 2);
  GridPermutation h = embed_product(sigma, rho);
  GridPermutation conj{g.shape, h.perm.compose(g.perm).compose(h.perm.inverse())};
  QMat A(2, 2), B(2, 2);
  for (int i = 0; i < 2; i++) {
    A.at(sigma.apply(i), i) = 1;
    B.at(rho.apply(i), i) = 1;
  }
  CHECK(check_bigraded_iso(A, B, conj, g, 3));
  // identity matrices do not intertwine distinct relations
  CHECK_FALSE(check_bigraded_iso(QMat::identity(2), QMat::identity(2), conj, g, 2));
  QMat S(2, 2);
  S.at(0, 0) = 1;
  S.at(1, 0) = 1;  // singular
  CHECK_THROWS_AS(check_bigraded_iso(S, B, conj, g, 2), Error);
}
