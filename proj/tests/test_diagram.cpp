#include <doctest.h>

#include <complex>

#include "kgt/classify.hpp"
#include "kgt/diagram.hpp"

using namespace kgt;

namespace {

GridPermutation gp(int n, int m, const std::string& cycles) {
  GridShape sh{n, m};
  return GridPermutation{sh, Permutation::parse(cycles, sh.cells())};
}

}  // namespace

TEST_CASE("edge statistics of known diagrams") {
  DiagramStats s = diagram_stats(gp(2, 3, "(1 2 3 6 5 4)"));
  CHECK(s.h == 4);
  CHECK(s.r == 4);
  CHECK(s.v == 2);
  CHECK(s.diag == 0);
  CHECK(s.fixed == 0);
  CHECK(s.cycle_type == CycleType{6});

  DiagramStats t = diagram_stats(gp(2, 3, "()"));
  CHECK(t.fixed == 6);
  CHECK(t.h + t.v + t.diag == 0);
}

TEST_CASE("statistics are invariant under product conjugation") {
  GridPermutation g = gp(2, 3, "(1 2 4 6 3 5)");
  DiagramStats base = diagram_stats(g);
  for (const GridPermutation& h : product_subgroup(g.shape)) {
    GridPermutation c{g.shape, h.perm.compose(g.perm).compose(h.perm.inverse())};
    CHECK(diagram_stats(c) == base);
  }
}

TEST_CASE("equation classes are the relation cycles for rank 2") {
  RelationSet rel = RelationSet::rank2(gp(2, 2, "(1 2)(3 4)"));
  EquationClasses ec = equation_classes(rel);
  CHECK(ec.ground_size == 4);
  CHECK(ec.num_classes == 2);
  CHECK(ec.class_of[0] == ec.class_of[1]);
  CHECK(ec.class_of[2] == ec.class_of[3]);
  CHECK(ec.class_of[0] != ec.class_of[2]);
}

TEST_CASE("minimal variety detection") {
  CHECK(is_minimal_variety(RelationSet::rank2(gp(2, 3, "(1 2 3 4 5 6)"))));
  CHECK_FALSE(is_minimal_variety(RelationSet::rank2(gp(2, 3, "(1 2)(3 4 5 6)"))));
}

TEST_CASE("variety membership by binomial residuals") {
  RelationSet rel = RelationSet::rank2(gp(2, 2, "(1 2 3 4)"));
  // diagonal points a_i = a, b_j = b satisfy every binomial
  VarietyPoint p{{{0.3, 0.3}, {0.5, 0.5}}};
  CHECK(variety_membership(rel, p, 1e-12));
  VarietyPoint q{{{0.3, 0.4}, {0.5, 0.5}}};
  CHECK_FALSE(variety_membership(rel, q, 1e-12));
  VarietyPoint bad{{{0.3}, {0.5, 0.5}}};
  CHECK_THROWS_AS(variety_membership(rel, bad, 1e-12), Error);
}

TEST_CASE("fixed space has one dimension per cycle") {
  FixedSpace fs = fixed_space(Permutation::parse("(1 2)(3 4 5)", 6));
  CHECK(fs.dimension == 3);
  CHECK(fs.orbit_blocks.size() == 3);
}

TEST_CASE("DOT export pins nodes to grid positions") {
  std::string dot = dot_export(gp(2, 2, "(1 2 3 4)"));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("pos=\"1,-1!\"") != std::string::npos);
  CHECK(dot.find("pos=\"2,-2!\"") != std::string::npos);
  CHECK(dot.find("c1 -> c2") != std::string::npos);
  // identity diagram has no edges
  std::string idle = dot_export(gp(2, 2, "()"));
  CHECK(idle.find("->") == std::string::npos);
}
