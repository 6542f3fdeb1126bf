#include <doctest.h>

#include <cmath>

#include "kgt/fock.hpp"

using namespace kgt;

namespace {

RelationSet rel22(const std::string& cycles) {
  GridShape sh{2, 2};
  return RelationSet::rank2(GridPermutation{sh, Permutation::parse(cycles, 4)});
}

RelationSet rel23(const std::string& cycles) {
  GridShape sh{2, 3};
  return RelationSet::rank2(GridPermutation{sh, Permutation::parse(cycles, 6)});
}

NormalWord nw(const RelationSet& rel, const std::string& text) {
  return normal_form(rel, parse_word(rel, text));
}

}  // namespace

TEST_CASE("truncated basis sizes and ordering") {
  RelationSet rel = rel22("(1 2 3 4)");
  TruncatedFock F2 = build_fock(rel, 2);
  CHECK(F2.dim() == 17);
  CHECK(build_fock(rel, 5).dim() == 321);
  CHECK(build_fock(rel23("()"), 1).dim() == 6);
  CHECK(build_fock(rel, 0).dim() == 1);

  // vacuum first, then ordered by total degree
  CHECK(F2.basis[0].total_degree() == 0);
  CHECK(F2.degree_start == std::vector<int>{0, 1, 5, 17});
  for (int i = 1; i < F2.dim(); i++)
    CHECK(F2.basis[i - 1].total_degree() <= F2.basis[i].total_degree());
  CHECK_THROWS_AS(build_fock(rel, 20, 100), Error);
}

TEST_CASE("shift matrices act by the rewritten word") {
  RelationSet rel = rel22("(1 2 3 4)");
  TruncatedFock F = build_fock(rel, 3);
  GeneratorMatrix Lf2 = generator_matrix(F, Side::Left, Letter{2, 2});
  // f2 e1 rewrites to e1 f1
  CHECK(Lf2.col_to_row[F.index.at(nw(rel, "e1"))] == F.index.at(nw(rel, "e1 f1")));
  GeneratorMatrix Le1 = generator_matrix(F, Side::Left, Letter{1, 1});
  CHECK(Le1.col_to_row[0] == F.index.at(nw(rel, "e1")));
  GeneratorMatrix Rf1 = generator_matrix(F, Side::Right, Letter{2, 1});
  CHECK(Rf1.col_to_row[F.index.at(nw(rel, "e1"))] == F.index.at(nw(rel, "e1 f1")));
  // top-degree words are annihilated
  CHECK(Le1.col_to_row[F.index.at(nw(rel, "e1 e1 f1"))] == -1);
  // a longer word matrix equals the composition of its letters
  GeneratorMatrix W = word_matrix(F, Side::Left, nw(rel, "e1 f2"));
  QMat prod = generator_matrix(F, Side::Left, Letter{1, 1})
                  .to_qmat()
                  .mul(generator_matrix(F, Side::Left, Letter{2, 2}).to_qmat());
  CHECK(W.to_qmat() == prod);
}

TEST_CASE("structural identities hold on the truncation") {
  for (const std::string& cyc : {"()", "(1 2 3 4)", "(1 2 4 3)", "(1 2)(3 4)"}) {
    TruncatedFock F = build_fock(rel22(cyc), 4);
    RelationCheckReport rep = verify_relations(F);
    CHECK(rep.ok);
    CHECK(rep.violations.empty());
  }
  // rank-3 interchange relations at N=4
  nlohmann::json j{{"rank", 3},
                   {"multiplicities", {2, 2, 2}},
                   {"relations", {{"1,2", "()"}, {"1,3", "()"}, {"2,3", "()"}}}};
  RelationSet r3 = RelationSet::from_json(j);
  check_unique_factorization(r3, 4);
  CHECK(verify_relations(build_fock(r3, 4)).ok);
}

TEST_CASE("corrupting the basis after the build is detected") {
  RelationSet rel = rel22("(1 2 3 4)");
  TruncatedFock F = build_fock(rel, 3);
  // put a top-degree word where a degree-1 word should sit: shifts out of the
  // mislabeled slot fall off the truncation and break the isometry grading
  std::swap(F.basis[1], F.basis[F.dim() - 1]);
  RelationCheckReport rep = verify_relations(F);
  CHECK_FALSE(rep.ok);
  CHECK(rep.violations.size() > 0);
  CHECK(rep.violations[0].contains("witness_word"));
}

TEST_CASE("Fourier coefficients read off the vacuum column") {
  RelationSet rel = rel22("(1 2 3 4)");
  TruncatedFock F = build_fock(rel, 3);
  CMat A = CMat::identity(F.dim()).scaled(3.0);
  QMat ef = word_matrix(F, Side::Left, nw(rel, "e1 f1")).to_qmat();
  for (int r = 0; r < F.dim(); r++)
    for (int c = 0; c < F.dim(); c++)
      A.at(r, c) += 2.0 * ef.at(r, c).get_d();
  FourierCoefficients fc = fourier_coefficients(F, A);
  CHECK(std::abs(fc.a.at(NormalWord(2)) - cplx(3.0)) < 1e-14);
  CHECK(std::abs(fc.a.at(nw(rel, "e1 f1")) - cplx(2.0)) < 1e-14);
  CHECK(std::abs(fc.a.at(nw(rel, "e1"))) < 1e-14);
  CHECK_FALSE(fc.vanishing_constant_term);
  // the unweighted sum of the coefficients reconstructs the polynomial
  CMat back = cesaro_sum(F, fc.a, 0);
  CHECK(back.max_abs_diff(A) < 1e-12);
  // pure shift operators have no constant term
  FourierCoefficients shift =
      fourier_coefficients(F, word_matrix(F, Side::Left, nw(rel, "e1 f1")).to_cmat());
  CHECK(shift.vanishing_constant_term);
}

TEST_CASE("Cesaro weights scale each degree") {
  RelationSet rel = rel22("(1 2 3 4)");
  TruncatedFock F = build_fock(rel, 3);
  std::map<NormalWord, cplx> one{{nw(rel, "e1"), cplx(1.0)}};
  CMat half = cesaro_sum(F, one, 2);  // weight 1 - 1/2
  CMat full = cesaro_sum(F, one, 0);
  CHECK(half.max_abs_diff(full.scaled(0.5)) < 1e-14);
}

TEST_CASE("points of the variety inside the ball evaluate characters") {
  RelationSet rel = rel22("(1 2 3 4)");
  GelfandPoint p = gelfand_point(rel, VarietyPoint{{{0.5, 0.5}, {0.25, 0.25}}});
  TruncatedFock F = build_fock(rel, 3);
  CHECK(std::abs(character_eval(rel, p, nw(rel, "e1 f1")) - cplx(0.125)) < 1e-14);
  CVec om = omega_vector(F, p);
  CHECK(std::abs(om[0] - cplx(1.0)) < 1e-14);
  CHECK(std::abs(om[F.index.at(nw(rel, "e1 f1"))] - cplx(0.125)) < 1e-14);
  // diagonal points always lie on the variety; non-variety points are refused
  CHECK_THROWS_AS(gelfand_point(rel, VarietyPoint{{{0.5, 0.25}, {0.25, 0.25}}}), Error);
  // points on or outside the sphere are refused
  CHECK_THROWS_AS(gelfand_point(rel, VarietyPoint{{{1.0, 0.0}, {0.0, 0.0}}}), Error);
}

TEST_CASE("norm of the character vector: partial sums against the closed form") {
  RelationSet rel = rel22("(1 2 3 4)");
  GelfandPoint p = gelfand_point(rel, VarietyPoint{{{0.5, 0.0}, {0.0, 0.0}}});
  // one block of squared norm 1/4, one of 0: limit is 1/(1 - 1/4)
  CHECK(omega_norm_closed_form(rel, p) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  double prev = 0.0;
  for (int N = 1; N <= 30; N++) {
    double s = omega_norm_partial(rel, p, N);
    CHECK(s >= prev);
    prev = s;
  }
  CHECK(std::abs(prev - 4.0 / 3.0) < 1e-9);
  // the partial sum matches the materialized vector on a small truncation
  TruncatedFock F = build_fock(rel, 4);
  CVec om = omega_vector(F, p);
  double direct = 0.0;
  for (const cplx& z : om) direct += std::norm(z);
  CHECK(std::abs(direct - omega_norm_partial(rel, p, 4)) < 1e-12);
}

TEST_CASE("character vectors are exact adjoint eigenvectors below the boundary") {
  RelationSet rel = rel22("(1 2 3 4)");
  TruncatedFock F = build_fock(rel, 4);
  std::vector<std::vector<mpq_class>> alpha{{mpq_class(1, 3), mpq_class(1, 3)},
                                            {mpq_class(1, 5), mpq_class(1, 5)}};
  std::vector<mpq_class> om = omega_vector_exact(F, alpha);
  CHECK(om[0] == 1);
  CHECK(om[F.index.at(nw(rel, "e1 f1"))] == mpq_class(1, 15));
  // (L_g)* om agrees with alpha_g om at every surviving index, exactly
  for (int cls = 1; cls <= 2; cls++)
    for (int idx = 1; idx <= 2; idx++) {
      GeneratorMatrix L = generator_matrix(F, Side::Left, Letter{cls, idx});
      mpq_class a = alpha[cls - 1][idx - 1];
      for (int j = 0; j < F.dim(); j++)
        if (L.col_to_row[j] >= 0) CHECK(om[L.col_to_row[j]] == a * om[j]);
    }
}

TEST_CASE("right shifts are the left shifts of the opposite relation") {
  RelationSet rel = rel22("(1 2 4 3)");
  RelationSet op = opposite(rel);
  TruncatedFock F = build_fock(rel, 3);
  TruncatedFock G = build_fock(op, 3);
  // basis bijection: reverse the word and renormalize on the opposite side
  std::vector<int> to_op(F.dim());
  for (int j = 0; j < F.dim(); j++) {
    Word w = F.basis[j].to_word();
    std::reverse(w.begin(), w.end());
    to_op[j] = G.index.at(normal_form(op, w));
  }
  for (int cls = 1; cls <= 2; cls++)
    for (int idx = 1; idx <= 2; idx++) {
      GeneratorMatrix R = generator_matrix(F, Side::Right, Letter{cls, idx});
      GeneratorMatrix L = generator_matrix(G, Side::Left, Letter{cls, idx});
      for (int j = 0; j < F.dim(); j++) {
        int r = R.col_to_row[j];
        CHECK(L.col_to_row[to_op[j]] == (r < 0 ? -1 : to_op[r]));
      }
    }
}

TEST_CASE("graded tensor operator of a permutation pair intertwines exactly") {
  GridShape sh{2, 3};
  GridPermutation theta{sh, Permutation::parse("(1 2 3 6 5 4)", 6)};
  auto sigma = Permutation::parse("(1 2)", 2);
  auto rho = Permutation::parse("(1 2 3)", 3);
  GridPermutation h = embed_product(sigma, rho);
  GridPermutation tau{sh, h.perm.compose(theta.perm).compose(h.perm.inverse())};
  RelationSet rt = RelationSet::rank2(theta), ru = RelationSet::rank2(tau);
  TruncatedFock F = build_fock(rt, 3), G = build_fock(ru, 3);

  CMat A(2, 2), B(3, 3);
  for (int i = 0; i < 2; i++) A.at(i, sigma.apply(i)) = 1.0;
  for (int j = 0; j < 3; j++) B.at(j, rho.apply(j)) = 1.0;
  CMat U = graded_tensor_operator(F, G, A, B);
  CHECK(U.mul(U.adjoint()).max_abs_diff(CMat::identity(G.dim())) == 0.0);

  // U L_{e_i} = L_{e_{sigma(i)}} U and U L_{f_j} = L_{f_{rho(j)}} U
  for (int i = 1; i <= 2; i++) {
    CMat lhs = U.mul(generator_matrix(F, Side::Left, Letter{1, i}).to_cmat());
    CMat rhs = generator_matrix(G, Side::Left, Letter{1, sigma.apply1(i)}).to_cmat().mul(U);
    CHECK(lhs.max_abs_diff(rhs) == 0.0);
  }
  for (int j = 1; j <= 3; j++) {
    CMat lhs = U.mul(generator_matrix(F, Side::Left, Letter{2, j}).to_cmat());
    CMat rhs = generator_matrix(G, Side::Left, Letter{2, rho.apply1(j)}).to_cmat().mul(U);
    CHECK(lhs.max_abs_diff(rhs) == 0.0);
  }
}

TEST_CASE("graded tensor operator of a Hadamard-type pair intertwines") {
  GridShape sh{2, 2};
  GridPermutation theta{sh, Permutation::parse("(1 4 2)", 4)};
  GridPermutation tau{sh, Permutation::parse("(1 2 4)", 4)};
  RelationSet rt = RelationSet::rank2(theta), ru = RelationSet::rank2(tau);
  TruncatedFock F = build_fock(rt, 3), G = build_fock(ru, 3);

  const double s = 1.0 / std::sqrt(2.0);
  CMat A(2, 2), B(2, 2);
  A.at(0, 0) = s;
  A.at(0, 1) = -s;
  A.at(1, 0) = -s;
  A.at(1, 1) = -s;
  B.at(0, 0) = -s;
  B.at(0, 1) = -s;
  B.at(1, 0) = -s;
  B.at(1, 1) = s;
  CMat U = graded_tensor_operator(F, G, A, B);
  CHECK(U.mul(U.adjoint()).max_abs_diff(CMat::identity(G.dim())) < 1e-12);

  // U L_{e_i} = sum_k A[i,k] L_{e_k} U, and likewise for the f letters via B
  for (int i = 0; i < 2; i++) {
    CMat lhs = U.mul(generator_matrix(F, Side::Left, Letter{1, i + 1}).to_cmat());
    CMat rhs(G.dim(), F.dim());
    for (int k = 0; k < 2; k++)
      rhs = rhs.plus(
          generator_matrix(G, Side::Left, Letter{1, k + 1}).to_cmat().mul(U).scaled(A.at(i, k)));
    CHECK(lhs.max_abs_diff(rhs) < 1e-12);
  }
  for (int j = 0; j < 2; j++) {
    CMat lhs = U.mul(generator_matrix(F, Side::Left, Letter{2, j + 1}).to_cmat());
    CMat rhs(G.dim(), F.dim());
    for (int l = 0; l < 2; l++)
      rhs = rhs.plus(
          generator_matrix(G, Side::Left, Letter{2, l + 1}).to_cmat().mul(U).scaled(B.at(j, l)));
    CHECK(lhs.max_abs_diff(rhs) < 1e-12);
  }
}

TEST_CASE("export formats") {
  RelationSet rel = rel22("(1 2 3 4)");
  TruncatedFock F = build_fock(rel, 1);
  GeneratorMatrix L = generator_matrix(F, Side::Left, Letter{1, 1});
  std::string mm = matrix_market(L);
  CHECK(mm.rfind("%%MatrixMarket matrix coordinate integer general\n", 0) == 0);
  CHECK(mm.find("5 5 1\n") != std::string::npos);  // dim 5, one surviving column
  // the single entry sends the vacuum (column 1) to xi_{e1}, 1-based
  std::string entry = std::to_string(F.index.at(nw(rel, "e1")) + 1) + " 1 1\n";
  CHECK(mm.find(entry) != std::string::npos);

  nlohmann::json v = vector_json(CVec{cplx(1.0, -2.0), cplx(0.0, 0.5)});
  CHECK(v.size() == 2);
  CHECK(v[0][0].get<double>() == 1.0);
  CHECK(v[0][1].get<double>() == -2.0);
  CHECK(v[1][1].get<double>() == 0.5);
}
