#ifndef KGT_FOCK_HPP
#define KGT_FOCK_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "kgt/diagram.hpp"
#include "kgt/ratmat.hpp"
#include "kgt/semigroup.hpp"

namespace kgt {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

// Dense complex matrix for the few places complex arithmetic is needed
// (Cesaro assembly, graded tensor unitaries); shifts stay 0/1 sparse.
class CMat {
 public:
  CMat() = default;
  CMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static CMat identity(int k);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  cplx& at(int r, int c) { return a_[r * cols_ + c]; }
  const cplx& at(int r, int c) const { return a_[r * cols_ + c]; }

  CMat mul(const CMat& other) const;
  CMat adjoint() const;
  CMat scaled(cplx s) const;
  CMat plus(const CMat& other) const;
  CVec apply(const CVec& v) const;
  double max_abs_diff(const CMat& other) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

// Orthonormal basis of normal words of total degree <= N, ordered by degree
// then by lexicographic block comparison; index 0 is the vacuum.
struct TruncatedFock {
  RelationSet rel;
  int N = 0;
  std::vector<NormalWord> basis;
  std::map<NormalWord, int> index;
  std::vector<int> degree_start;  // degree d occupies [degree_start[d], degree_start[d+1])

  int dim() const { return static_cast<int>(basis.size()); }
  int degree_of(int idx) const;
};

// Basis cap guards against accidental blowup.
TruncatedFock build_fock(const RelationSet& rel, int N, long cap = 1'000'000);

enum class Side { Left, Right };

// Shift by one generator: each column has at most one unit entry; words
// pushed above degree N are annihilated.
struct GeneratorMatrix {
  Side side = Side::Left;
  Letter letter;
  int dim = 0;
  std::vector<int> col_to_row;  // -1 encodes a zero column

  CMat to_cmat() const;
  QMat to_qmat() const;
};

GeneratorMatrix generator_matrix(const TruncatedFock& F, Side side, const Letter& l);

// Matrix of L_w (or R_w) for a general word in normal form.
GeneratorMatrix word_matrix(const TruncatedFock& F, Side side, const NormalWord& w);

// Exact 0/1-matrix identity checks on restricted degree ranges:
// (a) defining relations, (b) left/right commutation, (c) degree-projection
// shifting E_{d+1} R_g = R_g E_d, (d) isometry below the boundary.
struct RelationCheckReport {
  bool ok = true;
  nlohmann::json violations;  // array: {check, detail, witness_word}
};

RelationCheckReport verify_relations(const TruncatedFock& F);

// a_w = <A xi_vacuum, xi_w>, all |w| <= N; first entry of the report tells
// whether the constant term vanishes.
struct FourierCoefficients {
  std::map<NormalWord, cplx> a;
  bool vanishing_constant_term = false;
};

FourierCoefficients fourier_coefficients(const TruncatedFock& F, const CMat& A);

// sum over |w| <= n of (1 - |w|/n) a_w L_w; n = 0 means unweighted sum
// (the polynomial-reconstruction limit form).
CMat cesaro_sum(const TruncatedFock& F, const std::map<NormalWord, cplx>& coeffs, int n);

// alpha as a variety point with every block strictly inside its unit ball.
struct GelfandPoint {
  VarietyPoint alpha;
};

GelfandPoint gelfand_point(const RelationSet& rel, const VarietyPoint& alpha, double tol = 1e-9);

// omega = sum_w w(alpha) xi_w over the truncated basis.
CVec omega_vector(const TruncatedFock& F, const GelfandPoint& alpha);

// Exact rational variant for the truncated adjoint eigen-relation.
std::vector<mpq_class> omega_vector_exact(const TruncatedFock& F,
                                          const std::vector<std::vector<mpq_class>>& alpha);

// Degree-<=N partial sum of ||omega_alpha||^2 via the closed per-degree form
// sum_{|d|<=N} prod_i ||alpha^(i)||^{2 d_i}; no basis is materialized.
double omega_norm_partial(const RelationSet& rel, const GelfandPoint& alpha, int N);

// Closed-form limit prod_i (1 - ||alpha^(i)||^2)^{-1}.
double omega_norm_closed_form(const RelationSet& rel, const GelfandPoint& alpha);

// Multiplicative evaluation w(alpha) as a coordinate product.
cplx character_eval(const RelationSet& rel, const GelfandPoint& alpha, const NormalWord& w);

// Graded tensor unitary of an invertible pair (A,B): xi_w maps to the
// expansion of the letterwise image, so U = direct sum of A^{(x)p} (x)
// B^{(x)q} in the normal basis. Rank 2 only.
CMat graded_tensor_operator(const TruncatedFock& domain, const TruncatedFock& codomain,
                            const CMat& A, const CMat& B);

// Matrix Market coordinate export of a shift matrix; vectors as JSON
// [re, im] pairs.
std::string matrix_market(const GeneratorMatrix& g);
nlohmann::json vector_json(const CVec& v);

}  // namespace kgt

#endif
