#ifndef KGT_RATMAT_HPP
#define KGT_RATMAT_HPP

#include <vector>

#include <gmpxx.h>

#include "kgt/error.hpp"

namespace kgt {

// Small dense rational matrix; just enough linear algebra for exact
// intertwiner computations (products, RREF, kernel bases).
class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static QMat identity(int k);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& at(int r, int c) { return a_[r * cols_ + c]; }
  const mpq_class& at(int r, int c) const { return a_[r * cols_ + c]; }

  QMat mul(const QMat& other) const;
  QMat transpose() const;
  bool operator==(const QMat& other) const = default;

  // In-place reduced row echelon form; returns the rank.
  int rref();
  // Basis of the right kernel {x : this * x = 0}, one column vector each.
  std::vector<std::vector<mpq_class>> kernel() const;
  mpq_class determinant() const;  // square only

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<mpq_class> a_;
};

// Integer lattice spanned by a set of row vectors in Z^dim, with exact
// membership tests that can report the integer combination used
// (coefficients over the originally added generators).
class IntLattice {
 public:
  explicit IntLattice(int dim) : dim_(dim) {}
  int dim() const { return dim_; }
  int generators() const { return static_cast<int>(gens_.size()); }
  void add(const std::vector<mpz_class>& v);
  // v in lattice? If combo != nullptr and the answer is yes, *combo holds
  // integers c_g with sum_g c_g * gen_g = v.
  bool member(const std::vector<mpz_class>& v, std::vector<mpz_class>* combo = nullptr) const;

 private:
  int dim_;
  std::vector<std::vector<mpz_class>> gens_;
};

}  // namespace kgt

#endif
