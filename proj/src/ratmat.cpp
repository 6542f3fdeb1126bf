#include "kgt/ratmat.hpp"

#include <algorithm>

namespace kgt {

QMat QMat::identity(int k) {
  QMat m(k, k);
  for (int i = 0; i < k; i++) m.at(i, i) = 1;
  return m;
}

QMat QMat::mul(const QMat& other) const {
  if (cols_ != other.rows_) throw Error("DimensionMismatch", "matrix product");
  QMat out(rows_, other.cols_);
  for (int i = 0; i < rows_; i++)
    for (int k = 0; k < cols_; k++) {
      const mpq_class& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < other.cols_; j++) out.at(i, j) += v * other.at(k, j);
    }
  return out;
}

QMat QMat::transpose() const {
  QMat out(cols_, rows_);
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) out.at(j, i) = at(i, j);
  return out;
}

int QMat::rref() {
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; col++) {
    int pivot = -1;
    for (int r = rank; r < rows_; r++)
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < cols_; j++) std::swap(at(pivot, j), at(rank, j));
    mpq_class inv = 1 / at(rank, col);
    for (int j = 0; j < cols_; j++) at(rank, j) *= inv;
    for (int r = 0; r < rows_; r++) {
      if (r == rank || at(r, col) == 0) continue;
      mpq_class f = at(r, col);
      for (int j = 0; j < cols_; j++) at(r, j) -= f * at(rank, j);
    }
    rank++;
  }
  return rank;
}

std::vector<std::vector<mpq_class>> QMat::kernel() const {
  QMat m = *this;
  m.rref();
  // locate pivot columns
  std::vector<int> pivot_col(m.rows_, -1);
  std::vector<char> is_pivot(cols_, 0);
  for (int r = 0; r < m.rows_; r++)
    for (int c = 0; c < cols_; c++)
      if (m.at(r, c) != 0) {
        pivot_col[r] = c;
        is_pivot[c] = 1;
        break;
      }
  std::vector<std::vector<mpq_class>> basis;
  for (int c = 0; c < cols_; c++) {
    if (is_pivot[c]) continue;
    std::vector<mpq_class> v(cols_, 0);
    v[c] = 1;
    for (int r = 0; r < m.rows_; r++)
      if (pivot_col[r] >= 0) v[pivot_col[r]] = -m.at(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

mpq_class QMat::determinant() const {
  if (rows_ != cols_) throw Error("DimensionMismatch", "determinant of non-square");
  QMat m = *this;
  mpq_class det = 1;
  for (int col = 0; col < cols_; col++) {
    int pivot = -1;
    for (int r = col; r < rows_; r++)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < cols_; j++) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    mpq_class inv = 1 / m.at(col, col);
    for (int r = col + 1; r < rows_; r++) {
      if (m.at(r, col) == 0) continue;
      mpq_class f = m.at(r, col) * inv;
      for (int j = col; j < cols_; j++) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return det;
}

void IntLattice::add(const std::vector<mpz_class>& v) {
  if (static_cast<int>(v.size()) != dim_) throw Error("DimensionMismatch", "lattice vector");
  gens_.push_back(v);
}

bool IntLattice::member(const std::vector<mpz_class>& v, std::vector<mpz_class>* combo) const {
  // Integer row echelon form with transform tracking: rows_ = T * gens_.
  std::vector<std::vector<mpz_class>> rows = gens_;
  int g = static_cast<int>(gens_.size());
  std::vector<std::vector<mpz_class>> T(g, std::vector<mpz_class>(g, 0));
  for (int i = 0; i < g; i++) T[i][i] = 1;

  int top = 0;
  std::vector<int> pivots;  // (column) per echelon row
  for (int col = 0; col < dim_ && top < g; col++) {
    // Euclidean elimination in this column among rows top..g-1
    while (true) {
      int best = -1;
      for (int r = top; r < g; r++)
        if (rows[r][col] != 0 &&
            (best < 0 || cmp(abs(rows[r][col]), abs(rows[best][col])) < 0))
          best = r;
      if (best < 0) break;
      std::swap(rows[best], rows[top]);
      std::swap(T[best], T[top]);
      bool cleared = true;
      for (int r = top + 1; r < g; r++) {
        if (rows[r][col] == 0) continue;
        mpz_class q = rows[r][col] / rows[top][col];  // truncated division
        for (int c2 = 0; c2 < dim_; c2++) rows[r][c2] -= q * rows[top][c2];
        for (int c2 = 0; c2 < g; c2++) T[r][c2] -= q * T[top][c2];
        if (rows[r][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (rows[top][col] != 0) {
      if (rows[top][col] < 0) {
        for (auto& x : rows[top]) x = -x;
        for (auto& x : T[top]) x = -x;
      }
      pivots.push_back(col);
      top++;
    }
  }

  // Reduce v against the echelon rows.
  std::vector<mpz_class> res = v;
  std::vector<mpz_class> q(top, 0);
  for (int r = 0; r < top; r++) {
    int col = pivots[r];
    if (res[col] == 0) continue;
    mpz_class quo, rem;
    mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), res[col].get_mpz_t(),
                rows[r][col].get_mpz_t());
    if (rem != 0) return false;
    q[r] = quo;
    for (int c2 = 0; c2 < dim_; c2++) res[c2] -= quo * rows[r][c2];
  }
  for (const auto& x : res)
    if (x != 0) return false;
  if (combo) {
    combo->assign(g, 0);
    for (int r = 0; r < top; r++)
      for (int c2 = 0; c2 < g; c2++) (*combo)[c2] += q[r] * T[r][c2];
  }
  return true;
}

}  // namespace kgt
