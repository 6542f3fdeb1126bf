#include "kgt/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kgt {

CMat CMat::identity(int k) {
  CMat m(k, k);
  for (int i = 0; i < k; i++) m.at(i, i) = 1.0;
  return m;
}

CMat CMat::mul(const CMat& other) const {
  if (cols_ != other.rows_) throw Error("DimensionMismatch", "complex matrix product");
  CMat out(rows_, other.cols_);
  for (int i = 0; i < rows_; i++)
    for (int k = 0; k < cols_; k++) {
      const cplx& v = at(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < other.cols_; j++) out.at(i, j) += v * other.at(k, j);
    }
  return out;
}

CMat CMat::adjoint() const {
  CMat out(cols_, rows_);
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) out.at(j, i) = std::conj(at(i, j));
  return out;
}

CMat CMat::scaled(cplx s) const {
  CMat out = *this;
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) out.at(i, j) *= s;
  return out;
}

CMat CMat::plus(const CMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error("DimensionMismatch", "complex matrix sum");
  CMat out = *this;
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) out.at(i, j) += other.at(i, j);
  return out;
}

CVec CMat::apply(const CVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("DimensionMismatch", "matrix-vector");
  CVec out(rows_, 0.0);
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) out[i] += at(i, j) * v[j];
  return out;
}

double CMat::max_abs_diff(const CMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error("DimensionMismatch", "matrix comparison");
  double m = 0;
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) m = std::max(m, std::abs(at(i, j) - other.at(i, j)));
  return m;
}

int TruncatedFock::degree_of(int idx) const {
  for (int d = 0; d <= N; d++)
    if (idx < degree_start[d + 1]) return d;
  throw Error("IndexOutOfRange", "basis index");
}

namespace {

// all index tuples for one block: n^len words, lexicographic
void enumerate_block(int n, int len, std::vector<std::vector<int>>& out) {
  out.clear();
  std::vector<int> cur(len, 1);
  while (true) {
    out.push_back(cur);
    int k = len - 1;
    while (k >= 0 && cur[k] == n) {
      cur[k] = 1;
      k--;
    }
    if (k < 0) break;
    cur[k]++;
  }
  if (len == 0) out.assign(1, {});
}

void enumerate_degree(const RelationSet& rel, int cls, NormalWord& scratch, int remaining,
                      std::vector<NormalWord>& out) {
  int r = rel.rank;
  if (cls == r) {
    if (remaining == 0) out.push_back(scratch);
    return;
  }
  std::vector<std::vector<int>> block;
  for (int len = 0; len <= remaining; len++) {
    if (cls == r - 1 && len != remaining) continue;
    enumerate_block(rel.mult[cls], len, block);
    for (const auto& b : block) {
      scratch.blocks[cls] = b;
      enumerate_degree(rel, cls + 1, scratch, remaining - len, out);
    }
  }
  scratch.blocks[cls].clear();
}

}  // namespace

TruncatedFock build_fock(const RelationSet& rel, int N, long cap) {
  TruncatedFock F;
  F.rel = rel;
  F.N = N;
  F.degree_start.assign(N + 2, 0);
  for (int d = 0; d <= N; d++) {
    std::vector<NormalWord> layer;
    NormalWord scratch(rel.rank);
    enumerate_degree(rel, 0, scratch, d, layer);
    std::sort(layer.begin(), layer.end());
    for (auto& w : layer) {
      if (static_cast<long>(F.basis.size()) >= cap)
        throw Error("TruncationTooLarge", "basis cap exceeded");
      F.index[w] = static_cast<int>(F.basis.size());
      F.basis.push_back(std::move(w));
    }
  }
  int idx = 0;
  for (int d = 0; d <= N; d++) {
    F.degree_start[d] = idx;
    while (idx < F.dim() && F.basis[idx].total_degree() == d) idx++;
  }
  F.degree_start[N + 1] = F.dim();
  return F;
}

CMat GeneratorMatrix::to_cmat() const {
  CMat m(dim, dim);
  for (int j = 0; j < dim; j++)
    if (col_to_row[j] >= 0) m.at(col_to_row[j], j) = 1.0;
  return m;
}

QMat GeneratorMatrix::to_qmat() const {
  QMat m(dim, dim);
  for (int j = 0; j < dim; j++)
    if (col_to_row[j] >= 0) m.at(col_to_row[j], j) = 1;
  return m;
}

GeneratorMatrix word_matrix(const TruncatedFock& F, Side side, const NormalWord& w) {
  GeneratorMatrix g;
  g.side = side;
  g.dim = F.dim();
  Word ww = w.to_word();
  g.letter = ww.empty() ? Letter{} : ww.front();
  g.col_to_row.assign(g.dim, -1);
  for (int j = 0; j < g.dim; j++) {
    NormalWord prod = side == Side::Left ? multiply(F.rel, w, F.basis[j])
                                         : multiply(F.rel, F.basis[j], w);
    if (prod.total_degree() <= F.N) g.col_to_row[j] = F.index.at(prod);
  }
  return g;
}

GeneratorMatrix generator_matrix(const TruncatedFock& F, Side side, const Letter& l) {
  NormalWord w(F.rel.rank);
  w.blocks[l.cls - 1].push_back(l.idx);
  GeneratorMatrix g = word_matrix(F, side, w);
  g.letter = l;
  return g;
}

namespace {

std::vector<int> compose_cols(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> out(inner.size(), -1);
  for (size_t j = 0; j < inner.size(); j++)
    if (inner[j] >= 0) out[j] = outer[inner[j]];
  return out;
}

}  // namespace

RelationCheckReport verify_relations(const TruncatedFock& F) {
  RelationCheckReport rep;
  rep.violations = nlohmann::json::array();
  const RelationSet& rel = F.rel;
  int dim = F.dim();
  auto fail = [&](const std::string& check, const std::string& detail, int witness_col) {
    rep.ok = false;
    rep.violations.push_back({{"check", check},
                              {"detail", detail},
                              {"witness_word", word_to_string(F.basis[witness_col])}});
  };

  std::vector<std::vector<GeneratorMatrix>> L(rel.rank), R(rel.rank);
  for (int c = 1; c <= rel.rank; c++)
    for (int i = 1; i <= rel.mult[c - 1]; i++) {
      L[c - 1].push_back(generator_matrix(F, Side::Left, Letter{c, i}));
      R[c - 1].push_back(generator_matrix(F, Side::Right, Letter{c, i}));
    }

  // (a) defining relations on input degrees <= N-2
  for (const auto& [key, theta] : rel.rel) {
    auto [a, b] = key;
    int nb = rel.mult[b - 1];
    for (int p = 1; p <= rel.mult[a - 1]; p++)
      for (int q = 1; q <= nb; q++) {
        int img = theta.apply((p - 1) * nb + (q - 1));
        int pp = img / nb + 1, qp = img % nb + 1;
        auto lhs = compose_cols(L[a - 1][p - 1].col_to_row, L[b - 1][q - 1].col_to_row);
        auto rhs = compose_cols(L[b - 1][qp - 1].col_to_row, L[a - 1][pp - 1].col_to_row);
        for (int j = 0; j < dim; j++)
          if (F.degree_of(j) <= F.N - 2 && lhs[j] != rhs[j]) {
            std::ostringstream os;
            os << "classes (" << a << "," << b << ") indices (" << p << "," << q << ")";
            fail("relation", os.str(), j);
          }
      }
  }

  // (b) left shifts commute with right shifts on input degrees <= N-2
  for (int c1 = 0; c1 < rel.rank; c1++)
    for (const auto& lg : L[c1])
      for (int c2 = 0; c2 < rel.rank; c2++)
        for (const auto& rg : R[c2]) {
          auto lhs = compose_cols(lg.col_to_row, rg.col_to_row);
          auto rhs = compose_cols(rg.col_to_row, lg.col_to_row);
          for (int j = 0; j < dim; j++)
            if (F.degree_of(j) <= F.N - 2 && lhs[j] != rhs[j])
              fail("left_right_commute", "left/right shift pair disagrees", j);
        }

  // (c) degree projections: E_{d+1} R_g = R_g E_d
  for (int c = 0; c < rel.rank; c++)
    for (const auto& rg : R[c])
      for (int d = 0; d <= F.N - 1; d++)
        for (int j = 0; j < dim; j++) {
          int lhs = rg.col_to_row[j] >= 0 && F.degree_of(rg.col_to_row[j]) == d + 1
                        ? rg.col_to_row[j]
                        : -1;
          int rhs = F.degree_of(j) == d ? rg.col_to_row[j] : -1;
          if (lhs != rhs) fail("degree_shift", "projection/shift exchange fails", j);
        }

  // (d) isometry below the boundary: columns of degree <= N-1 are orthonormal
  for (int c = 0; c < rel.rank; c++)
    for (const auto& lg : L[c]) {
      std::vector<int> seen(dim, -1);
      for (int j = 0; j < dim; j++) {
        if (F.degree_of(j) > F.N - 1) continue;
        int r = lg.col_to_row[j];
        if (r < 0) {
          fail("isometry", "zero column below the truncation boundary", j);
          continue;
        }
        if (seen[r] >= 0) fail("isometry", "repeated image column", j);
        seen[r] = j;
      }
    }
  return rep;
}

FourierCoefficients fourier_coefficients(const TruncatedFock& F, const CMat& A) {
  if (A.rows() != F.dim() || A.cols() != F.dim())
    throw Error("DimensionMismatch", "operator not on the truncated basis");
  FourierCoefficients out;
  for (int i = 0; i < F.dim(); i++) out.a[F.basis[i]] = A.at(i, 0);
  out.vanishing_constant_term = std::abs(A.at(0, 0)) < 1e-12;
  return out;
}

CMat cesaro_sum(const TruncatedFock& F, const std::map<NormalWord, cplx>& coeffs, int n) {
  if (n > F.N) throw Error("IndexOutOfRange", "cesaro order exceeds truncation");
  CMat out(F.dim(), F.dim());
  for (const auto& [w, a] : coeffs) {
    int d = w.total_degree();
    double weight = 1.0;
    if (n > 0) {
      if (d > n) continue;
      weight = 1.0 - static_cast<double>(d) / n;
    }
    if (a == 0.0 || weight == 0.0) continue;
    GeneratorMatrix Lw = word_matrix(F, Side::Left, w);
    for (int j = 0; j < F.dim(); j++)
      if (Lw.col_to_row[j] >= 0) out.at(Lw.col_to_row[j], j) += weight * a;
  }
  return out;
}

GelfandPoint gelfand_point(const RelationSet& rel, const VarietyPoint& alpha, double tol) {
  if (!variety_membership(rel, alpha, tol)) throw Error("NotInVariety", "gelfand point");
  for (const auto& block : alpha.coords) {
    double s = 0;
    for (const auto& z : block) s += std::norm(z);
    if (s >= 1.0) throw Error("NotInOpenBall", "block norm >= 1");
  }
  return GelfandPoint{alpha};
}

cplx character_eval(const RelationSet& rel, const GelfandPoint& alpha, const NormalWord& w) {
  if (static_cast<int>(w.blocks.size()) != rel.rank)
    throw Error("DimensionMismatch", "word rank");
  cplx v = 1.0;
  for (int c = 0; c < rel.rank; c++)
    for (int idx : w.blocks[c]) v *= alpha.alpha.coords[c][idx - 1];
  return v;
}

CVec omega_vector(const TruncatedFock& F, const GelfandPoint& alpha) {
  CVec out(F.dim());
  for (int i = 0; i < F.dim(); i++) out[i] = character_eval(F.rel, alpha, F.basis[i]);
  return out;
}

std::vector<mpq_class> omega_vector_exact(const TruncatedFock& F,
                                          const std::vector<std::vector<mpq_class>>& alpha) {
  std::vector<mpq_class> out(F.dim());
  for (int i = 0; i < F.dim(); i++) {
    mpq_class v = 1;
    for (int c = 0; c < F.rel.rank; c++)
      for (int idx : F.basis[i].blocks[c]) v *= alpha[c][idx - 1];
    out[i] = v;
  }
  return out;
}

namespace {

std::vector<double> block_norms_sq(const GelfandPoint& alpha) {
  std::vector<double> s;
  for (const auto& block : alpha.alpha.coords) {
    double t = 0;
    for (const auto& z : block) t += std::norm(z);
    s.push_back(t);
  }
  return s;
}

}  // namespace

double omega_norm_partial(const RelationSet& rel, const GelfandPoint& alpha, int N) {
  std::vector<double> s = block_norms_sq(alpha);
  // sum over multi-degrees d with |d| <= N of prod s_i^{d_i}
  std::vector<double> by_total(N + 1, 0.0);
  by_total[0] = 1.0;
  for (double si : s) {
    std::vector<double> next(N + 1, 0.0);
    for (int t = 0; t <= N; t++) {
      if (by_total[t] == 0.0) continue;
      double p = 1.0;
      for (int d = 0; t + d <= N; d++) {
        next[t + d] += by_total[t] * p;
        p *= si;
      }
    }
    by_total = std::move(next);
  }
  double total = 0;
  for (double x : by_total) total += x;
  return total;
}

double omega_norm_closed_form(const RelationSet& rel, const GelfandPoint& alpha) {
  double out = 1.0;
  for (double s : block_norms_sq(alpha)) out /= 1.0 - s;
  return out;
}

CMat graded_tensor_operator(const TruncatedFock& domain, const TruncatedFock& codomain,
                            const CMat& A, const CMat& B) {
  if (domain.rel.rank != 2 || codomain.rel.rank != 2)
    throw Error("DimensionMismatch", "graded tensor operator is rank-2 only");
  if (domain.N != codomain.N || domain.rel.mult != codomain.rel.mult ||
      A.rows() != domain.rel.mult[0] || B.rows() != domain.rel.mult[1])
    throw Error("DimensionMismatch", "incompatible truncations");
  int n = A.rows(), m = B.rows();
  CMat U(codomain.dim(), domain.dim());
  for (int j = 0; j < domain.dim(); j++) {
    const NormalWord& w = domain.basis[j];
    int p = static_cast<int>(w.blocks[0].size());
    int q = static_cast<int>(w.blocks[1].size());
    // odometer over target index tuples
    std::vector<int> t(p + q, 1);
    while (true) {
      cplx coef = 1.0;
      NormalWord img(2);
      for (int s = 0; s < p; s++) {
        coef *= A.at(w.blocks[0][s] - 1, t[s] - 1);
        img.blocks[0].push_back(t[s]);
      }
      for (int s = 0; s < q; s++) {
        coef *= B.at(w.blocks[1][s] - 1, t[p + s] - 1);
        img.blocks[1].push_back(t[p + s]);
      }
      if (coef != 0.0) U.at(codomain.index.at(img), j) += coef;
      int k = p + q - 1;
      while (k >= 0 && t[k] == (k < p ? n : m)) {
        t[k] = 1;
        k--;
      }
      if (k < 0) break;
      t[k]++;
    }
  }
  return U;
}

std::string matrix_market(const GeneratorMatrix& g) {
  std::ostringstream os;
  int nnz = 0;
  for (int j = 0; j < g.dim; j++)
    if (g.col_to_row[j] >= 0) nnz++;
  os << "%%MatrixMarket matrix coordinate integer general\n";
  os << g.dim << " " << g.dim << " " << nnz << "\n";
  for (int j = 0; j < g.dim; j++)
    if (g.col_to_row[j] >= 0) os << g.col_to_row[j] + 1 << " " << j + 1 << " 1\n";
  return os.str();
}

nlohmann::json vector_json(const CVec& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& z : v) j.push_back({z.real(), z.imag()});
  return j;
}

}  // namespace kgt
