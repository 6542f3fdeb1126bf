#include "kgt/mobius.hpp"

#include <cmath>

namespace kgt {

namespace {

// <u, v> = sum_i conj(v_i) u_i, linear in the first slot
cplx inner(const CVec& u, const CVec& v) {
  cplx s = 0.0;
  for (size_t i = 0; i < u.size(); i++) s += std::conj(v[i]) * u[i];
  return s;
}

double norm_sq(const CVec& v) {
  double s = 0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

}  // namespace

MobiusParams mobius_params(const CVec& alpha, const std::optional<Permutation>& tau) {
  double a2 = norm_sq(alpha);
  if (a2 >= 1.0) throw Error("NotInBall", "||alpha|| >= 1");
  if (tau) {
    if (tau->size() != static_cast<int>(alpha.size()))
      throw Error("DimensionMismatch", "tau size vs alpha");
    for (size_t i = 0; i < alpha.size(); i++)
      if (std::abs(alpha[tau->apply(static_cast<int>(i))] - alpha[i]) > 1e-12)
        throw Error("NotFixedByTau", "alpha is not in the open core of tau");
  }
  MobiusParams p;
  p.alpha = alpha;
  p.x0 = 1.0 / std::sqrt(1.0 - a2);
  p.eta.resize(alpha.size());
  for (size_t i = 0; i < alpha.size(); i++) p.eta[i] = p.x0 * alpha[i];
  int n = static_cast<int>(alpha.size());
  p.X1 = CMat::identity(n);
  double e2 = norm_sq(p.eta);
  if (e2 > 0) {
    double c = (p.x0 - 1.0) / e2;
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) p.X1.at(i, j) += c * p.eta[i] * std::conj(p.eta[j]);
  }
  return p;
}

CVec mobius_apply(const MobiusParams& p, const CVec& lambda) {
  if (lambda.size() != p.alpha.size()) throw Error("DimensionMismatch", "mobius argument");
  CVec num = p.X1.apply(lambda);
  for (size_t i = 0; i < num.size(); i++) num[i] += p.eta[i];
  cplx den = p.x0 + inner(lambda, p.eta);
  for (auto& z : num) z /= den;
  return num;
}

CVec mobius_inverse_apply(const MobiusParams& p, const CVec& lambda) {
  if (lambda.size() != p.alpha.size()) throw Error("DimensionMismatch", "mobius argument");
  CVec num = p.X1.apply(lambda);
  for (size_t i = 0; i < num.size(); i++) num[i] -= p.eta[i];
  cplx den = p.x0 - inner(lambda, p.eta);
  for (auto& z : num) z /= den;
  return num;
}

double mobius_norm_identity_residual(const MobiusParams& p, const CVec& lambda) {
  CVec num = p.X1.apply(lambda);
  for (size_t i = 0; i < num.size(); i++) num[i] += p.eta[i];
  cplx den = p.x0 + inner(lambda, p.eta);
  return std::norm(den) - norm_sq(num) - (1.0 - norm_sq(lambda));
}

CMat voiculescu_generator(const TruncatedFock& F, const MobiusParams& p, const CVec& xi) {
  if (F.rel.rank != 2 || F.rel.mult[1] != 1)
    throw Error("DimensionMismatch", "needs an (n,1) relation set");
  int n = F.rel.mult[0];
  if (static_cast<int>(xi.size()) != n || static_cast<int>(p.alpha.size()) != n)
    throw Error("DimensionMismatch", "vector length vs multiplicity");
  int dim = F.dim();

  auto L_of = [&](const CVec& v) {
    CMat out(dim, dim);
    for (int i = 0; i < n; i++) {
      if (v[i] == 0.0) continue;
      GeneratorMatrix g = generator_matrix(F, Side::Left, Letter{1, i + 1});
      for (int j = 0; j < dim; j++)
        if (g.col_to_row[j] >= 0) out.at(g.col_to_row[j], j) += v[i];
    }
    return out;
  };

  // (x0 I - L_eta)^{-1} = (1/x0) sum_{k<=N} (L_eta / x0)^k, exact on the
  // truncation since L_eta raises degree
  CMat Leta = L_of(p.eta);
  CMat inv(dim, dim);
  CMat term = CMat::identity(dim);
  for (int k = 0; k <= F.N; k++) {
    inv = inv.plus(term.scaled(1.0 / std::pow(p.x0, k + 1)));
    term = Leta.mul(term);
  }

  CVec X1xi = p.X1.apply(xi);
  cplx xi_eta = 0.0;
  for (int i = 0; i < n; i++) xi_eta += std::conj(p.eta[i]) * xi[i];
  CMat rhs = L_of(X1xi).plus(CMat::identity(dim).scaled(-xi_eta));
  return inv.mul(rhs);
}

namespace {

// element a + b*root of Q(root), root^2 = r2 rational
struct QuadNum {
  mpq_class a, b;
};

QuadNum qadd(const QuadNum& x, const QuadNum& y) { return {x.a + y.a, x.b + y.b}; }

QuadNum qmul(const QuadNum& x, const QuadNum& y, const mpq_class& r2) {
  return {x.a * y.a + x.b * y.b * r2, x.a * y.b + x.b * y.a};
}

bool qzero(const QuadNum& x) { return x.a == 0 && x.b == 0; }

struct X1Exact {
  int n = 0;
  mpq_class r2;                              // x0^2 = 1/(1 - |alpha|^2)
  std::vector<std::vector<QuadNum>> X1;     // entries in Q(x0)
  std::vector<QuadNum> eta;                 // eta_i = x0 alpha_i
};

X1Exact build_x1_exact(const std::vector<mpq_class>& alpha) {
  X1Exact e;
  e.n = static_cast<int>(alpha.size());
  mpq_class a2 = 0;
  for (const auto& x : alpha) a2 += x * x;
  if (a2 >= 1) throw Error("NotInBall", "||alpha|| >= 1");
  e.r2 = 1 / (1 - a2);
  e.X1.assign(e.n, std::vector<QuadNum>(e.n, QuadNum{0, 0}));
  for (int i = 0; i < e.n; i++) e.X1[i][i] = {1, 0};
  if (a2 != 0) {
    // (x0 - 1) eta_i eta_j / |eta|^2 = alpha_i alpha_j (x0 - 1) / |alpha|^2
    QuadNum c{-1 / a2, 1 / a2};
    for (int i = 0; i < e.n; i++)
      for (int j = 0; j < e.n; j++)
        e.X1[i][j] = qadd(e.X1[i][j], qmul(c, QuadNum{alpha[i] * alpha[j], 0}, e.r2));
  }
  for (int i = 0; i < e.n; i++) e.eta.push_back(QuadNum{0, alpha[i]});
  return e;
}

}  // namespace

bool x1_eigen_relation_exact(const std::vector<mpq_class>& alpha) {
  X1Exact e = build_x1_exact(alpha);
  QuadNum x0{0, 1};
  for (int i = 0; i < e.n; i++) {
    QuadNum lhs{0, 0};
    for (int j = 0; j < e.n; j++) lhs = qadd(lhs, qmul(e.X1[i][j], e.eta[j], e.r2));
    QuadNum rhs = qmul(x0, e.eta[i], e.r2);
    if (!qzero(QuadNum{lhs.a - rhs.a, lhs.b - rhs.b})) return false;
  }
  return true;
}

bool x1_commutes_with_tau_exact(const std::vector<mpq_class>& alpha, const Permutation& tau) {
  if (tau.size() != static_cast<int>(alpha.size()))
    throw Error("DimensionMismatch", "tau size vs alpha");
  for (int i = 0; i < tau.size(); i++)
    if (alpha[tau.apply(i)] != alpha[i])
      throw Error("NotFixedByTau", "alpha is not fixed by tau");
  X1Exact e = build_x1_exact(alpha);
  // (X1 P - P X1)_{ij} with P the permutation matrix of tau: P_{ij} = [i = tau(j)]
  for (int i = 0; i < e.n; i++)
    for (int j = 0; j < e.n; j++) {
      QuadNum lhs = e.X1[i][tau.apply(j)];
      QuadNum rhs = e.X1[tau.inverse().apply(i)][j];
      if (!qzero(QuadNum{lhs.a - rhs.a, lhs.b - rhs.b})) return false;
    }
  return true;
}

}  // namespace kgt
