#ifndef KGT_MOBIUS_HPP
#define KGT_MOBIUS_HPP

#include <optional>

#include <gmpxx.h>

#include "kgt/fock.hpp"
#include "kgt/perm.hpp"

namespace kgt {

// Ball automorphism data for moving 0 to alpha: x0 = (1 - |alpha|^2)^{-1/2},
// eta = x0 alpha, X1 the positive square root of I + eta eta* computed by the
// rank-one closed form X1 = I + (x0 - 1) eta eta* / |eta|^2.
struct MobiusParams {
  CVec alpha;
  double x0 = 1.0;
  CVec eta;
  CMat X1;
};

// tau, when given, must fix alpha coordinatewise (alpha in the open core).
MobiusParams mobius_params(const CVec& alpha,
                           const std::optional<Permutation>& tau = std::nullopt);

// theta(lambda) = (X1 lambda + eta) / (x0 + <lambda, eta>), closed ball to
// itself, 0 to alpha.
CVec mobius_apply(const MobiusParams& p, const CVec& lambda);

// theta'(lambda) = (X1 lambda - eta) / (x0 - <lambda, eta>); two-sided
// inverse of mobius_apply on the ball.
CVec mobius_inverse_apply(const MobiusParams& p, const CVec& lambda);

// |x0 + <lambda,eta>|^2 - |X1 lambda + eta|^2 - (1 - |lambda|^2); zero up to
// rounding for every lambda in the closed ball.
double mobius_norm_identity_residual(const MobiusParams& p, const CVec& lambda);

// Theta(L_xi) = (x0 I - L_eta)^{-1} (L_{X1 xi} - <xi,eta> I) on a truncated
// Fock space of an (n,1) relation set; the inverse is the finite Neumann
// series (L_eta is nilpotent on the truncation).
CMat voiculescu_generator(const TruncatedFock& F, const MobiusParams& p, const CVec& xi);

// Exact checks in Q(x0) for real rational alpha with |alpha|^2 < 1: the
// eigen-relation X1 eta = x0 eta, and commutation of X1 with the permutation
// matrix of tau when tau fixes alpha.
bool x1_eigen_relation_exact(const std::vector<mpq_class>& alpha);
bool x1_commutes_with_tau_exact(const std::vector<mpq_class>& alpha, const Permutation& tau);

}  // namespace kgt

#endif
