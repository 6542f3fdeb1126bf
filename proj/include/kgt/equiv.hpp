#ifndef KGT_EQUIV_HPP
#define KGT_EQUIV_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kgt/ratmat.hpp"
#include "kgt/semigroup.hpp"

namespace kgt {

using CMatrix = std::vector<std::vector<std::complex<double>>>;

// Basis of {X : pi(theta) X = X pi(tau)} over the rationals.
struct IntertwinerSpace {
  std::vector<QMat> basis;  // reduced echelon basis, (nm)x(nm) each
  int dim = 0;
};

IntertwinerSpace intertwiner_space(const GridPermutation& theta, const GridPermutation& tau);

// Independent closed form: sum of gcd(|c|,|c'|) over cycle pairs.
int intertwiner_dim_formula(const GridPermutation& theta, const GridPermutation& tau);

// Exhaustive search for (sigma, rho) with embed(sigma,rho) tau embed^{-1} =
// theta; None means not product conjugate.
std::optional<std::pair<Permutation, Permutation>> product_conjugate(
    const GridPermutation& theta, const GridPermutation& tau);

// One admissible family of rank-1 matrices C whose whole theta-orbit
// theta^k[C] stays rank <= 1, described by its exact zero support
// (rows x cols product support). "constants_only" can only arise for the
// full support and means the family contains nothing beyond the scalar
// multiples of the all-ones matrix (and so fails the "not all entries
// equal" requirement).
struct Rank1Family {
  std::vector<int> row_support;  // 1-based rows with nonzero entries
  std::vector<int> col_support;  // 1-based cols
  std::string description;
};

struct Rank1Report {
  // families meeting the hypotheses: at least two nonzero entries and a
  // member with not all entries equal
  std::vector<Rank1Family> admissible_families;
  // replayable rejection data per rejected support (used by the verdict
  // checker): either a forced zero/nonzero clash in some minor of
  // theta^k[C], or an all-entries-equal lattice proof for the full support
  nlohmann::json rejections;
};

// Shape (2,2) or (2,3), theta a full cycle.
Rank1Report rank1_orbit_analysis(const GridPermutation& theta);

enum class EquivStatus { Equivalent, NotEquivalent, Unknown };

enum class EquivMode { Conjugacy, Unitary };

struct EquivalenceVerdict {
  EquivStatus status = EquivStatus::Unknown;
  // Equivalent via conjugacy: permutation witness (sigma, rho)
  std::optional<std::pair<Permutation, Permutation>> witness;
  // Equivalent beyond conjugacy: explicit unitary pair (A, B)
  std::optional<std::pair<CMatrix, CMatrix>> unitary_witness;
  // "conjugacy" | "unitary_tensor" | "cycle_type" | "rank1_orbit" | "tensor_elimination"
  std::string filter;
  std::string detail;
  nlohmann::json data;  // replayable certificate payload

  nlohmann::json to_json() const;
};

// Decision pipeline: (a) conjugacy search; (b) cycle-type obstruction;
// (c) rank-1 row filter when both are full cycles on a supported shape;
// (d) exact elimination: no invertible elementary tensor exists in the
// intertwiner space (decided by zero-pattern case analysis with integer
// lattice arithmetic); (e) Unknown.
EquivalenceVerdict decide_product_unitary_equivalence(const GridPermutation& theta,
                                                      const GridPermutation& tau);

// Independent replay of a verdict's witness or certificate; returns false
// if any claim fails to verify.
bool verify_verdict(const GridPermutation& theta, const GridPermutation& tau,
                    const EquivalenceVerdict& v);

// Finite search for a unitary pair (A, B) with pi(theta)(A(x)B) =
// (A(x)B)pi(tau): signed permutation matrices in every size, extended by the
// order-16 dihedral set (Hadamard-type reflections) for size 2. A hit proves
// product unitary equivalence even when conjugacy fails.
std::optional<std::pair<CMatrix, CMatrix>> unitary_elementary_tensor_search(
    const GridPermutation& theta, const GridPermutation& tau);

// max-norm of pi(theta)(A(x)B) - (A(x)B)pi(tau).
double unitary_intertwining_residual(const GridPermutation& theta, const GridPermutation& tau,
                                     const CMatrix& A, const CMatrix& B);

// Does any invertible elementary tensor A (x) B (not necessarily unitary)
// intertwine pi(theta) and pi(tau)?  Exact decision; when the answer is no
// and proof != nullptr, a replayable rejection record per zero pattern is
// stored there.
bool invertible_elementary_tensor_exists(const GridPermutation& theta,
                                         const GridPermutation& tau,
                                         nlohmann::json* proof = nullptr);

// Verifies the single tensor condition pi(theta)(A(x)B) = (A(x)B)pi(tau)
// and that the induced map on words respects products up to total length
// max_len, expanding images in the codomain normal basis.
bool check_bigraded_iso(const QMat& A, const QMat& B, const GridPermutation& theta,
                        const GridPermutation& tau, int max_len);

}  // namespace kgt

#endif
