#ifndef KGT_DIAGRAM_HPP
#define KGT_DIAGRAM_HPP

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "kgt/semigroup.hpp"

namespace kgt {

// Edge counts of the directed grid diagram of a relation permutation.
struct DiagramStats {
  int h = 0;     // horizontal edges (same row)
  int r = 0;     // right angles: cyclically consecutive H/V or V/H edge pairs
  int v = 0;     // vertical edges (same column)
  int diag = 0;  // edges changing both row and column
  int fixed = 0; // fixed cells (no edge)
  CycleType cycle_type;

  auto operator<=>(const DiagramStats&) const = default;
  nlohmann::json to_json() const;
};

DiagramStats diagram_stats(const GridPermutation& g);

// Partition of the product monomials into equality classes under the
// abelianized relations. For rank 2 the monomials are the n*m grid cells and
// the classes are exactly the theta-cycles. For rank >= 3 the ground set is
// the disjoint union of the pairwise product grids.
struct EquationClasses {
  int ground_size = 0;
  std::vector<int> class_of;  // ground index -> class id (0-based, dense)
  int num_classes = 0;
};

EquationClasses equation_classes(const RelationSet& rel);

// True iff theta is a pure cycle of full length n*m (rank 2), which is
// equivalent to the variety collapsing to its minimal form.
bool is_minimal_variety(const RelationSet& rel);

// Point of C^{n_1} x ... x C^{n_r}.
struct VarietyPoint {
  std::vector<std::vector<std::complex<double>>> coords;
};

// Every binomial relation |a^(i)_p a^(j)_q - a^(i')_{p'} a^(j')_{q'}| <= tol.
bool variety_membership(const RelationSet& rel, const VarietyPoint& p, double tol);

struct FixedSpace {
  int dimension = 0;
  std::vector<std::vector<int>> orbit_blocks;  // cycles of tau, 0-based coords
};

// The subspace {z : z = tau(z)}: one dimension per cycle of tau.
FixedSpace fixed_space(const Permutation& tau);

// DOT digraph with node for cell (i,j) pinned at position (j, -i); one edge
// per non-fixed cell; deterministic ordering.
std::string dot_export(const GridPermutation& g);

}  // namespace kgt

#endif
