#ifndef KGT_CLASSIFY_HPP
#define KGT_CLASSIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "kgt/diagram.hpp"

namespace kgt {

enum class CatalogScope { All, CyclicOnly };

struct CatalogEntry {
  GridPermutation rep;  // lexicographically least image tuple in the orbit
  long orbit_size = 0;
  DiagramStats stats;
  bool minimal_variety = false;
  int inverse_class = -1;  // entry index of the orbit of rep^{-1}
};

struct OrbitCatalog {
  GridShape shape;
  CatalogScope scope = CatalogScope::All;
  std::vector<CatalogEntry> entries;  // sorted by rep

  nlohmann::json to_json() const;
  static OrbitCatalog from_json(const nlohmann::json& j);
};

// Number of worker threads: KGT_THREADS when set, else the OpenMP default.
int worker_count();

// Partition of the permutation universe (all of S_{nm}, or the full
// (n*m)-cycles) into conjugation orbits under the embedded S_n x S_m.
// Canonicalization of the universe is parallelized across worker_count()
// threads; pass threads=1 to force the serial path.
OrbitCatalog conjugacy_orbits(GridShape shape, CatalogScope scope, int threads = 0);

// Serial reference implementation by direct orbit expansion (no
// canonicalization); used to cross-check the parallel kernel.
OrbitCatalog conjugacy_orbits_serial(GridShape shape, CatalogScope scope);

// Minimum image tuple over all conjugates sigma g sigma^{-1}, sigma in the
// embedded S_n x S_m; equal canonical reps <=> product conjugate.
GridPermutation canonical_rep(const GridPermutation& g);

// Conjugacy orbit count, except that for n = m each orbit is merged with the
// orbit of flip o theta^{-1} o flip (relabeling the two generator families
// reverses the relations, so those grid permutations present the same
// semigroup).
mpz_class count_semigroup_classes(GridShape shape);

struct InversePairingSummary {
  int self_paired = 0;
  int swapped_pairs = 0;
};

InversePairingSummary inverse_pairing_summary(const OrbitCatalog& catalog);

}  // namespace kgt

#endif
