#ifndef KGT_PERM_HPP
#define KGT_PERM_HPP

#include <compare>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kgt/error.hpp"

namespace kgt {

// A permutation of {1..k}, stored as 0-based images.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // validates bijectivity
  static Permutation identity(int k);
  // Accepts cycle notation "(1 2 4 3)", "(12)(34)", "()", compact digit runs
  // "(124653)" (single digits, size <= 9), or an image list "[2,3,6,1,4,5]".
  static Permutation parse(const std::string& text, int size);

  int size() const { return static_cast<int>(images_.size()); }
  int apply(int x) const { return images_[x]; }           // 0-based
  int apply1(int x) const { return images_[x - 1] + 1; }  // 1-based
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& other) const;  // (this∘other)(x)
  Permutation inverse() const;
  std::vector<std::vector<int>> cycles() const;  // 0-based, each starts at min
  std::string to_cycle_string() const;           // canonical 1-based output

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Multiset of cycle lengths, sorted descending; fixed points are parts of 1.
using CycleType = std::vector<int>;

CycleType cycle_type(const Permutation& p);

// Order of the centralizer in S_k of an element with this cycle type:
// prod a_i^{n_i} * n_i! over distinct part sizes a_i with multiplicity n_i.
mpz_class centralizer_order(const CycleType& t);

struct GridShape {
  int n = 1;  // row generator multiplicity
  int m = 1;  // column generator multiplicity
  int cells() const { return n * m; }
  auto operator<=>(const GridShape&) const = default;
};

// Relation permutation of the n*m grid cells; cell (i,j) has row-major
// 0-based index (i-1)*m + (j-1) for 1-based i,j.
struct GridPermutation {
  GridShape shape;
  Permutation perm;

  int cell(int i, int j) const { return (i - 1) * shape.m + (j - 1); }
  int row1(int c) const { return c / shape.m + 1; }
  int col1(int c) const { return c % shape.m + 1; }
  auto operator<=>(const GridPermutation&) const = default;
};

// The grid permutation (i,j) -> (sigma(i), tau(j)): the embedding of
// S_n x S_m into S_{nm}.
GridPermutation embed_product(const Permutation& sigma, const Permutation& tau);

// All n!*m! embedded elements of S_n x S_m, in deterministic order.
std::vector<GridPermutation> product_subgroup(GridShape shape);

// Number of conjugation orbits of S_{nm} under the embedded S_n x S_m,
// by the Burnside/Frobenius class equation (exact division).
mpz_class count_conjugacy_orbits(GridShape shape);

// Enumerate all permutations of k points (k! of them), lex order.
std::vector<Permutation> all_permutations(int k);

}  // namespace kgt

#endif
