#ifndef KGT_SEMIGROUP_HPP
#define KGT_SEMIGROUP_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kgt/perm.hpp"

namespace kgt {

// One generator occurrence: class in [1..rank], index in [1..n_class].
struct Letter {
  int cls = 1;
  int idx = 1;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// Canonically factored word: block i holds the generator indices of class i,
// so the class order is strictly increasing across blocks.
struct NormalWord {
  std::vector<std::vector<int>> blocks;  // blocks[i-1] = indices of class i

  explicit NormalWord(int rank = 2) : blocks(rank) {}
  std::vector<int> degree() const;
  int total_degree() const;
  Word to_word() const;
  auto operator<=>(const NormalWord&) const = default;
};

// Relation data of a rank-r semigroup: one permutation theta_ij per class
// pair i<j, acting on the n_i*n_j products (p,q) with row-major cell index
// (p-1)*n_j + (q-1).
struct RelationSet {
  int rank = 2;
  std::vector<int> mult;                           // n_1..n_r
  std::map<std::pair<int, int>, Permutation> rel;  // key (i,j), i<j, 1-based
  bool certified = false;  // unique-factorization certificate (rank 2: always)

  static RelationSet rank2(const GridPermutation& g);
  GridPermutation to_grid() const;  // rank 2 only

  static RelationSet from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  const Permutation& theta(int i, int j) const { return rel.at({i, j}); }
};

// Word I/O: "e1 e2 f1 g2" with class letters e,f,g,... in class order.
Word parse_word(const RelationSet& rel, const std::string& text);
std::string word_to_string(const Word& w);
std::string word_to_string(const NormalWord& w);

// Rewrites to the unique sorted-block form, leftmost-innermost inversion
// first. Every rewrite f_b e_a -> e_c f_d (classes j > i) uses
// (c,d) = theta_ij^{-1}(a,b), i.e. the defining relation read right to left.
// Rank >= 3 requires rel.certified.
NormalWord normal_form(const RelationSet& rel, const Word& w);

NormalWord multiply(const RelationSet& rel, const NormalWord& a, const NormalWord& b);

struct FactorizationReport {
  bool holds = true;
  // On failure: a word together with two distinct normal forms it reaches.
  std::optional<Word> witness_word;
  std::optional<std::pair<NormalWord, NormalWord>> witness_forms;
};

// Rank 2: always holds. Rank >= 3: local confluence on all degree-(1,1)-per-
// class triples for every class triple i<j<k, then exhaustive uniqueness of
// reachable normal forms for all words of length <= max_len. Sets
// rel.certified on success.
FactorizationReport check_unique_factorization(RelationSet& rel, int max_len);

// Relation set of the opposite semigroup: each theta_ij -> theta_ij^{-1}.
RelationSet opposite(const RelationSet& rel);

// All normal forms reachable from w by single rewrites in any order
// (exhaustive closure); used by confluence tests and the factorization check.
std::vector<NormalWord> reachable_normal_forms(const RelationSet& rel, const Word& w);

// Enumerate all words over the alphabet with exactly the given length.
std::vector<Word> all_words(const RelationSet& rel, int length);

}  // namespace kgt

#endif
