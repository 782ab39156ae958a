#pragma once

#include "oubraid/braid.hpp"
#include "oubraid/linalg.hpp"
#include "oubraid/warping.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oubraid {

/// Over- or under-crossing multiset of an OU matrix in canonical form: each
/// inner list sorted ascending, the outer list sorted lexicographically.
struct CrossingMultiset {
  std::vector<std::vector<mpz_class>> rows;

  std::string to_string() const;
  friend bool operator==(const CrossingMultiset&, const CrossingMultiset&) = default;
};

CrossingMultiset canonical_multiset(std::vector<std::vector<mpz_class>> rows);

mpz_class det_of(const BraidWord& word);
int rank_of(const BraidWord& word);
CharPoly charpoly_of(const BraidWord& word);

/// Rows of the OU matrix as a multiset; independent of the strand order.
CrossingMultiset over_set(const BraidWord& word);
/// Columns of the OU matrix as a multiset.
CrossingMultiset under_set(const BraidWord& word);
CrossingMultiset over_set(const IntMatrix& m);
CrossingMultiset under_set(const IntMatrix& m);

/// Applies `moves` braid moves, each chosen uniformly among all applicable
/// sites of the current word (far commutations with |i-j| >= 2 and type-III
/// moves). Stops early if no site exists. Throws on a non-positive word.
BraidWord random_rewrite(const BraidWord& word, std::size_t moves, std::uint64_t seed);

struct InvariantReport {
  int strands = 1;
  std::string word;
  Permutation braid_permutation;
  IntMatrix ou_matrix{1};
  mpz_class det;
  int rank = 0;
  CharPoly charpoly;
  CrossingMultiset over_set;
  CrossingMultiset under_set;
  std::optional<WdResult> wd;
};

InvariantReport invariant_report(const BraidWord& word, std::optional<WdResult> wd = std::nullopt);

}  // namespace oubraid
