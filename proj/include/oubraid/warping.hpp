#pragma once

#include "oubraid/braid.hpp"
#include "oubraid/permutation.hpp"

#include <cstdint>
#include <optional>

namespace oubraid {

/// Warping degree of a diagram with a witnessing strand order. When `exact`
/// is set, `value` is the minimum of objective() over all orders.
struct WdResult {
  std::uint64_t value = 0;
  Permutation order;
  bool exact = false;
  std::uint64_t nodes = 0;  // search nodes visited (0 for the heuristic)
};

/// Largest strand count for which wd_exact is advertised to finish without a
/// node budget.
inline constexpr int kExactStrandLimit = 10;

/// Sum of the OU matrix entries below the diagonal for the order `pi`, i.e.
/// the number of crossings where an earlier strand of the order is under a
/// later one.
std::uint64_t objective(const BraidWord& word, const Permutation& pi);

/// Sum over unordered pairs of min(m_ij, m_ji). A lower bound on wd.
std::uint64_t pair_lower_bound(const BraidWord& word);

struct ExactOptions {
  /// When set, the search stops after this many nodes and returns the best
  /// order found so far with exact = false. Budgeted searches run on one
  /// thread so the result does not depend on scheduling.
  std::optional<std::uint64_t> node_budget;
  /// Worker threads for the first level of the search. The result is the
  /// same for any value.
  int threads = 1;
};

/// Branch and bound over order prefixes. The bound at a node is the cost
/// already committed by the placed strands plus pair_lower_bound of the
/// unplaced ones. The witness is the lexicographically smallest optimal order.
WdResult wd_exact(const BraidWord& word, const ExactOptions& options = {});

/// Greedy construction followed by first-improvement insertion local search.
/// `seed` only permutes the order in which strands are tried for relocation.
WdResult wd_heuristic(const BraidWord& word, std::uint64_t seed = 0);

}  // namespace oubraid
