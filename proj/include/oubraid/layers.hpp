#pragma once

#include "oubraid/braid.hpp"

#include <span>
#include <vector>

namespace oubraid {

/// Directed graph on strand labels 1..n with an edge i -> j iff s_i passes
/// under s_j at least once.
class UnderDigraph {
public:
  explicit UnderDigraph(int vertices);

  int vertices() const noexcept { return n_; }
  void add_edge(int from, int to);
  bool has_edge(int from, int to) const;
  /// Successors of `v` in ascending label order.
  std::vector<int> successors(int v) const;
  std::vector<std::pair<int, int>> edges() const;
  bool is_acyclic() const;

private:
  int n_;
  std::vector<char> adj_;
};

UnderDigraph under_digraph(const BraidWord& word);

/// Ordered partition of the strands into layers, together with each layer
/// extracted as a braid word on its own strands.
struct LayerDecomposition {
  std::vector<std::vector<int>> layers;  // strand labels, ascending within a layer
  std::vector<BraidWord> layer_words;

  bool is_layered() const noexcept { return layers.size() >= 2; }
  bool is_completely_layered() const noexcept;
};

/// True iff `layers` partitions 1..n and no strand of an earlier layer passes
/// under a strand of a later layer.
bool is_valid_layering(const BraidWord& word, const std::vector<std::vector<int>>& layers);

/// Strongly connected components of the under digraph, earliest layer first.
/// Among components that may come next, the one holding the smallest label wins.
LayerDecomposition finest_layering(const BraidWord& word);

/// The sub-diagram formed by the strands in `strands`, as a braid word on
/// #strands strands. Generator indices are recomputed from live positions.
BraidWord extract_layer(const BraidWord& word, std::span<const int> strands);

/// Builds a two-layer diagram. `assignment[p]` (1 or 2) says which layer owns
/// top position p+1; each layer keeps its internal left-to-right order. A
/// shuffle block gathers layer 1 to the left with layer 1 passing over, then
/// `first` and `second` run side by side. Layer 1 is the set of positions
/// assigned 1.
BraidWord layered_compose(const BraidWord& first, const BraidWord& second, std::span<const int> assignment);

/// Blocks of the OU matrix for the order listing `first_layer` then
/// `second_layer` (each ascending): [[upper_left, upper_right], [0, lower_right]].
struct BlockView {
  Permutation order;
  IntMatrix upper_left{1};
  std::vector<std::vector<mpz_class>> upper_right;  // |S1| x |S2|
  IntMatrix lower_right{1};
};

/// Throws std::invalid_argument unless (first_layer, second_layer) is a valid
/// 2-layering of `word`.
BlockView block_view(const BraidWord& word, std::span<const int> first_layer, std::span<const int> second_layer);

}  // namespace oubraid
