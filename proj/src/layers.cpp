#include "oubraid/layers.hpp"

#include "oubraid/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oubraid {

UnderDigraph::UnderDigraph(int vertices)
    : n_(vertices), adj_(static_cast<std::size_t>(vertices) * static_cast<std::size_t>(vertices), 0) {}

void UnderDigraph::add_edge(int from, int to) {
  adj_.at(static_cast<std::size_t>(from - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(to - 1)) = 1;
}

bool UnderDigraph::has_edge(int from, int to) const {
  return adj_.at(static_cast<std::size_t>(from - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(to - 1));
}

std::vector<int> UnderDigraph::successors(int v) const {
  std::vector<int> out;
  for (int w = 1; w <= n_; ++w)
    if (has_edge(v, w)) out.push_back(w);
  return out;
}

std::vector<std::pair<int, int>> UnderDigraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v <= n_; ++v)
    for (int w : successors(v)) out.emplace_back(v, w);
  return out;
}

bool UnderDigraph::is_acyclic() const {
  std::vector<int> indegree(static_cast<std::size_t>(n_) + 1, 0);
  for (auto [v, w] : edges()) ++indegree[static_cast<std::size_t>(w)];
  std::vector<int> ready;
  for (int v = 1; v <= n_; ++v)
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : successors(v))
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
  }
  return seen == n_;
}

UnderDigraph under_digraph(const BraidWord& word) {
  UnderDigraph g(word.strands());
  for (const auto& e : simulate(word)) g.add_edge(e.under_strand, e.over_strand);
  return g;
}

bool LayerDecomposition::is_completely_layered() const noexcept {
  return std::all_of(layers.begin(), layers.end(), [](const auto& l) { return l.size() == 1; });
}

bool is_valid_layering(const BraidWord& word, const std::vector<std::vector<int>>& layers) {
  const int n = word.strands();
  std::vector<int> layer_of(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t l = 0; l < layers.size(); ++l) {
    if (layers[l].empty()) return false;
    for (int s : layers[l]) {
      if (s < 1 || s > n || layer_of[static_cast<std::size_t>(s)] >= 0) return false;
      layer_of[static_cast<std::size_t>(s)] = static_cast<int>(l);
    }
  }
  if (std::any_of(layer_of.begin() + 1, layer_of.end(), [](int l) { return l < 0; })) return false;
  for (const auto& e : simulate(word))
    if (layer_of[static_cast<std::size_t>(e.under_strand)] < layer_of[static_cast<std::size_t>(e.over_strand)])
      return false;
  return true;
}

namespace {

// Tarjan. component[v] for v in 1..n; returns the component count.
int strong_components(const UnderDigraph& g, std::vector<int>& component) {
  const int n = g.vertices();
  component.assign(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> index(static_cast<std::size_t>(n) + 1, -1), low(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> stack;
  int counter = 0, count = 0;

  std::function<void(int)> visit = [&](int v) {
    const auto vi = static_cast<std::size_t>(v);
    index[vi] = low[vi] = counter++;
    stack.push_back(v);
    on_stack[vi] = 1;
    for (int w : g.successors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (index[wi] < 0) {
        visit(w);
        low[vi] = std::min(low[vi], low[wi]);
      } else if (on_stack[wi]) {
        low[vi] = std::min(low[vi], index[wi]);
      }
    }
    if (low[vi] == index[vi]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = 0;
        component[static_cast<std::size_t>(w)] = count;
      } while (w != v);
      ++count;
    }
  };
  for (int v = 1; v <= n; ++v)
    if (index[static_cast<std::size_t>(v)] < 0) visit(v);
  return count;
}

}  // namespace

LayerDecomposition finest_layering(const BraidWord& word) {
  const UnderDigraph g = under_digraph(word);
  const int n = g.vertices();
  std::vector<int> component;
  const int count = strong_components(g, component);

  std::vector<std::vector<int>> members(static_cast<std::size_t>(count));
  for (int v = 1; v <= n; ++v) members[static_cast<std::size_t>(component[static_cast<std::size_t>(v)])].push_back(v);

  // Under-edges point from later layers to earlier ones, so a component is
  // ready once every component it points into has been placed.
  std::vector<int> pending_out(static_cast<std::size_t>(count), 0);
  std::vector<std::vector<int>> pointed_from(static_cast<std::size_t>(count));
  std::vector<char> linked(static_cast<std::size_t>(count) * static_cast<std::size_t>(count), 0);
  for (auto [v, w] : g.edges()) {
    const int a = component[static_cast<std::size_t>(v)];
    const int b = component[static_cast<std::size_t>(w)];
    auto& flag = linked[static_cast<std::size_t>(a) * static_cast<std::size_t>(count) + static_cast<std::size_t>(b)];
    if (a == b || flag) continue;
    flag = 1;
    ++pending_out[static_cast<std::size_t>(a)];
    pointed_from[static_cast<std::size_t>(b)].push_back(a);
  }

  LayerDecomposition out;
  std::vector<char> done(static_cast<std::size_t>(count), 0);
  for (int step = 0; step < count; ++step) {
    int pick = -1;
    for (int c = 0; c < count; ++c) {
      const auto ci = static_cast<std::size_t>(c);
      if (done[ci] || pending_out[ci] != 0) continue;
      if (pick < 0 || members[ci].front() < members[static_cast<std::size_t>(pick)].front()) pick = c;
    }
    done[static_cast<std::size_t>(pick)] = 1;
    for (int a : pointed_from[static_cast<std::size_t>(pick)]) --pending_out[static_cast<std::size_t>(a)];
    out.layers.push_back(members[static_cast<std::size_t>(pick)]);
  }
  for (const auto& layer : out.layers) out.layer_words.push_back(extract_layer(word, layer));
  return out;
}

BraidWord extract_layer(const BraidWord& word, std::span<const int> strands) {
  const int n = word.strands();
  if (strands.empty()) throw std::invalid_argument("extract_layer: empty strand set");
  std::vector<char> member(static_cast<std::size_t>(n) + 1, 0);
  for (int s : strands) {
    if (s < 1 || s > n) throw std::out_of_range("extract_layer: strand label out of range");
    if (member[static_cast<std::size_t>(s)]) throw std::invalid_argument("extract_layer: repeated strand label");
    member[static_cast<std::size_t>(s)] = 1;
  }

  std::vector<int> at(static_cast<std::size_t>(n));
  std::iota(at.begin(), at.end(), 1);
  std::vector<int> letters;
  for (int g : word.letters()) {
    const auto left = static_cast<std::size_t>(std::abs(g) - 1);
    if (member[static_cast<std::size_t>(at[left])] && member[static_cast<std::size_t>(at[left + 1])]) {
      const auto below = std::count_if(at.begin(), at.begin() + static_cast<std::ptrdiff_t>(left),
                                       [&](int s) { return member[static_cast<std::size_t>(s)] != 0; });
      const int r = 1 + static_cast<int>(below);
      letters.push_back(g > 0 ? r : -r);
    }
    std::swap(at[left], at[left + 1]);
  }
  return BraidWord(static_cast<int>(strands.size()), std::move(letters));
}

BraidWord layered_compose(const BraidWord& first, const BraidWord& second, std::span<const int> assignment) {
  const int n1 = first.strands();
  const int n2 = second.strands();
  const int n = n1 + n2;
  if (static_cast<int>(assignment.size()) != n)
    throw std::invalid_argument("layered_compose: assignment must cover all " + std::to_string(n) + " positions");
  if (std::any_of(assignment.begin(), assignment.end(), [](int a) { return a != 1 && a != 2; }) ||
      std::count(assignment.begin(), assignment.end(), 1) != n1)
    throw std::invalid_argument("layered_compose: assignment must give exactly " + std::to_string(n1) +
                                " positions to layer 1 and the rest to layer 2");

  std::vector<int> tags(assignment.begin(), assignment.end());
  std::vector<int> letters;
  // Slide each layer-1 strand left past the layer-2 strands before it. The
  // layer-1 strand sits at position p+1 of each such crossing, so a positive
  // letter puts it over.
  int target = 0;
  for (int q = 0; q < n; ++q) {
    if (tags[static_cast<std::size_t>(q)] != 1) continue;
    for (int p = q - 1; p >= target; --p) {
      letters.push_back(p + 1);
      std::swap(tags[static_cast<std::size_t>(p)], tags[static_cast<std::size_t>(p + 1)]);
    }
    ++target;
  }
  letters.insert(letters.end(), first.letters().begin(), first.letters().end());
  for (int g : second.letters()) letters.push_back(g > 0 ? g + n1 : g - n1);
  return BraidWord(n, std::move(letters));
}

BlockView block_view(const BraidWord& word, std::span<const int> first_layer, std::span<const int> second_layer) {
  std::vector<int> s1(first_layer.begin(), first_layer.end());
  std::vector<int> s2(second_layer.begin(), second_layer.end());
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (!is_valid_layering(word, {s1, s2}))
    throw std::invalid_argument("block_view: not a valid 2-layering of the diagram");

  std::vector<int> image = s1;
  image.insert(image.end(), s2.begin(), s2.end());
  BlockView view;
  view.order = Permutation(std::move(image));
  const IntMatrix m = ou_matrix(word, view.order);
  const int k1 = static_cast<int>(s1.size());
  const int k2 = static_cast<int>(s2.size());

  view.upper_left = IntMatrix(k1);
  view.lower_right = IntMatrix(k2);
  view.upper_right.assign(static_cast<std::size_t>(k1), std::vector<mpz_class>(static_cast<std::size_t>(k2)));
  for (int i = 0; i < k1; ++i)
    for (int j = 0; j < k1; ++j) view.upper_left(i, j) = m(i, j);
  for (int i = 0; i < k2; ++i)
    for (int j = 0; j < k2; ++j) view.lower_right(i, j) = m(k1 + i, k1 + j);
  for (int i = 0; i < k1; ++i)
    for (int j = 0; j < k2; ++j)
      view.upper_right[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, k1 + j);

  for (int i = 0; i < k2; ++i)
    for (int j = 0; j < k1; ++j)
      if (sgn(m(k1 + i, j)) != 0) throw std::logic_error("block_view: lower-left block is not zero");
  if (view.upper_left != ou_matrix(extract_layer(word, s1)) || view.lower_right != ou_matrix(extract_layer(word, s2)))
    throw std::logic_error("block_view: diagonal blocks differ from the extracted layers");
  return view;
}

}  // namespace oubraid
