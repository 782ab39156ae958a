#include "oubraid/warping.hpp"

#include "rng.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <vector>

namespace oubraid {

namespace {

// over[a][b] = number of crossings where strand a+1 passes over strand b+1.
// Placing a before b costs over[b][a].
class OverCounts {
public:
  explicit OverCounts(const BraidWord& word)
      : n_(word.strands()), data_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0) {
    for (const auto& e : simulate(word)) ++at(e.over_strand - 1, e.under_strand - 1);
  }

  int size() const noexcept { return n_; }
  std::uint64_t operator()(int a, int b) const {
    return data_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
  }

  std::uint64_t order_cost(const std::vector<int>& order) const {
    std::uint64_t total = 0;
    for (std::size_t x = 0; x < order.size(); ++x)
      for (std::size_t y = x + 1; y < order.size(); ++y) total += (*this)(order[y], order[x]);
    return total;
  }

private:
  std::uint64_t& at(int a, int b) {
    return data_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
  }

  int n_;
  std::vector<std::uint64_t> data_;
};

Permutation to_permutation(const std::vector<int>& order) {
  std::vector<int> image(order.size());
  std::transform(order.begin(), order.end(), image.begin(), [](int s) { return s + 1; });
  return Permutation(std::move(image));
}

// Shared incumbent, packed as value * (n + 1) + holder so that readers see a
// consistent pair. `holder` is the first-level branch that owns the incumbent;
// n means "only the heuristic upper bound so far".
class Incumbent {
public:
  Incumbent(std::uint64_t value, int n) : width_(static_cast<std::uint64_t>(n) + 1), packed_(pack(value, n)) {}

  // A node of branch k with lower bound b can still win iff
  // b < value, or b == value and k < holder.
  bool can_win(std::uint64_t bound, int branch) const {
    const std::uint64_t p = packed_.load(std::memory_order_relaxed);
    return pack(bound, branch) < p;
  }

  bool offer(std::uint64_t value, int branch) {
    const std::uint64_t candidate = pack(value, branch);
    std::uint64_t current = packed_.load(std::memory_order_relaxed);
    while (candidate < current)
      if (packed_.compare_exchange_weak(current, candidate, std::memory_order_relaxed)) return true;
    return false;
  }

  std::uint64_t value() const { return packed_.load() / width_; }
  int holder() const { return static_cast<int>(packed_.load() % width_); }

private:
  std::uint64_t pack(std::uint64_t value, int branch) const {
    return value * width_ + static_cast<std::uint64_t>(branch);
  }

  std::uint64_t width_;
  std::atomic<std::uint64_t> packed_;
};

class BranchSearch {
public:
  BranchSearch(const OverCounts& over, const std::vector<std::uint64_t>& pair_min, Incumbent& incumbent,
               std::optional<std::uint64_t> budget, std::atomic<std::uint64_t>& nodes)
      : over_(over), pair_min_(pair_min), incumbent_(incumbent), budget_(budget), nodes_(nodes),
        n_(over.size()), placed_(static_cast<std::size_t>(n_), 0) {}

  // Searches all orders starting with `first`. Returns false if the budget ran out.
  bool run(int first, std::uint64_t root_remainder) {
    branch_ = first;
    prefix_.clear();
    best_order_.clear();
    std::fill(placed_.begin(), placed_.end(), 0);
    return descend(first, 0, root_remainder);
  }

  const std::vector<int>& best_order() const { return best_order_; }
  bool found() const { return !best_order_.empty(); }

private:
  bool descend(int x, std::uint64_t committed, std::uint64_t remainder) {
    if (budget_) {
      if (nodes_.load(std::memory_order_relaxed) >= *budget_) return false;
    }
    nodes_.fetch_add(1, std::memory_order_relaxed);

    for (int r = 0; r < n_; ++r) {
      if (placed_[static_cast<std::size_t>(r)] || r == x) continue;
      committed += over_(r, x);
      remainder -= pair_min_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(r)];
    }
    if (!incumbent_.can_win(committed + remainder, branch_)) return true;

    placed_[static_cast<std::size_t>(x)] = 1;
    prefix_.push_back(x);
    bool ok = true;
    if (static_cast<int>(prefix_.size()) == n_) {
      if (incumbent_.offer(committed, branch_)) best_order_ = prefix_;
    } else {
      for (int y = 0; y < n_ && ok; ++y)
        if (!placed_[static_cast<std::size_t>(y)]) ok = descend(y, committed, remainder);
    }
    prefix_.pop_back();
    placed_[static_cast<std::size_t>(x)] = 0;
    return ok;
  }

  const OverCounts& over_;
  const std::vector<std::uint64_t>& pair_min_;
  Incumbent& incumbent_;
  std::optional<std::uint64_t> budget_;
  std::atomic<std::uint64_t>& nodes_;
  int n_;
  int branch_ = 0;
  std::vector<char> placed_;
  std::vector<int> prefix_;
  std::vector<int> best_order_;
};

std::vector<int> greedy_order(const OverCounts& over) {
  const int n = over.size();
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    std::uint64_t best_cost = 0;
    for (int x = 0; x < n; ++x) {
      if (placed[static_cast<std::size_t>(x)]) continue;
      std::uint64_t cost = 0;
      for (int r = 0; r < n; ++r)
        if (!placed[static_cast<std::size_t>(r)] && r != x) cost += over(r, x);
      if (best < 0 || cost < best_cost) {
        best = x;
        best_cost = cost;
      }
    }
    placed[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
  }
  return order;
}

// Change in cost when the strand at index `from` is moved to index `to`.
std::int64_t insertion_delta(const OverCounts& over, const std::vector<int>& order, std::size_t from,
                             std::size_t to) {
  const int x = order[from];
  std::int64_t delta = 0;
  if (to > from) {
    for (std::size_t k = from + 1; k <= to; ++k)
      delta += static_cast<std::int64_t>(over(x, order[k])) - static_cast<std::int64_t>(over(order[k], x));
  } else {
    for (std::size_t k = to; k < from; ++k)
      delta += static_cast<std::int64_t>(over(order[k], x)) - static_cast<std::int64_t>(over(x, order[k]));
  }
  return delta;
}

void insertion_local_search(const OverCounts& over, std::vector<int>& order, std::uint64_t seed) {
  const std::size_t n = order.size();
  std::vector<int> scan(n);
  std::iota(scan.begin(), scan.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(scan[i - 1], scan[detail::uniform_below(rng, i)]);

  bool improved = true;
  while (improved) {
    improved = false;
    for (int strand : scan) {
      const auto from = static_cast<std::size_t>(std::find(order.begin(), order.end(), strand) - order.begin());
      for (std::size_t to = 0; to < n && !improved; ++to) {
        if (to == from || insertion_delta(over, order, from, to) >= 0) continue;
        order.erase(order.begin() + static_cast<std::ptrdiff_t>(from));
        order.insert(order.begin() + static_cast<std::ptrdiff_t>(to), strand);
        improved = true;
      }
      if (improved) break;
    }
  }
}

}  // namespace

std::uint64_t objective(const BraidWord& word, const Permutation& pi) {
  const IntMatrix m = ou_matrix(word, pi);
  mpz_class total = 0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < i; ++j) total += m(i, j);
  return total.get_ui();
}

std::uint64_t pair_lower_bound(const BraidWord& word) {
  const OverCounts over(word);
  std::uint64_t bound = 0;
  for (int a = 0; a < over.size(); ++a)
    for (int b = a + 1; b < over.size(); ++b) bound += std::min(over(a, b), over(b, a));
  return bound;
}

WdResult wd_heuristic(const BraidWord& word, std::uint64_t seed) {
  const OverCounts over(word);
  std::vector<int> order = greedy_order(over);
  insertion_local_search(over, order, seed);
  return WdResult{over.order_cost(order), to_permutation(order), false, 0};
}

WdResult wd_exact(const BraidWord& word, const ExactOptions& options) {
  const OverCounts over(word);
  const int n = over.size();
  const WdResult upper = wd_heuristic(word, 0);

  std::vector<std::uint64_t> pair_min(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  std::uint64_t root_remainder = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const std::uint64_t m = std::min(over(a, b), over(b, a));
      pair_min[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = m;
      if (a < b) root_remainder += m;
    }

  Incumbent incumbent(upper.value, n);
  std::atomic<std::uint64_t> nodes{0};
  std::vector<std::vector<int>> branch_best(static_cast<std::size_t>(n));
  std::atomic<bool> exhausted{false};

  auto work = [&](std::atomic<int>& next) {
    BranchSearch search(over, pair_min, incumbent, options.node_budget, nodes);
    for (int first = next.fetch_add(1); first < n; first = next.fetch_add(1)) {
      if (!search.run(first, root_remainder)) exhausted = true;
      if (search.found()) branch_best[static_cast<std::size_t>(first)] = search.best_order();
    }
  };

  std::atomic<int> next{0};
  const int threads = options.node_budget ? 1 : std::clamp(options.threads, 1, std::max(n, 1));
  if (threads == 1) {
    work(next);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back([&] { work(next); });
  }

  const int holder = incumbent.holder();
  if (holder == n) {
    // Nothing at or below the heuristic value was reached before the budget ran out.
    WdResult r = upper;
    r.exact = !exhausted;
    r.nodes = nodes.load();
    return r;
  }
  const auto& order = branch_best[static_cast<std::size_t>(holder)];
  return WdResult{incumbent.value(), to_permutation(order), !exhausted, nodes.load()};
}

}  // namespace oubraid
