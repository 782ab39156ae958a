#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace oubraid {

/// A bijection on {1, ..., n}, stored as its image sequence.
///
/// The same type serves as the braid permutation (top position -> bottom
/// position) and as a strand permutation (the i-th entry is the label of the
/// strand placed i-th). Indices passed to operator() are 1-based.
class Permutation {
public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `image` holds each of 1..n once.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const int> image() const noexcept { return image_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> image_;
};

/// i -> second(first(i)). compose(pi, rho_B) is the strand order that the
/// braid product formula feeds to the second factor.
Permutation compose(const Permutation& first, const Permutation& second);

/// (pi(n), pi(n-1), ..., pi(1)).
Permutation reverse(const Permutation& pi);

/// Swaps the entries at 1-based positions k and l.
Permutation transpose(const Permutation& pi, int k, int l);

}  // namespace oubraid
