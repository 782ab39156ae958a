#include "oubraid/families.hpp"

#include "rng.hpp"

#include <numeric>
#include <stdexcept>

namespace oubraid {

BraidWord weaving(int p, int q) {
  if (p < 2 || q < 1) throw std::invalid_argument("weaving: need p >= 2 and q >= 1");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(p - 1) * static_cast<std::size_t>(q));
  for (int rep = 0; rep < q; ++rep)
    for (int i = 1; i <= p - 1; ++i) letters.push_back(i % 2 == 1 ? i : -i);
  return BraidWord(p, std::move(letters));
}

IntMatrix weaving_ou_pattern(int p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("weaving_ou_pattern: p must be odd and at least 3");
  IntMatrix m(p);
  const int half = (p - 1) / 2;
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= p; ++j) {
      const bool below = i > j && i - j >= half + 1 && i - j <= p - 1;
      const bool above = i < j && j - i >= 1 && j - i <= half;
      if (below || above) m(i - 1, j - 1) = 2;
    }
  return m;
}

Permutation odd_even_order(int p) {
  std::vector<int> image;
  for (int s = 1; s <= p; s += 2) image.push_back(s);
  for (int s = 2; s <= p; s += 2) image.push_back(s);
  return Permutation(std::move(image));
}

BraidWord fundamental(int n) {
  if (n < 1) throw std::invalid_argument("fundamental: need n >= 1");
  std::vector<int> letters;
  for (int top = 1; top <= n - 1; ++top)
    for (int g = top; g >= 1; --g) letters.push_back(g);
  return BraidWord(n, std::move(letters));
}

BraidWord delta_power(int n, int r) {
  if (r < 0) throw std::invalid_argument("delta_power: need r >= 0");
  const BraidWord delta = fundamental(n);
  BraidWord out(n);
  for (int k = 0; k < r; ++k) out = product(out, delta);
  return out;
}

IntMatrix lower_ones(int n) {
  IntMatrix d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) d(i, j) = 1;
  return d;
}

BraidWord permutation_braid(const Permutation& rho) {
  // target[p] is the bottom position the strand now at p must reach.
  std::vector<int> target(rho.image().begin(), rho.image().end());
  std::vector<int> letters;
  const std::size_t n = target.size();
  for (std::size_t pass = 0; pass + 1 < n; ++pass) {
    bool swapped = false;
    for (std::size_t p = 0; p + 1 < n - pass; ++p)
      if (target[p] > target[p + 1]) {
        std::swap(target[p], target[p + 1]);
        letters.push_back(static_cast<int>(p) + 1);
        swapped = true;
      }
    if (!swapped) break;
  }
  return BraidWord(std::max(rho.size(), 1), std::move(letters));
}

namespace {

std::vector<int> random_letters(int n, std::size_t length, std::uint64_t seed, bool positive) {
  if (n < 2) throw std::invalid_argument("random braid generators need n >= 2");
  std::mt19937_64 rng(seed);
  const auto gens = static_cast<std::uint64_t>(n - 1);
  std::vector<int> letters;
  letters.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    if (positive) {
      letters.push_back(1 + static_cast<int>(detail::uniform_below(rng, gens)));
    } else {
      const auto draw = detail::uniform_below(rng, 2 * gens);
      const int g = 1 + static_cast<int>(draw / 2);
      letters.push_back(draw % 2 == 0 ? g : -g);
    }
  }
  return letters;
}

}  // namespace

BraidWord random_braid(int n, std::size_t length, std::uint64_t seed) {
  return BraidWord(n, random_letters(n, length, seed, false));
}

BraidWord random_positive(int n, std::size_t length, std::uint64_t seed) {
  return BraidWord(n, random_letters(n, length, seed, true));
}

BraidWord random_positive_pure(int n, std::size_t length, std::uint64_t seed) {
  const BraidWord head = random_positive(n, length, seed);
  return product(head, permutation_braid(braid_permutation(head).inverse()));
}

Permutation random_permutation(int n, std::uint64_t seed) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::mt19937_64 rng(seed);
  for (std::size_t i = image.size(); i > 1; --i) std::swap(image[i - 1], image[detail::uniform_below(rng, i)]);
  return Permutation(std::move(image));
}

}  // namespace oubraid
