#include "oubraid/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oubraid {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size() + 1, 0);
  for (int v : image_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Permutation: image is not a bijection on 1.." +
                                  std::to_string(size()));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("Permutation::identity: negative size");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i) + 1;
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

std::string Permutation::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(image_[i]);
  }
  return out + ")";
}

Permutation compose(const Permutation& first, const Permutation& second) {
  if (first.size() != second.size())
    throw std::invalid_argument("compose: permutation sizes differ");
  std::vector<int> image(static_cast<std::size_t>(first.size()));
  for (int i = 1; i <= first.size(); ++i)
    image[static_cast<std::size_t>(i - 1)] = second(first(i));
  return Permutation(std::move(image));
}

Permutation reverse(const Permutation& pi) {
  std::vector<int> image(pi.image().rbegin(), pi.image().rend());
  return Permutation(std::move(image));
}

Permutation transpose(const Permutation& pi, int k, int l) {
  if (k < 1 || l < 1 || k > pi.size() || l > pi.size())
    throw std::out_of_range("transpose: position out of range");
  std::vector<int> image(pi.image().begin(), pi.image().end());
  std::swap(image[static_cast<std::size_t>(k - 1)], image[static_cast<std::size_t>(l - 1)]);
  return Permutation(std::move(image));
}

}  // namespace oubraid
