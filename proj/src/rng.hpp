#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace oubraid::detail {

// mt19937_64 output is fixed by the standard; std::uniform_int_distribution
// is not, so bounded draws go through this rejection sampler instead.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace oubraid::detail
