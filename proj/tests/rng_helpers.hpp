#pragma once

#include "oubraid/families.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace test_support {

inline int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline oubraid::BraidWord random_layer(std::mt19937_64& rng, int n, int max_len) {
  if (n == 1) return oubraid::BraidWord(1);
  return oubraid::random_braid(n, static_cast<std::size_t>(draw(rng, 0, max_len)), rng());
}

/// Two random layers on at most 8 strands in total with a random interleaving.
struct LayeredInstance {
  oubraid::BraidWord first, second;
  std::vector<int> assignment, s1, s2;
};

inline LayeredInstance random_layered(std::mt19937_64& rng, int max_strands = 8) {
  LayeredInstance inst;
  const int n1 = draw(rng, 1, max_strands - 1);
  const int n2 = draw(rng, 1, max_strands - n1);
  inst.first = random_layer(rng, n1, 16);
  inst.second = random_layer(rng, n2, 16);
  inst.assignment.assign(static_cast<std::size_t>(n1), 1);
  inst.assignment.insert(inst.assignment.end(), static_cast<std::size_t>(n2), 2);
  std::shuffle(inst.assignment.begin(), inst.assignment.end(), rng);
  for (std::size_t p = 0; p < inst.assignment.size(); ++p)
    (inst.assignment[p] == 1 ? inst.s1 : inst.s2).push_back(static_cast<int>(p) + 1);
  return inst;
}

}  // namespace test_support
