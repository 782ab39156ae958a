#pragma once

#include "oubraid/braid.hpp"

#include <cstdint>

namespace oubraid {

/// (s_1 s_2^{-1} s_3 ... s_{p-1}^{+-1})^q: generator i carries sign (-1)^{i+1}.
/// Requires p >= 2, q >= 1.
BraidWord weaving(int p, int q);

/// Closed-form OU matrix of weaving(p, p) for odd p >= 3 under the order
/// (1, 3, ..., p, 2, 4, ..., p-1): entry (i, j) is 2 when
/// (p+1)/2 <= i-j <= p-1 or 1 <= j-i <= (p-1)/2, and 0 otherwise.
IntMatrix weaving_ou_pattern(int p);

/// The order (1, 3, ..., p, 2, 4, ..., p-1).
Permutation odd_even_order(int p);

/// Staircase word (s_1)(s_2 s_1)...(s_{n-1} ... s_1); every pair crosses once.
BraidWord fundamental(int n);

/// fundamental(n) repeated r times (empty for r = 0).
BraidWord delta_power(int n, int r);

/// The strictly lower triangular all-ones matrix, OU matrix of fundamental(n).
IntMatrix lower_ones(int n);

/// Positive word with braid permutation rho in which each pair crosses at
/// most once; bubble sort order, so the length is the inversion count.
BraidWord permutation_braid(const Permutation& rho);

// Seeded generators of i.i.d. letters; n >= 2, length >= 0.
BraidWord random_braid(int n, std::size_t length, std::uint64_t seed);
BraidWord random_positive(int n, std::size_t length, std::uint64_t seed);
/// random_positive followed by permutation_braid(rho^{-1}): positive and pure.
BraidWord random_positive_pure(int n, std::size_t length, std::uint64_t seed);

Permutation random_permutation(int n, std::uint64_t seed);

}  // namespace oubraid
