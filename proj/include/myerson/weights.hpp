#pragma once

#include <cassert>
#include <cstdint>

namespace myerson {

// Exact binomial coefficient C(a, b) for 0 <= a <= 64. Every value in this
// range fits a uint64 (the largest, C(64, 32), is about 1.83e18 < 2^64).
std::uint64_t binomial(int a, int b);

// Probability that, in a uniformly random permutation of n players, a fixed
// set of k specific players and no others precede a given player:
// k!(n-k-1)!/n! = 1 / (n * C(n-1, k)).
double permutation_subset_weight(int n, int k);

// Weight of a connected coalition C on its own members in the direct
// Shapley decomposition: (|C|-1)! |N(C)|! / (|C|+|N(C)|)!
//   = 1 / (|C| * C(|C|+|N(C)|, |N(C)|)).
double connected_member_weight(int coalition_size, int neighbor_count);

// Weight of a connected coalition C on its neighbors in the same
// decomposition: |C|! (|N(C)|-1)! / (|C|+|N(C)|)!
//   = 1 / (|N(C)| * C(|C|+|N(C)|, |N(C)|)). Requires |N(C)| >= 1.
double connected_neighbor_weight(int coalition_size, int neighbor_count);

}  // namespace myerson
