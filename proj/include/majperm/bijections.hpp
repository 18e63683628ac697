#pragma once

#include <vector>

#include "majperm/permutation.hpp"

namespace majperm {

/// tau viewed as a shuffle of its small values (pi, a permutation of [l])
/// and its large values l+1..n (sigma, stored normalized by subtracting l).
struct ShuffleSplit {
  Permutation pi;
  Permutation sigma;        // normalized to [n - l]
  std::vector<int> index;   // positions of pi in tau, increasing, 1-based
  int threshold = 0;        // l

  bool operator==(const ShuffleSplit&) const = default;
};

// Throws std::invalid_argument unless 0 <= l <= n.
ShuffleSplit split(const Permutation& tau, int l);

// Inverse of split: pi at `index`, sigma + |pi| everywhere else.
Permutation reassemble(const Permutation& pi, const Permutation& sigma, const std::vector<int>& index);

/// The cyclic-shift map f_l on S_n (requires 1 <= l < n). Moves every
/// position of pi one step right, wrapping n to 1, and keeps pi and sigma in
/// their original relative order.
Permutation f_l(const Permutation& tau, int l);
Permutation f_l_inverse(const Permutation& tau_prime, int l);

/// Applies f_d to the subword on [kd] and puts it back at the same
/// positions. Requires d >= 1, k >= 2 and kd <= n.
Permutation g_map(const Permutation& tau, int d, int k);
Permutation g_map_inverse(const Permutation& tau, int d, int k);

/// Orbit of p under re-inserting the maximum of its first k entries into
/// spaces 0..k-1 of the remaining word. Element i has the maximum in space i.
/// Requires 1 <= k <= n.
std::vector<Permutation> prefix_max_orbit(const Permutation& p, int k);

}  // namespace majperm
