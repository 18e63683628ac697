#include "majperm/bijections.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace majperm {

ShuffleSplit split(const Permutation& tau, int l) {
  const int n = tau.size();
  if (l < 0 || l > n) {
    throw std::invalid_argument("split threshold " + std::to_string(l) + " outside 0.." + std::to_string(n));
  }
  std::vector<int> pi;
  std::vector<int> sigma;
  std::vector<int> index;
  for (int pos = 1; pos <= n; ++pos) {
    if (tau[pos] <= l) {
      pi.push_back(tau[pos]);
      index.push_back(pos);
    } else {
      sigma.push_back(tau[pos] - l);
    }
  }
  return {Permutation(std::move(pi)), Permutation(std::move(sigma)), std::move(index), l};
}

Permutation reassemble(const Permutation& pi, const Permutation& sigma, const std::vector<int>& index) {
  const int l = pi.size();
  const int n = l + sigma.size();
  if (static_cast<int>(index.size()) != l) throw std::invalid_argument("index set size differs from |pi|");
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  int prev = 0;
  for (int t = 0; t < l; ++t) {
    const int pos = index[static_cast<std::size_t>(t)];
    if (pos <= prev || pos > n) throw std::invalid_argument("index set must be increasing within [n]");
    word[static_cast<std::size_t>(pos - 1)] = pi[t + 1];
    prev = pos;
  }
  int next_sigma = 1;
  for (auto& slot : word) {
    if (slot == 0) slot = sigma[next_sigma++] + l;
  }
  return Permutation(std::move(word));
}

namespace {

// Shift every position of the [l]-subword by `step` (+1 or -1) cyclically
// within [n]; the subword keeps its order on the sorted new positions.
Permutation cyclic_shift(const Permutation& tau, int l, int step) {
  const int n = tau.size();
  if (l < 1 || l >= n) {
    throw std::invalid_argument("f_l needs 1 <= l < n (l = " + std::to_string(l) + ", n = " +
                                std::to_string(n) + ")");
  }
  auto parts = split(tau, l);
  for (auto& pos : parts.index) pos = (pos - 1 + step + n) % n + 1;
  std::sort(parts.index.begin(), parts.index.end());
  return reassemble(parts.pi, parts.sigma, parts.index);
}

void check_g_params(const Permutation& tau, int d, int k) {
  if (d < 1 || k < 2 || k * d > tau.size()) {
    throw std::invalid_argument("g needs d >= 1, k >= 2 and kd <= n (d = " + std::to_string(d) +
                                ", k = " + std::to_string(k) + ", n = " + std::to_string(tau.size()) + ")");
  }
}

}  // namespace

Permutation f_l(const Permutation& tau, int l) { return cyclic_shift(tau, l, +1); }

Permutation f_l_inverse(const Permutation& tau_prime, int l) { return cyclic_shift(tau_prime, l, -1); }

Permutation g_map(const Permutation& tau, int d, int k) {
  check_g_params(tau, d, k);
  auto parts = split(tau, k * d);
  return reassemble(f_l(parts.pi, d), parts.sigma, parts.index);
}

Permutation g_map_inverse(const Permutation& tau, int d, int k) {
  check_g_params(tau, d, k);
  auto parts = split(tau, k * d);
  return reassemble(f_l_inverse(parts.pi, d), parts.sigma, parts.index);
}

std::vector<Permutation> prefix_max_orbit(const Permutation& p, int k) {
  const int n = p.size();
  if (k < 1 || k > n) {
    throw std::invalid_argument("orbit needs 1 <= k <= n (k = " + std::to_string(k) + ", n = " +
                                std::to_string(n) + ")");
  }
  const auto word = p.word();
  const auto max_it = std::max_element(word.begin(), word.begin() + k);
  const int top = *max_it;
  std::vector<int> rest(word.begin(), word.end());
  rest.erase(rest.begin() + (max_it - word.begin()));

  std::vector<Permutation> orbit;
  orbit.reserve(static_cast<std::size_t>(k));
  for (int space = 0; space < k; ++space) {
    std::vector<int> w = rest;
    w.insert(w.begin() + space, top);
    orbit.emplace_back(std::move(w));
  }
  return orbit;
}

}  // namespace majperm
