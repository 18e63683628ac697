#pragma once

// Brute-force references used only by the tests. Everything here works on
// plain vectors straight from the definitions, sharing no code with the
// library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline int maj(const Word& w) {
  int s = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) s += static_cast<int>(i) + 1;
  }
  return s;
}

inline int inv(const Word& w) {
  int s = 0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = a + 1; b < w.size(); ++b) s += w[a] > w[b];
  }
  return s;
}

inline Word inverse(const Word& w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[static_cast<std::size_t>(w[i] - 1)] = static_cast<int>(i) + 1;
  return out;
}

// maj of the inverse, the defining form
inline int imaj(const Word& w) { return maj(inverse(w)); }

inline Word identity(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

template <class F>
void for_each_perm(int n, F&& f) {
  Word w = identity(n);
  do {
    f(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

// counts[i][j] of permutations with (stat mod k, imaj mod l) = (i, j)
inline std::vector<std::vector<std::uint64_t>> matrix(int n, int k, int l, bool use_inv = false) {
  std::vector<std::vector<std::uint64_t>> m(static_cast<std::size_t>(k),
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(l), 0));
  for_each_perm(n, [&](const Word& w) {
    const int s = use_inv ? inv(w) : maj(w);
    ++m[static_cast<std::size_t>(s % k)][static_cast<std::size_t>(imaj(w) % l)];
  });
  return m;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Linear sieve for mu and phi up to `limit`.
struct Sieve {
  std::vector<int> mu;
  std::vector<long long> phi;

  explicit Sieve(int limit) : mu(static_cast<std::size_t>(limit) + 1, 1), phi(static_cast<std::size_t>(limit) + 1) {
    std::vector<int> primes;
    std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
    phi[1] = 1;
    for (int i = 2; i <= limit; ++i) {
      if (!composite[static_cast<std::size_t>(i)]) {
        primes.push_back(i);
        mu[static_cast<std::size_t>(i)] = -1;
        phi[static_cast<std::size_t>(i)] = i - 1;
      }
      for (int p : primes) {
        const long long ip = static_cast<long long>(i) * p;
        if (ip > limit) break;
        const auto u = static_cast<std::size_t>(ip);
        composite[u] = 1;
        if (i % p == 0) {
          mu[u] = 0;
          phi[u] = phi[static_cast<std::size_t>(i)] * p;
          break;
        }
        mu[u] = -mu[static_cast<std::size_t>(i)];
        phi[u] = phi[static_cast<std::size_t>(i)] * (p - 1);
      }
    }
  }
};

}  // namespace oracle
