#pragma once

#include <span>
#include <vector>

#include "majperm/permutation.hpp"
#include "majperm/report.hpp"

namespace majperm {

/// Increasing positions i_1 < ... < i_l inside [n].
class IndexSet {
 public:
  IndexSet(std::vector<int> positions, int n);

  // All C(n, l) index sets in lexicographic order.
  static std::vector<IndexSet> all(int n, int l);

  const std::vector<int>& positions() const { return positions_; }
  int size() const { return static_cast<int>(positions_.size()); }
  int n() const { return n_; }

 private:
  std::vector<int> positions_;
  int n_;
};

/// Gaps g_1..g_{l-1} >= 1 between consecutive positions of a length-l word.
class GapComposition {
 public:
  explicit GapComposition(std::vector<int> gaps);

  // Every composition with l - 1 parts and total at most max_span.
  static std::vector<GapComposition> all(int l, int max_span);

  const std::vector<int>& gaps() const { return gaps_; }
  int parts() const { return static_cast<int>(gaps_.size()); }
  int span() const;  // sum of gaps = i_l - i_1

  bool all_odd() const;
  bool all_even() const;

 private:
  std::vector<int> gaps_;
};

// Order-preserving interleavings, sorted. Throws if the value sets overlap.
std::vector<std::vector<int>> shuffle(std::span<const int> pi, std::span<const int> sigma);

// pi shuffled with sigma + |pi|; sorted permutations of [|pi| + |sigma|].
std::vector<Permutation> shuffle_plus(const Permutation& pi, const Permutation& sigma);

// Every reassembly of some pi in M at positions I with some sigma in N
// elsewhere. |result| = |M| * |N|; sorted.
std::vector<Permutation> shuffle_at(std::span<const Permutation> M, std::span<const Permutation> N,
                                    const IndexSet& index);

// Sum of I minus l(l+1)/2: the cross-inversion count shared by every shuffle
// that puts the small values at I.
int wt_index(const IndexSet& index, int l);

// Members of pi shuffle+ sigma whose pi-positions have consecutive
// differences exactly `gamma`; sorted.
std::vector<Permutation> shuffle_gamma(const Permutation& pi, const Permutation& sigma,
                                       const GapComposition& gamma);

// Sum over t of (g_t - 1)(l - t).
int wt_gamma(const GapComposition& gamma, int l);

// Pairs (s < t) with tau_s > l >= tau_t.
int inv_between(const Permutation& tau, int l);

// Subsum of imaj(tau) over consecutive value pairs (v, v + 1) with exactly
// one of them <= l.
int imaj_between(const Permutation& tau, int l);

// Checks the disjoint-union decomposition of M_n^{k,l}(i, j) (inv/imaj
// classes) into index-set shuffles of classes of S_l and S_{n-l}.
VerificationReport verify_grind(int n, int k, int l, int i, int j);

// Same decomposition for M_n^{l,l}(i, j) with gap compositions.
VerificationReport verify_ind(int n, int l, int i, int j);

}  // namespace majperm
