#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "majperm/bigint.hpp"
#include "majperm/parallel.hpp"
#include "majperm/permutation.hpp"

namespace majperm {

// Which statistic indexes the rows; columns are always imaj = maj of the
// inverse.
enum class StatPair { MajImaj, InvImaj };

std::string_view to_string(StatPair sp);
StatPair parse_statpair(std::string_view text);  // "MAJ_IMAJ", "maj-imaj", ...

using Grid = std::vector<std::vector<BigInt>>;

/// k x l table of exact counts m_n^{k,l}(i, j), rows and columns indexed by
/// residues 0..k-1 and 0..l-1.
class ResidueMatrix {
 public:
  ResidueMatrix(int n, int k, int l, StatPair statpair = StatPair::MajImaj);

  int n() const { return n_; }
  int k() const { return k_; }
  int l() const { return l_; }
  StatPair statpair() const { return statpair_; }

  BigInt& at(int i, int j);
  const BigInt& at(int i, int j) const;

  // Reduces arbitrary integers mod k and mod l first.
  const BigInt& entry(long long i, long long j) const;

  BigInt total() const;
  Grid rows() const;
  ResidueMatrix transposed() const;

  // Dimensions and entries only; the statpair tag does not take part.
  bool same_counts(const ResidueMatrix& other) const;
  bool operator==(const ResidueMatrix& other) const;

 private:
  int n_;
  int k_;
  int l_;
  StatPair statpair_;
  std::vector<BigInt> counts_;
};

/// Raw histogram of (stat, imaj) over S_n, before any reduction. One pass
/// over S_n answers every (k, l) question for that n.
class JointDistribution {
 public:
  JointDistribution(int n, StatPair statpair);

  int n() const { return n_; }
  StatPair statpair() const { return statpair_; }
  int max_stat() const { return width_ - 1; }  // n(n-1)/2

  // Adds every permutation whose lexicographic rank lies in `range`.
  void accumulate(RankRange range);
  JointDistribution& operator+=(const JointDistribution& other);

  std::uint64_t count(int stat, int imaj_value) const;
  std::uint64_t total() const;

  ResidueMatrix fold(int k, int l) const;

 private:
  int n_;
  StatPair statpair_;
  int width_;
  std::vector<std::uint64_t> counts_;
};

// Partitions S_n into rank ranges, one work unit each, and merges the
// partial histograms by addition. The result does not depend on `for_each`.
JointDistribution joint_distribution(int n, StatPair statpair, const ForEach& for_each = sequential(),
                                     int limit = kMaxEnumerationN);

ResidueMatrix count_matrix(int n, int k, int l, StatPair statpair = StatPair::MajImaj,
                           const ForEach& for_each = sequential(), int limit = kMaxEnumerationN);

std::vector<BigInt> marginal_row(const ResidueMatrix& m);     // sums over j
std::vector<BigInt> marginal_column(const ResidueMatrix& m);  // sums over i

// count_matrix(n, k, l) equals the transpose of count_matrix(n, l, k).
bool transpose_check(int n, int k, int l, const ForEach& for_each = sequential());

/// (k/d) x (l/d) grid of d x d blocks; block (r, s) holds m(r*d + a, s*d + b).
/// Because r*d + a = a (mod d), this is also the grouping of entries by
/// residue class mod d. Throws std::invalid_argument unless d | k and d | l.
std::vector<std::vector<Grid>> block_decompose(const ResidueMatrix& m, int d);

// Sums the entries of each residue class mod d, giving a d x d matrix with
// the same n (equal to m_n^{d,d} when m is m_n^{kd,ld}).
ResidueMatrix residue_class_sums(const ResidueMatrix& m, int d);

// Members of each class M_n^{k,l}(i, j), indexed i * l + j, sorted. n = 0
// gives the single empty permutation in class (0, 0).
inline constexpr int kWitnessLimit = 8;
std::vector<std::vector<Permutation>> witness_sets(int n, int k, int l, StatPair statpair);

// {"n":..,"k":..,"l":..,"statpair":"..","rows":[["2","0"],..]} with no
// whitespace, so output bytes are a function of the matrix only.
std::string to_json(const ResidueMatrix& m);
ResidueMatrix matrix_from_json(std::string_view text);
std::string to_csv(const ResidueMatrix& m);
std::string to_table(const ResidueMatrix& m);

}  // namespace majperm
