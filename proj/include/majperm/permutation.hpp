#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace majperm {

// Exhaustive enumeration never goes beyond S_14 (14! ~ 8.7e10).
inline constexpr int kMaxEnumerationN = 14;

class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws SizeLimitError if n is outside [1, min(limit, kMaxEnumerationN)].
void check_enumeration_limit(int n, int limit = kMaxEnumerationN);

/// A permutation of [n] in one-line notation a_1 a_2 ... a_n.
///
/// Positions and values are 1-based: `p[i]` is a_i for 1 <= i <= n. The empty
/// permutation (n = 0) is allowed; it is the neutral element for shuffles.
class Permutation {
 public:
  Permutation() = default;

  // Throws std::invalid_argument unless `word` is a bijection of [word.size()].
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  // Accepts "6371452" (one digit per value, n <= 9) or "10,3,7,...".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  int operator[](int pos) const { return word_[static_cast<std::size_t>(pos - 1)]; }

  std::span<const int> word() const { return word_; }

  // Digit string for n <= 9, comma separated otherwise.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> word, Unchecked) : word_(std::move(word)) {}
  friend class PermutationStream;
  friend Permutation unrank(int n, std::uint64_t rank);
  friend Permutation inverse(const Permutation& p);

  std::vector<int> word_;
};

// Statistics on sequences of distinct integers. For a Permutation these are
// exactly maj, inv and imaj; for an arbitrary sequence imaj sums every value v
// such that v + 1 also occurs and sits to the left of v.
int maj_of(std::span<const int> seq);
int inv_of(std::span<const int> seq);
int imaj_of(std::span<const int> seq);

inline int maj(const Permutation& p) { return maj_of(p.word()); }
inline int inv(const Permutation& p) { return inv_of(p.word()); }
inline int imaj(const Permutation& p) { return imaj_of(p.word()); }

Permutation inverse(const Permutation& p);

std::uint64_t factorial_u64(int n);

/// Half-open interval [first, last) of lexicographic ranks in S_n.
struct RankRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;

  std::uint64_t size() const { return last - first; }
  bool operator==(const RankRange&) const = default;
};

// Splits [0, n!) into at most `parts` contiguous non-empty ranges of
// near-equal size, in increasing order.
std::vector<RankRange> partition_ranks(int n, std::size_t parts);

// Lexicographic rank <-> permutation (Lehmer code).
std::uint64_t rank(const Permutation& p);
Permutation unrank(int n, std::uint64_t rank);

/// Lexicographic stream over a rank range of S_n.
///
///     for (const Permutation& p : PermutationStream(4)) { ... }
class PermutationStream {
 public:
  explicit PermutationStream(int n, int limit = kMaxEnumerationN);
  PermutationStream(int n, RankRange range, int limit = kMaxEnumerationN);

  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    const Permutation& operator*() const { return current_; }
    const Permutation* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(const iterator& other) const { return remaining_ == other.remaining_; }

   private:
    friend class PermutationStream;
    Permutation current_;
    std::uint64_t remaining_ = 0;
  };

  iterator begin() const;
  iterator end() const { return iterator{}; }

  int n() const { return n_; }
  RankRange range() const { return range_; }

 private:
  int n_;
  RankRange range_;
};

std::vector<Permutation> all_permutations(int n, int limit = kMaxEnumerationN);

}  // namespace majperm
