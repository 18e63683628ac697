#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "majperm/parallel.hpp"
#include "majperm/residue_matrix.hpp"

namespace majperm {

inline constexpr int kMaxSytN = 14;

/// Integer partition lambda, parts weakly decreasing and positive.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |lambda|
  int rows() const { return static_cast<int>(parts_.size()); }

  // n! / prod(hook lengths)
  std::uint64_t hook_length_count() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n, reverse-lexicographic: (n), (n-1,1), ...
std::vector<Partition> partitions(int n);

/// Standard Young tableau: rows[r][c] is the entry in row r, column c.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;
};

// Visits every SYT of `shape`. Throws ExactnessError if the number visited
// differs from the hook-length count.
void syt_for_each(const Partition& shape, const std::function<void(const Tableau&)>& visit);
std::vector<Tableau> syt_enumerate(const Partition& shape);

// Sum of descents i, where i + 1 sits in a strictly lower row than i.
int maj_tableau(const Tableau& t);

// Histogram of maj over the SYT of `shape`, indexed by raw major index.
std::vector<std::uint64_t> maj_histogram(const Partition& shape);

// #{T of shape lambda : maj T = i (mod modulus)}
std::uint64_t f_multiplicity(const Partition& shape, int modulus, int i);

/// Sum over lambda of f(lambda, k, i) * f(lambda, l, j). Shapes are
/// independent work units merged by addition.
ResidueMatrix joint_matrix_syt(int n, int k, int l, const ForEach& for_each = sequential());

}  // namespace majperm
