#pragma once

#include <vector>

#include "majperm/bigint.hpp"
#include "majperm/parallel.hpp"
#include "majperm/residue_matrix.hpp"

namespace majperm {

// Number theory on positive integers (trial division).
int mobius(long long n);
long long totient(long long n);
long long gcd(long long a, long long b);  // gcd(0, n) = n
bool is_prime(long long n);
std::vector<long long> divisors(long long n);  // increasing

/// m_n^{n,n}(i, j) from the divisor-sum formula. Residues are taken mod n;
/// residue 0 and representative n agree because gcd(0, d) = gcd(n, d) = d for
/// every d | n. Exact; throws ExactnessError if the sum is not divisible by n^2.
BigInt mnnn(int n, long long i, long long j);
ResidueMatrix mnnn_matrix(int n);

// gcd(i mod n, n) with residue 0 read as n. Entries of m_n^{n,n} depend on
// (i, j) only through these divisors.
long long cor_gcd_canonical(long long i, long long n);

/// m_{n+1}^{n,n}(i, j) = m_n^{n,n}(i, j) + (n - 1)!.
BigInt cor_n_plus_1(int n, long long i, long long j);
ResidueMatrix cor_n_plus_1_matrix(int n);  // matrix for S_{n+1}, moduli n

/// p x p matrices for S_p and S_{p+1}, residue 0 first. Throws
/// std::invalid_argument for non-prime p.
ResidueMatrix prime_matrix(int p);
ResidueMatrix prime_matrix_plus1(int p);

/// m_n^{n,n}(p^i, p^j) for n = p^r and 0 <= i <= j <= r, summed over
/// k = 0..min(i + 1, r) in exact rationals.
BigInt prime_power_entry(int p, int r, int i, int j);
// Full p^r x p^r matrix assembled from the (p^i, p^j) entries by gcd class.
ResidueMatrix prime_power_matrix(int p, int r);

/// b_n = m_n^{2,2}. Seeds b_2 and b_3 come from enumeration; larger n use
///   b_{2m}   = 2m^2 b_{2m-2}(i,j) + 2m(m-1) b_{2m-2}(i+1,j)
///   b_{2m+1} = 2m(m+1) b_{2m-1}(i,j) + 2m^2 b_{2m-1}(i+1,j)
ResidueMatrix b_recursion(int n);
// One recursion step: b_n from b_{n-2} (n >= 4).
ResidueMatrix b_step(const ResidueMatrix& b_prev, int n);

// c_n = b_n / (2^{m-1} m!) with m = floor(n / 2); exact division enforced.
ResidueMatrix c_from_b(const ResidueMatrix& b);
ResidueMatrix c_step(const ResidueMatrix& c_prev, int n);

/// Block values of a p x p matrix of the form
///   [ q J_{1,1}    r J_{1,p-1}  ]
///   [ r J_{p-1,1}  s J_{p-1,p-1}]
struct BlockSpec {
  BigInt q;
  BigInt r;
  BigInt s;

  bool operator==(const BlockSpec&) const = default;
};

class BlockStructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads (q, r, s) off `m` (must be p x p); throws BlockStructureError naming
// the first entry that breaks the pattern or the cardinality identity.
BlockSpec block_spec_of(const ResidueMatrix& m, int p);

// Enumerates S_{np} (or S_{np+1} when `companion`) and extracts its blocks.
BlockSpec extract_block_sequences(int p, int n, bool companion = false, const ForEach& for_each = sequential());

}  // namespace majperm
