#include "majperm/closed_forms.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace majperm {

namespace {

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

void require_positive(long long n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " needs a positive argument");
}

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int e = 0; e < exp; ++e) r *= base;
  return r;
}

BigInt pow_big(long long base, long long exp) {
  BigInt r = 1;
  for (long long e = 0; e < exp; ++e) r *= base;
  return r;
}

}  // namespace

int mobius(long long n) {
  require_positive(n, "mobius");
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

long long totient(long long n) {
  require_positive(n, "totient");
  long long phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

long long gcd(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<long long> divisors(long long n) {
  require_positive(n, "divisors");
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigInt mnnn(int n, long long i, long long j) {
  if (n < 1) throw std::invalid_argument("mnnn needs n >= 1");
  BigInt sum = 0;
  for (long long d : divisors(n)) {
    const long long a = d / gcd(i, d);
    const long long b = d / gcd(j, d);
    const int mu = mobius(a) * mobius(b);
    if (mu == 0) continue;
    // phi(a) and phi(b) divide phi(d) since a, b | d
    const long long phi_d = totient(d);
    BigInt term = pow_big(d, n / d) * factorial(static_cast<unsigned>(n / d)) * (phi_d / totient(a)) *
                  (phi_d / totient(b));
    if (mu < 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return exact_div(sum, BigInt(n) * n, "mnnn(" + std::to_string(n) + ")");
}

ResidueMatrix mnnn_matrix(int n) {
  ResidueMatrix m(n, n, n, StatPair::MajImaj);
  // entries depend only on the gcd classes; evaluate each class pair once
  std::map<std::pair<long long, long long>, BigInt> by_class;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto key = std::make_pair(cor_gcd_canonical(i, n), cor_gcd_canonical(j, n));
      auto it = by_class.find(key);
      if (it == by_class.end()) it = by_class.emplace(key, mnnn(n, i, j)).first;
      m.at(i, j) = it->second;
    }
  }
  return m;
}

long long cor_gcd_canonical(long long i, long long n) {
  require_positive(n, "cor_gcd_canonical");
  long long r = ((i % n) + n) % n;
  if (r == 0) r = n;
  return gcd(r, n);
}

BigInt cor_n_plus_1(int n, long long i, long long j) {
  return mnnn(n, i, j) + factorial(static_cast<unsigned>(n - 1));
}

ResidueMatrix cor_n_plus_1_matrix(int n) {
  auto base = mnnn_matrix(n);
  ResidueMatrix m(n + 1, n, n, StatPair::MajImaj);
  const BigInt shift = factorial(static_cast<unsigned>(n - 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = base.at(i, j) + shift;
  }
  return m;
}

ResidueMatrix prime_matrix(int p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const BigInt f = factorial(static_cast<unsigned>(p - 1));
  const BigInt pm1 = p - 1;
  const std::string tag = "prime_matrix(" + std::to_string(p) + ")";
  const BigInt corner = exact_div(f + pm1 * pm1, BigInt(p), tag);
  const BigInt edge = exact_div(f - pm1, BigInt(p), tag);
  const BigInt inner = exact_div(f + 1, BigInt(p), tag);
  ResidueMatrix m(p, p, p, StatPair::MajImaj);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      m.at(i, j) = (i == 0 && j == 0) ? corner : (i == 0 || j == 0) ? edge : inner;
    }
  }
  return m;
}

ResidueMatrix prime_matrix_plus1(int p) {
  const auto base = prime_matrix(p);
  ResidueMatrix m(p + 1, p, p, StatPair::MajImaj);
  const BigInt shift = factorial(static_cast<unsigned>(p - 1));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) m.at(i, j) = base.at(i, j) + shift;
  }
  return m;
}

BigInt prime_power_entry(int p, int r, int i, int j) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (r < 1 || i < 0 || i > j || j > r) throw std::invalid_argument("prime_power_entry needs 0 <= i <= j <= r, r >= 1");
  const long long n = ipow(p, r);
  Rational sum = 0;
  const int top = std::min(i + 1, r);
  for (int k = 0; k <= top; ++k) {
    const long long pk = ipow(p, k);
    const long long cofactor = n / pk;  // p^{r-k}
    Rational psi = 1;
    if (k == i + 1) psi = (i == j) ? Rational(1, (p - 1) * (p - 1)) : Rational(-1, p - 1);
    const BigInt phi = totient(pk);
    sum += Rational(pow_big(pk, cofactor) * factorial(static_cast<unsigned>(cofactor)) * phi * phi) * psi;
  }
  sum /= Rational(BigInt(n) * n);
  if (boost::multiprecision::denominator(sum) != 1 || sum < 0) {
    throw ExactnessError("prime_power_entry(" + std::to_string(p) + "," + std::to_string(r) + "," +
                         std::to_string(i) + "," + std::to_string(j) + ") = " + sum.str() +
                         " is not a nonnegative integer");
  }
  return boost::multiprecision::numerator(sum);
}

ResidueMatrix prime_power_matrix(int p, int r) {
  if (!is_prime(p) || r < 1) throw std::invalid_argument("prime_power_matrix needs prime p and r >= 1");
  const long long n = ipow(p, r);
  auto exponent = [&](long long residue) {
    long long g = cor_gcd_canonical(residue, n);
    int e = 0;
    while (g % p == 0) {
      g /= p;
      ++e;
    }
    return e;
  };
  std::vector<std::vector<BigInt>> by_class(static_cast<std::size_t>(r + 1),
                                            std::vector<BigInt>(static_cast<std::size_t>(r + 1)));
  for (int a = 0; a <= r; ++a) {
    for (int b = a; b <= r; ++b) {
      by_class[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = prime_power_entry(p, r, a, b);
      by_class[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] =
          by_class[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
  }
  ResidueMatrix m(static_cast<int>(n), static_cast<int>(n), static_cast<int>(n), StatPair::MajImaj);
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < n; ++j) {
      m.at(static_cast<int>(i), static_cast<int>(j)) =
          by_class[static_cast<std::size_t>(exponent(i))][static_cast<std::size_t>(exponent(j))];
    }
  }
  return m;
}

ResidueMatrix b_step(const ResidueMatrix& b_prev, int n) {
  if (n < 4 || b_prev.n() != n - 2 || b_prev.k() != 2 || b_prev.l() != 2) {
    throw std::invalid_argument("b_step needs b_{n-2} (2 x 2) and n >= 4");
  }
  const long long m = n / 2;
  const BigInt same = (n % 2 == 0) ? BigInt(2 * m * m) : BigInt(2 * m * (m + 1));
  const BigInt shifted = (n % 2 == 0) ? BigInt(2 * m * (m - 1)) : BigInt(2 * m * m);
  ResidueMatrix out(n, 2, 2, b_prev.statpair());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.at(i, j) = same * b_prev.at(i, j) + shifted * b_prev.at((i + 1) % 2, j);
  }
  return out;
}

ResidueMatrix b_recursion(int n) {
  if (n < 2) throw std::invalid_argument("b_recursion needs n >= 2");
  ResidueMatrix even = count_matrix(2, 2, 2);
  ResidueMatrix odd = count_matrix(3, 2, 2);
  for (int t = 4; t <= n; ++t) {
    if (t % 2 == 0) {
      even = b_step(even, t);
    } else {
      odd = b_step(odd, t);
    }
  }
  return n % 2 == 0 ? even : odd;
}

namespace {

BigInt c_scale(int n) {
  const unsigned m = static_cast<unsigned>(n / 2);
  BigInt s = factorial(m);
  for (unsigned e = 1; e < m; ++e) s *= 2;
  return s;
}

}  // namespace

ResidueMatrix c_from_b(const ResidueMatrix& b) {
  if (b.n() < 2 || b.k() != 2 || b.l() != 2) throw std::invalid_argument("c_from_b needs b_n with n >= 2");
  const BigInt scale = c_scale(b.n());
  ResidueMatrix c(b.n(), 2, 2, b.statpair());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) c.at(i, j) = exact_div(b.at(i, j), scale, "c_" + std::to_string(b.n()));
  }
  return c;
}

ResidueMatrix c_step(const ResidueMatrix& c_prev, int n) {
  if (n < 4 || c_prev.n() != n - 2 || c_prev.k() != 2 || c_prev.l() != 2) {
    throw std::invalid_argument("c_step needs c_{n-2} (2 x 2) and n >= 4");
  }
  const long long m = n / 2;
  const BigInt same = (n % 2 == 0) ? BigInt(m) : BigInt(m + 1);
  const BigInt shifted = (n % 2 == 0) ? BigInt(m - 1) : BigInt(m);
  ResidueMatrix out(n, 2, 2, c_prev.statpair());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.at(i, j) = same * c_prev.at(i, j) + shifted * c_prev.at((i + 1) % 2, j);
  }
  return out;
}

BlockSpec block_spec_of(const ResidueMatrix& m, int p) {
  if (m.k() != p || m.l() != p) throw std::invalid_argument("block_spec_of needs a p x p matrix");
  BlockSpec spec{m.at(0, 0), p > 1 ? m.at(0, 1) : BigInt(0), p > 1 ? m.at(1, 1) : BigInt(0)};
  auto where = [&](int i, int j) {
    return "M_" + std::to_string(m.n()) + "^{" + std::to_string(p) + "," + std::to_string(p) + "}(" +
           std::to_string(i) + "," + std::to_string(j) + ") = " + m.at(i, j).str();
  };
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      const BigInt& want = (i == 0 && j == 0) ? spec.q : (i == 0 || j == 0) ? spec.r : spec.s;
      if (m.at(i, j) != want) throw BlockStructureError(where(i, j) + ", expected " + want.str());
    }
  }
  const BigInt pm1 = p - 1;
  const BigInt group = factorial(static_cast<unsigned>(m.n()));
  if (spec.q + 2 * pm1 * spec.r + pm1 * pm1 * spec.s != group) {
    throw BlockStructureError("block values do not add up to " + group.str());
  }
  return spec;
}

BlockSpec extract_block_sequences(int p, int n, bool companion, const ForEach& for_each) {
  if (!is_prime(p) || n < 1) throw std::invalid_argument("extract_block_sequences needs prime p and n >= 1");
  const int size = n * p + (companion ? 1 : 0);
  return block_spec_of(count_matrix(size, p, p, StatPair::MajImaj, for_each), p);
}

}  // namespace majperm
