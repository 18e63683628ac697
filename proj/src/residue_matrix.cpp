#include "majperm/residue_matrix.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace majperm {

std::string_view to_string(StatPair sp) {
  return sp == StatPair::MajImaj ? "MAJ_IMAJ" : "INV_IMAJ";
}

StatPair parse_statpair(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) {
    return c == '-' ? '_' : static_cast<char>(std::toupper(c));
  });
  if (t == "MAJ_IMAJ" || t == "MAJ") return StatPair::MajImaj;
  if (t == "INV_IMAJ" || t == "INV") return StatPair::InvImaj;
  throw std::invalid_argument("unknown statpair '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// ResidueMatrix

ResidueMatrix::ResidueMatrix(int n, int k, int l, StatPair statpair)
    : n_(n), k_(k), l_(l), statpair_(statpair) {
  if (n < 0 || k < 1 || l < 1) throw std::invalid_argument("matrix needs n >= 0 and k, l >= 1");
  counts_.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(l), BigInt(0));
}

BigInt& ResidueMatrix::at(int i, int j) {
  if (i < 0 || i >= k_ || j < 0 || j >= l_) throw std::out_of_range("residue index out of range");
  return counts_[static_cast<std::size_t>(i) * static_cast<std::size_t>(l_) + static_cast<std::size_t>(j)];
}

const BigInt& ResidueMatrix::at(int i, int j) const {
  return const_cast<ResidueMatrix*>(this)->at(i, j);
}

const BigInt& ResidueMatrix::entry(long long i, long long j) const {
  auto mod = [](long long a, int m) { return static_cast<int>(((a % m) + m) % m); };
  return at(mod(i, k_), mod(j, l_));
}

BigInt ResidueMatrix::total() const {
  BigInt t = 0;
  for (const auto& c : counts_) t += c;
  return t;
}

Grid ResidueMatrix::rows() const {
  Grid g(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < l_; ++j) g[static_cast<std::size_t>(i)].push_back(at(i, j));
  }
  return g;
}

ResidueMatrix ResidueMatrix::transposed() const {
  ResidueMatrix t(n_, l_, k_, statpair_);
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < l_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

bool ResidueMatrix::same_counts(const ResidueMatrix& other) const {
  return n_ == other.n_ && k_ == other.k_ && l_ == other.l_ && counts_ == other.counts_;
}

bool ResidueMatrix::operator==(const ResidueMatrix& other) const {
  return same_counts(other) && statpair_ == other.statpair_;
}

// ---------------------------------------------------------------------------
// Exhaustive accumulation
//
// Depth-first construction of a_1 a_2 ... left to right, children in
// increasing value order, so each subtree at depth t is a contiguous block of
// (n - t)! lexicographic ranks. Statistics are updated on placement:
//   maj  += t        when a_t > a_{t+1} is placed at position t + 1
//   inv  += #{placed values > v}
//   imaj += v        if v + 1 was already placed (it is left of v)

namespace {

template <StatPair SP>
class Walker {
 public:
  Walker(int n, int width, std::uint64_t* table, RankRange range)
      : n_(n), width_(width), table_(table), range_(range) {
    for (int i = 0; i <= n; ++i) fact_[i] = factorial_u64(i);
    all_ = ((1u << n) - 1u) << 1;  // bit v set for v in [n]
  }

  void run() { partial(0, 0u, 0, 0, 0, 0); }

 private:
  static inline void place(int v, int depth, unsigned used, int prev, int& s1, int& s2) {
    if constexpr (SP == StatPair::MajImaj) {
      if (depth > 0 && prev > v) s1 += depth;
    } else {
      s1 += std::popcount(used >> (v + 1));
    }
    if ((used >> (v + 1)) & 1u) s2 += v;
  }

  void full(int depth, unsigned used, int prev, int s1, int s2) {
    unsigned free = all_ & ~used;
    if (depth == n_ - 1) {
      const int v = std::countr_zero(free);
      place(v, depth, used, prev, s1, s2);
      ++table_[s1 * width_ + s2];
      return;
    }
    while (free) {
      const int v = std::countr_zero(free);
      free &= free - 1;
      int a = s1, b = s2;
      place(v, depth, used, prev, a, b);
      full(depth + 1, used | (1u << v), v, a, b);
    }
  }

  void partial(int depth, unsigned used, int prev, int s1, int s2, std::uint64_t base) {
    const std::uint64_t span = fact_[n_ - depth];
    if (base >= range_.last || base + span <= range_.first) return;
    if (base >= range_.first && base + span <= range_.last) {
      if (depth == n_) {
        ++table_[s1 * width_ + s2];
      } else {
        full(depth, used, prev, s1, s2);
      }
      return;
    }
    const std::uint64_t child_span = fact_[n_ - depth - 1];
    unsigned free = all_ & ~used;
    std::uint64_t child_base = base;
    while (free) {
      const int v = std::countr_zero(free);
      free &= free - 1;
      int a = s1, b = s2;
      place(v, depth, used, prev, a, b);
      partial(depth + 1, used | (1u << v), v, a, b, child_base);
      child_base += child_span;
    }
  }

  int n_;
  int width_;
  std::uint64_t* table_;
  RankRange range_;
  std::uint64_t fact_[kMaxEnumerationN + 1]{};
  unsigned all_ = 0;
};

}  // namespace

JointDistribution::JointDistribution(int n, StatPair statpair)
    : n_(n), statpair_(statpair), width_(n * (n - 1) / 2 + 1) {
  if (n < 1 || n > kMaxEnumerationN) throw SizeLimitError("joint distribution needs 1 <= n <= 14");
  counts_.assign(static_cast<std::size_t>(width_) * static_cast<std::size_t>(width_), 0);
}

void JointDistribution::accumulate(RankRange range) {
  if (range.last > factorial_u64(n_) || range.first > range.last) {
    throw std::out_of_range("rank range outside [0, n!)");
  }
  if (statpair_ == StatPair::MajImaj) {
    Walker<StatPair::MajImaj>(n_, width_, counts_.data(), range).run();
  } else {
    Walker<StatPair::InvImaj>(n_, width_, counts_.data(), range).run();
  }
}

JointDistribution& JointDistribution::operator+=(const JointDistribution& other) {
  if (other.n_ != n_ || other.statpair_ != statpair_) {
    throw std::invalid_argument("cannot merge distributions of different (n, statpair)");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

std::uint64_t JointDistribution::count(int stat, int imaj_value) const {
  if (stat < 0 || stat >= width_ || imaj_value < 0 || imaj_value >= width_) return 0;
  return counts_[static_cast<std::size_t>(stat) * static_cast<std::size_t>(width_) +
                 static_cast<std::size_t>(imaj_value)];
}

std::uint64_t JointDistribution::total() const {
  std::uint64_t t = 0;
  for (auto c : counts_) t += c;
  return t;
}

ResidueMatrix JointDistribution::fold(int k, int l) const {
  if (k < 1 || l < 1) throw std::invalid_argument("moduli must be positive");
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(k) * static_cast<std::size_t>(l), 0);
  for (int s = 0; s < width_; ++s) {
    for (int t = 0; t < width_; ++t) {
      acc[static_cast<std::size_t>(s % k) * static_cast<std::size_t>(l) + static_cast<std::size_t>(t % l)] +=
          counts_[static_cast<std::size_t>(s) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(t)];
    }
  }
  ResidueMatrix m(n_, k, l, statpair_);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < l; ++j) {
      m.at(i, j) = acc[static_cast<std::size_t>(i) * static_cast<std::size_t>(l) + static_cast<std::size_t>(j)];
    }
  }
  return m;
}

JointDistribution joint_distribution(int n, StatPair statpair, const ForEach& for_each, int limit) {
  check_enumeration_limit(n, limit);
  // top-level subtrees of depth 2 are natural units; cap keeps merging cheap
  const std::size_t units = n <= 7 ? 1 : static_cast<std::size_t>(n * (n - 1));
  const auto ranges = partition_ranks(n, units);
  std::vector<JointDistribution> partial(ranges.size(), JointDistribution(n, statpair));
  for_each(ranges.size(), [&](std::size_t u) { partial[u].accumulate(ranges[u]); });
  JointDistribution out(n, statpair);
  for (const auto& p : partial) out += p;
  return out;
}

ResidueMatrix count_matrix(int n, int k, int l, StatPair statpair, const ForEach& for_each, int limit) {
  if (k < 1 || l < 1) throw std::invalid_argument("moduli must be positive");
  return joint_distribution(n, statpair, for_each, limit).fold(k, l);
}

std::vector<BigInt> marginal_row(const ResidueMatrix& m) {
  std::vector<BigInt> out(static_cast<std::size_t>(m.k()), BigInt(0));
  for (int i = 0; i < m.k(); ++i) {
    for (int j = 0; j < m.l(); ++j) out[static_cast<std::size_t>(i)] += m.at(i, j);
  }
  return out;
}

std::vector<BigInt> marginal_column(const ResidueMatrix& m) {
  return marginal_row(m.transposed());
}

bool transpose_check(int n, int k, int l, const ForEach& for_each) {
  const auto dist = joint_distribution(n, StatPair::MajImaj, for_each);
  return dist.fold(k, l).same_counts(dist.fold(l, k).transposed());
}

std::vector<std::vector<Grid>> block_decompose(const ResidueMatrix& m, int d) {
  if (d < 1 || m.k() % d != 0 || m.l() % d != 0) {
    throw std::invalid_argument("block size " + std::to_string(d) + " must divide k = " +
                                std::to_string(m.k()) + " and l = " + std::to_string(m.l()));
  }
  const int rows = m.k() / d;
  const int cols = m.l() / d;
  std::vector<std::vector<Grid>> out(static_cast<std::size_t>(rows),
                                     std::vector<Grid>(static_cast<std::size_t>(cols)));
  for (int r = 0; r < rows; ++r) {
    for (int s = 0; s < cols; ++s) {
      Grid& g = out[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
      g.assign(static_cast<std::size_t>(d), std::vector<BigInt>(static_cast<std::size_t>(d)));
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
          g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = m.at(r * d + a, s * d + b);
        }
      }
    }
  }
  return out;
}

ResidueMatrix residue_class_sums(const ResidueMatrix& m, int d) {
  if (d < 1 || m.k() % d != 0 || m.l() % d != 0) {
    throw std::invalid_argument("residue class size must divide both moduli");
  }
  ResidueMatrix out(m.n(), d, d, m.statpair());
  for (int i = 0; i < m.k(); ++i) {
    for (int j = 0; j < m.l(); ++j) out.at(i % d, j % d) += m.at(i, j);
  }
  return out;
}

std::vector<std::vector<Permutation>> witness_sets(int n, int k, int l, StatPair statpair) {
  if (n < 0 || n > kWitnessLimit) {
    throw SizeLimitError("witness sets are retained only for n <= " + std::to_string(kWitnessLimit));
  }
  if (k < 1 || l < 1) throw std::invalid_argument("moduli must be positive");
  std::vector<std::vector<Permutation>> sets(static_cast<std::size_t>(k) * static_cast<std::size_t>(l));
  for (const auto& p : all_permutations(n)) {
    const int s = statpair == StatPair::MajImaj ? maj(p) : inv(p);
    sets[static_cast<std::size_t>(s % k) * static_cast<std::size_t>(l) + static_cast<std::size_t>(imaj(p) % l)]
        .push_back(p);
  }
  return sets;  // lexicographic stream order is already sorted
}

// ---------------------------------------------------------------------------
// Serialization

std::string to_json(const ResidueMatrix& m) {
  nlohmann::ordered_json j;
  j["n"] = m.n();
  j["k"] = m.k();
  j["l"] = m.l();
  j["statpair"] = std::string(to_string(m.statpair()));
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.k(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int c = 0; c < m.l(); ++c) row.push_back(to_decimal(m.at(i, c)));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

ResidueMatrix matrix_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  ResidueMatrix m(j.at("n").get<int>(), j.at("k").get<int>(), j.at("l").get<int>(),
                  parse_statpair(j.at("statpair").get<std::string>()));
  const auto& rows = j.at("rows");
  if (rows.size() != static_cast<std::size_t>(m.k())) throw std::invalid_argument("row count does not match k");
  for (int i = 0; i < m.k(); ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (row.size() != static_cast<std::size_t>(m.l())) throw std::invalid_argument("row length does not match l");
    for (int c = 0; c < m.l(); ++c) m.at(i, c) = BigInt(row.at(static_cast<std::size_t>(c)).get<std::string>());
  }
  return m;
}

std::string to_csv(const ResidueMatrix& m) {
  std::ostringstream out;
  out << "i";
  for (int j = 0; j < m.l(); ++j) out << ",j=" << j;
  out << '\n';
  for (int i = 0; i < m.k(); ++i) {
    out << i;
    for (int j = 0; j < m.l(); ++j) out << ',' << m.at(i, j);
    out << '\n';
  }
  return out.str();
}

std::string to_table(const ResidueMatrix& m) {
  std::size_t width = 3;
  for (int i = 0; i < m.k(); ++i) {
    for (int j = 0; j < m.l(); ++j) width = std::max(width, m.at(i, j).str().size());
  }
  const auto w = static_cast<int>(width);
  std::ostringstream out;
  out << "m_" << m.n() << "^{" << m.k() << "," << m.l() << "} (" << to_string(m.statpair()) << ")\n";
  out << std::setw(4) << "i\\j";
  for (int j = 0; j < m.l(); ++j) out << ' ' << std::setw(w) << j;
  out << '\n';
  for (int i = 0; i < m.k(); ++i) {
    out << std::setw(4) << i;
    for (int j = 0; j < m.l(); ++j) out << ' ' << std::setw(w) << m.at(i, j).str();
    out << '\n';
  }
  return out.str();
}

}  // namespace majperm
