#include "majperm/shuffles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "majperm/bijections.hpp"
#include "majperm/residue_matrix.hpp"

namespace majperm {

IndexSet::IndexSet(std::vector<int> positions, int n) : positions_(std::move(positions)), n_(n) {
  int prev = 0;
  for (int p : positions_) {
    if (p <= prev || p > n) throw std::invalid_argument("index set must be strictly increasing within [n]");
    prev = p;
  }
}

std::vector<IndexSet> IndexSet::all(int n, int l) {
  if (l < 0 || l > n) throw std::invalid_argument("index set size must lie in 0..n");
  std::vector<IndexSet> out;
  std::vector<int> cur(static_cast<std::size_t>(l));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(cur, n);
    int t = l - 1;
    while (t >= 0 && cur[static_cast<std::size_t>(t)] == n - l + t + 1) --t;
    if (t < 0) break;
    ++cur[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < l; ++u) cur[static_cast<std::size_t>(u)] = cur[static_cast<std::size_t>(u - 1)] + 1;
  }
  return out;
}

GapComposition::GapComposition(std::vector<int> gaps) : gaps_(std::move(gaps)) {
  for (int g : gaps_) {
    if (g < 1) throw std::invalid_argument("composition parts must be >= 1");
  }
}

std::vector<GapComposition> GapComposition::all(int l, int max_span) {
  std::vector<GapComposition> out;
  if (l < 1) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (static_cast<int>(cur.size()) == l - 1) {
      out.emplace_back(cur);
      return;
    }
    const int parts_left = l - 1 - static_cast<int>(cur.size());
    for (int g = 1; g <= remaining - (parts_left - 1); ++g) {
      cur.push_back(g);
      self(self, remaining - g);
      cur.pop_back();
    }
  };
  rec(rec, max_span);
  return out;
}

int GapComposition::span() const { return std::accumulate(gaps_.begin(), gaps_.end(), 0); }

bool GapComposition::all_odd() const {
  return std::all_of(gaps_.begin(), gaps_.end(), [](int g) { return g % 2 == 1; });
}

bool GapComposition::all_even() const {
  return std::all_of(gaps_.begin(), gaps_.end(), [](int g) { return g % 2 == 0; });
}

std::vector<std::vector<int>> shuffle(std::span<const int> pi, std::span<const int> sigma) {
  std::set<int> values(pi.begin(), pi.end());
  for (int v : sigma) {
    if (!values.insert(v).second) throw std::invalid_argument("shuffle arguments share the value " + std::to_string(v));
  }
  const int n = static_cast<int>(pi.size() + sigma.size());
  std::vector<std::vector<int>> out;
  for (const auto& index : IndexSet::all(n, static_cast<int>(pi.size()))) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::size_t a = 0, b = 0, next = 0;
    for (int pos = 1; pos <= n; ++pos) {
      if (next < index.positions().size() && index.positions()[next] == pos) {
        w[static_cast<std::size_t>(pos - 1)] = pi[a++];
        ++next;
      } else {
        w[static_cast<std::size_t>(pos - 1)] = sigma[b++];
      }
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> shuffle_plus(const Permutation& pi, const Permutation& sigma) {
  std::vector<int> shifted(sigma.word().begin(), sigma.word().end());
  for (auto& v : shifted) v += pi.size();
  std::vector<Permutation> out;
  for (auto& w : shuffle(pi.word(), shifted)) out.emplace_back(std::move(w));
  return out;
}

std::vector<Permutation> shuffle_at(std::span<const Permutation> M, std::span<const Permutation> N,
                                    const IndexSet& index) {
  std::vector<Permutation> out;
  for (const auto& pi : M) {
    for (const auto& sigma : N) {
      if (pi.size() != index.size() || pi.size() + sigma.size() != index.n()) {
        throw std::invalid_argument("shuffle_at: sizes do not match the index set");
      }
      out.push_back(reassemble(pi, sigma, index.positions()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int wt_index(const IndexSet& index, int l) {
  if (index.size() != l) throw std::invalid_argument("wt I needs |I| = l");
  const auto& pos = index.positions();
  return std::accumulate(pos.begin(), pos.end(), 0) - l * (l + 1) / 2;
}

std::vector<Permutation> shuffle_gamma(const Permutation& pi, const Permutation& sigma,
                                       const GapComposition& gamma) {
  const int l = pi.size();
  const int n = l + sigma.size();
  if (l == 0) {
    if (gamma.parts() != 0) throw std::invalid_argument("empty pi takes the empty composition");
    return {reassemble(pi, sigma, {})};
  }
  if (gamma.parts() != l - 1) throw std::invalid_argument("composition needs |pi| - 1 parts");
  if (gamma.span() > n - 1) throw std::invalid_argument("composition span exceeds n - 1");
  std::vector<Permutation> out;
  for (int first = 1; first + gamma.span() <= n; ++first) {
    std::vector<int> index{first};
    for (int g : gamma.gaps()) index.push_back(index.back() + g);
    out.push_back(reassemble(pi, sigma, index));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int wt_gamma(const GapComposition& gamma, int l) {
  if (gamma.parts() != std::max(l - 1, 0)) throw std::invalid_argument("composition needs l - 1 parts");
  int total = 0;
  for (int t = 1; t <= gamma.parts(); ++t) total += (gamma.gaps()[static_cast<std::size_t>(t - 1)] - 1) * (l - t);
  return total;
}

int inv_between(const Permutation& tau, int l) {
  int large_seen = 0;
  int total = 0;
  for (int v : tau.word()) {
    if (v > l) {
      ++large_seen;
    } else {
      total += large_seen;
    }
  }
  return total;
}

int imaj_between(const Permutation& tau, int l) {
  const int n = tau.size();
  std::vector<int> where(static_cast<std::size_t>(n + 1));
  for (int pos = 1; pos <= n; ++pos) where[static_cast<std::size_t>(tau[pos])] = pos;
  int total = 0;
  for (int v = 1; v < n; ++v) {
    const bool crossing = (v <= l) != (v + 1 <= l);
    if (crossing && where[static_cast<std::size_t>(v + 1)] < where[static_cast<std::size_t>(v)]) total += v;
  }
  return total;
}

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Sorts `pieces`, then checks pairwise disjointness and equality with target.
void compare_union(ReportBuilder& report, std::vector<Permutation> pieces, const std::vector<Permutation>& target,
                   int i, int j) {
  const auto claimed = pieces.size();
  std::sort(pieces.begin(), pieces.end());
  const auto dup = std::adjacent_find(pieces.begin(), pieces.end());
  if (!report.expect(dup == pieces.end(), "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) +
                                              "): union not disjoint, " + (dup == pieces.end() ? "" : dup->to_string()) +
                                              " appears twice")) {
    return;
  }
  report.expect(pieces == target, "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + "): union has " +
                                      std::to_string(claimed) + " members, class has " +
                                      std::to_string(target.size()));
}

}  // namespace

VerificationReport verify_grind(int n, int k, int l, int i, int j) {
  if (l < 1 || n < l || k < 1) throw std::invalid_argument("verify_grind needs 1 <= l <= n and k >= 1");
  ReportBuilder report("lem-grind", {{"n", n}, {"k", k}, {"l", l}, {"i", i}, {"j", j}});
  i = mod(i, k);
  j = mod(j, l);
  const auto whole = witness_sets(n, k, l, StatPair::InvImaj);
  const auto left = witness_sets(l, k, l, StatPair::InvImaj);
  const auto right = witness_sets(n - l, k, l, StatPair::InvImaj);
  auto cell = [l](const auto& sets, int a, int b) -> const std::vector<Permutation>& {
    return sets[static_cast<std::size_t>(a) * static_cast<std::size_t>(l) + static_cast<std::size_t>(b)];
  };

  std::vector<Permutation> pieces;
  for (const auto& index : IndexSet::all(n, l)) {
    const int w = wt_index(index, l);
    for (int i1 = 0; i1 < k; ++i1) {
      const int i2 = mod(i - i1 - w, k);
      for (int j1 = 0; j1 < l; ++j1) {
        const int j2 = mod(j - j1, l);
        auto part = shuffle_at(cell(left, i1, j1), cell(right, i2, j2), index);
        pieces.insert(pieces.end(), part.begin(), part.end());
      }
    }
  }
  compare_union(report, std::move(pieces), cell(whole, i, j), i, j);
  return report.finish();
}

VerificationReport verify_ind(int n, int l, int i, int j) {
  if (l < 1 || n < l) throw std::invalid_argument("verify_ind needs 1 <= l <= n");
  ReportBuilder report("lem-ind", {{"n", n}, {"l", l}, {"i", i}, {"j", j}});
  i = mod(i, l);
  j = mod(j, l);
  const auto whole = witness_sets(n, l, l, StatPair::InvImaj);
  const auto left = witness_sets(l, l, l, StatPair::InvImaj);
  const auto right = witness_sets(n - l, l, l, StatPair::InvImaj);
  auto cell = [l](const auto& sets, int a, int b) -> const std::vector<Permutation>& {
    return sets[static_cast<std::size_t>(a) * static_cast<std::size_t>(l) + static_cast<std::size_t>(b)];
  };

  std::vector<Permutation> pieces;
  for (const auto& gamma : GapComposition::all(l, n - 1)) {
    const int w = wt_gamma(gamma, l);
    for (int i1 = 0; i1 < l; ++i1) {
      const int i2 = mod(i - i1 - w, l);
      for (int j1 = 0; j1 < l; ++j1) {
        const int j2 = mod(j - j1, l);
        for (const auto& pi : cell(left, i1, j1)) {
          for (const auto& sigma : cell(right, i2, j2)) {
            auto part = shuffle_gamma(pi, sigma, gamma);
            pieces.insert(pieces.end(), part.begin(), part.end());
          }
        }
      }
    }
  }
  compare_union(report, std::move(pieces), cell(whole, i, j), i, j);
  return report.finish();
}

}  // namespace majperm
