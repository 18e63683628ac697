#include <set>

#include "doctest.h"
#include "majperm/bijections.hpp"
#include "majperm/shuffles.hpp"
#include "oracle.hpp"

using namespace majperm;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<std::string> strings(const std::vector<Permutation>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

// Brute-force shuffle: choose the positions of the first word.
std::set<std::vector<int>> oracle_shuffle(const std::vector<int>& a, const std::vector<int>& b) {
  std::set<std::vector<int>> out;
  const std::size_t n = a.size() + b.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != a.size()) continue;
    std::vector<int> w;
    std::size_t ia = 0, ib = 0;
    for (std::size_t pos = 0; pos < n; ++pos) w.push_back((mask >> pos) & 1u ? a[ia++] : b[ib++]);
    out.insert(w);
  }
  return out;
}

}  // namespace

TEST_CASE("plain shuffle examples") {
  const std::vector<int> a{1, 2}, b{4, 3};
  const auto s = shuffle(a, b);
  CHECK(s == std::vector<std::vector<int>>{{1, 2, 4, 3}, {1, 4, 2, 3}, {1, 4, 3, 2}, {4, 1, 2, 3}, {4, 1, 3, 2},
                                           {4, 3, 1, 2}});
  const std::vector<int> none;
  CHECK(shuffle(a, none) == std::vector<std::vector<int>>{{1, 2}});
  const std::vector<int> clash{2, 5};
  CHECK_THROWS_AS(shuffle(a, clash), std::invalid_argument);

  CHECK(strings(shuffle_plus(P("12"), P("21"))) ==
        std::vector<std::string>{"1243", "1423", "1432", "4123", "4132", "4312"});
  CHECK(shuffle_plus(Permutation(), P("231")) == std::vector<Permutation>{P("231")});
}

TEST_CASE("shuffle agrees with brute force") {
  const std::vector<int> a{3, 1, 5}, b{2, 6, 4, 7};
  const auto got = shuffle(a, b);
  const auto want = oracle_shuffle(a, b);
  CHECK(got.size() == want.size());
  CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == want);
}

TEST_CASE("index-set shuffles") {
  const std::vector<Permutation> M{P("12"), P("21")}, N{P("231"), P("321")};
  CHECK(strings(shuffle_at(M, N, IndexSet({2, 5}, 5))) ==
        std::vector<std::string>{"41532", "42531", "51432", "52431"});
  const std::vector<Permutation> pi{P("21")}, sigma{P("312")};
  CHECK(shuffle_at(pi, sigma, IndexSet({1, 2}, 5)) == std::vector<Permutation>{P("21534")});

  CHECK(wt_index(IndexSet({2, 5}, 5), 2) == 4);
  CHECK(wt_index(IndexSet({1, 2, 3}, 6), 3) == 0);
  CHECK(wt_index(IndexSet({4, 5}, 5), 2) == 6);
  CHECK(IndexSet::all(5, 2).size() == 10);
  CHECK_THROWS_AS(IndexSet({3, 2}, 5), std::invalid_argument);
  CHECK_THROWS_AS(IndexSet({2, 6}, 5), std::invalid_argument);
}

TEST_CASE("gap-composition shuffles") {
  CHECK(strings(shuffle_gamma(P("132"), P("321"), GapComposition({1, 2}))) ==
        std::vector<std::string>{"136254", "613524", "651342"});
  CHECK(wt_gamma(GapComposition({1, 2}), 3) == 1);
  CHECK(wt_gamma(GapComposition({1, 1, 1}), 4) == 0);
  CHECK(wt_gamma(GapComposition({3}), 2) == 2);
  CHECK(GapComposition({1, 3}).span() == 4);
  CHECK(GapComposition({1, 3}).all_odd());
  CHECK_FALSE(GapComposition({1, 2}).all_even());
  // compositions of l - 1 = 2 parts with span <= 4: (1,1) (1,2) (2,1) (1,3) (2,2) (3,1)
  CHECK(GapComposition::all(3, 4).size() == 6);
}

TEST_CASE("cross statistics") {
  CHECK(inv_between(P("41532"), 2) == 4);
  CHECK(inv_between(P("12534"), 2) == 0);
  CHECK(inv_between(P("34512"), 2) == 6);
  // 3 (= l + 1) sits left of 2, so the crossing pair (2, 3) adds 2
  CHECK(imaj_between(P("41532"), 2) == 2);
  CHECK(imaj_between(P("12534"), 2) == 0);
}

TEST_CASE("weights are constant on shuffle classes") {
  for (int n = 2; n <= 7; ++n) {
    for (int l = 1; l < n; ++l) {
      const auto pis = all_permutations(l);
      const auto sigmas = all_permutations(n - l);
      for (const auto& index : IndexSet::all(n, l)) {
        for (const auto& tau : shuffle_at(pis, sigmas, index)) {
          REQUIRE(inv_between(tau, l) == wt_index(index, l));
        }
      }
    }
  }
  for (int l = 2; l <= 4; ++l) {
    for (int m = 0; m <= 3; ++m) {
      for (const auto& gamma : GapComposition::all(l, l + m - 1)) {
        for (const auto& pi : all_permutations(l)) {
          for (const auto& sigma : all_permutations(m)) {
            for (const auto& tau : shuffle_gamma(pi, sigma, gamma)) {
              const int cross = inv_between(tau, l);
              REQUIRE((cross - wt_gamma(gamma, l)) % l == 0);
              if (tau[1] == pi[1]) REQUIRE(cross == wt_gamma(gamma, l));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("additivity of inv and imaj over a threshold split") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& tau : PermutationStream(n)) {
      for (int l = 0; l <= n; ++l) {
        const auto s = split(tau, l);
        const int cross = imaj_between(tau, l);
        REQUIRE(inv(tau) == inv(s.pi) + inv(s.sigma) + inv_between(tau, l));
        REQUIRE((cross == 0 || cross == l));
        // sigma is stored normalized, so its own imaj is off by a multiple of l
        REQUIRE((imaj(tau) - imaj(s.pi) - imaj(s.sigma) - cross) % std::max(l, 1) == 0);
        std::vector<int> raw;
        for (int v : tau.word()) {
          if (v > l) raw.push_back(v);
        }
        REQUIRE(imaj(tau) == imaj(s.pi) + imaj_of(raw) + cross);
      }
    }
  }
}

TEST_CASE("disjoint-union decompositions") {
  for (const auto& [n, k, l] : {std::tuple{4, 3, 2}, std::tuple{5, 5, 5}, std::tuple{6, 3, 3}, std::tuple{3, 2, 3}}) {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < l; ++j) {
        const auto r = verify_grind(n, k, l, i, j);
        CAPTURE(r.witness.value_or(""));
        REQUIRE(r.passed());
      }
    }
  }
  for (const auto& [n, l] : {std::pair{4, 2}, std::pair{6, 3}, std::pair{3, 3}}) {
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) {
        const auto r = verify_ind(n, l, i, j);
        CAPTURE(r.witness.value_or(""));
        REQUIRE(r.passed());
      }
    }
  }
}
