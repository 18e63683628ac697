#include <set>

#include "doctest.h"
#include "majperm/bijections.hpp"
#include "majperm/shuffles.hpp"
#include "oracle.hpp"

using namespace majperm;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

TEST_CASE("split examples") {
  const auto s = split(P("6371452"), 4);
  CHECK(s.index == std::vector<int>{2, 4, 5, 7});
  CHECK(s.pi == P("3142"));
  CHECK(s.sigma.to_string() == "231");  // 675 normalized by subtracting 4

  const auto whole = split(P("123"), 3);
  CHECK(whole.pi == P("123"));
  CHECK(whole.sigma.size() == 0);

  // 2 and 1 occupy the first two positions
  const auto t = split(P("2143"), 2);
  CHECK(t.index == std::vector<int>{1, 2});
  CHECK(t.pi == P("21"));
  CHECK(t.sigma == P("21"));

  CHECK_THROWS_AS(split(P("123"), 4), std::invalid_argument);
}

TEST_CASE("split and reassemble are inverse") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& tau : PermutationStream(n)) {
      for (int l = 0; l <= n; ++l) {
        const auto s = split(tau, l);
        REQUIRE(reassemble(s.pi, s.sigma, s.index) == tau);
      }
    }
  }
}

TEST_CASE("f_l examples") {
  CHECK(f_l(P("6371452"), 4) == P("3617425"));
  CHECK(f_l(P("21"), 1) == P("12"));
  CHECK(f_l(P("12"), 1) == P("21"));
  CHECK(f_l_inverse(P("3617425"), 4) == P("6371452"));
  CHECK(f_l_inverse(P("12"), 1) == P("21"));
  CHECK_THROWS_AS(f_l(P("123"), 3), std::invalid_argument);
  CHECK_THROWS_AS(f_l(P("123"), 0), std::invalid_argument);
}

TEST_CASE("f_l applied n times is the identity map") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& tau : PermutationStream(n)) {
      for (int l = 1; l < n; ++l) {
        Permutation t = tau;
        for (int r = 0; r < n; ++r) t = f_l(t, l);
        REQUIRE(t == tau);
      }
    }
  }
}

TEST_CASE("f_l shifts classes and is a bijection") {
  for (int n = 2; n <= 7; ++n) {
    for (int l = 1; l < n; ++l) {
      std::set<Permutation> images;
      for (const auto& tau : PermutationStream(n)) {
        const auto image = f_l(tau, l);
        CAPTURE(tau.to_string());
        CAPTURE(l);
        REQUIRE(mod(inv(image) - inv(tau), n) == l % n);
        REQUIRE(mod(imaj(image) - imaj(tau), l) == 0);
        REQUIRE(f_l_inverse(image, l) == tau);
        // pi and sigma keep their relative order
        REQUIRE(split(image, l).pi == split(tau, l).pi);
        REQUIRE(split(image, l).sigma == split(tau, l).sigma);
        images.insert(image);
      }
      REQUIRE(images.size() == oracle::factorial(n));
    }
  }
}

TEST_CASE("g examples") {
  CHECK(g_map(P("41532"), 1, 2) == P("42531"));
  CHECK(g_map_inverse(P("42531"), 1, 2) == P("41532"));
  // n = kd: g is f_d on the whole word
  for (const auto& tau : PermutationStream(6)) {
    REQUIRE(g_map(tau, 2, 3) == f_l(tau, 2));
  }
  CHECK_THROWS_AS(g_map(P("1234"), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g_map(P("1234"), 2, 3), std::invalid_argument);
}

TEST_CASE("g shifts classes and is a bijection") {
  for (int n = 2; n <= 7; ++n) {
    for (int d = 1; d <= 3; ++d) {
      for (int k = 2; k * d <= n; ++k) {
        std::set<Permutation> images;
        for (const auto& tau : PermutationStream(n)) {
          const auto image = g_map(tau, d, k);
          REQUIRE(mod(inv(image) - inv(tau), k * d) == d % (k * d));
          REQUIRE(mod(imaj(image) - imaj(tau), d) == 0);
          REQUIRE(g_map_inverse(image, d, k) == tau);
          images.insert(image);
        }
        REQUIRE(images.size() == oracle::factorial(n));
      }
    }
  }
}

TEST_CASE("prefix-max orbit examples") {
  CHECK(prefix_max_orbit(P("231"), 2) == std::vector<Permutation>{P("321"), P("231")});
  CHECK(prefix_max_orbit(P("123"), 1) == std::vector<Permutation>{P("123")});
  CHECK_THROWS_AS(prefix_max_orbit(P("123"), 4), std::invalid_argument);
}

TEST_CASE("prefix-max orbits partition S_n and cover every inv residue") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::set<Permutation> covered;
      std::size_t orbits = 0;
      for (const auto& p : PermutationStream(n)) {
        if (covered.count(p)) continue;
        const auto orbit = prefix_max_orbit(p, k);
        REQUIRE(orbit.size() == static_cast<std::size_t>(k));
        std::set<int> residues;
        for (const auto& q : orbit) {
          residues.insert(inv(q) % k);
          REQUIRE(covered.insert(q).second);
        }
        REQUIRE(residues.size() == static_cast<std::size_t>(k));
        ++orbits;
      }
      REQUIRE(orbits * static_cast<std::size_t>(k) == oracle::factorial(n));
    }
  }
}
