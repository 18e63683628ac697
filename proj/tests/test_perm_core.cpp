#include <map>
#include <set>

#include "doctest.h"
#include "majperm/permutation.hpp"
#include "oracle.hpp"

using namespace majperm;

TEST_CASE("statistics on the worked examples") {
  CHECK(maj(Permutation::parse("123")) == 0);
  CHECK(maj(Permutation::parse("21")) == 1);
  CHECK(maj(Permutation::parse("6371452")) == 10);

  CHECK(inv(Permutation::parse("123")) == 0);
  CHECK(inv(Permutation::parse("321")) == 3);
  CHECK(inv(Permutation::parse("4123")) == 3);

  CHECK(imaj(Permutation::parse("123")) == 0);
  CHECK(imaj(Permutation::parse("312")) == 2);
  CHECK(imaj(Permutation::parse("231")) == 1);

  CHECK(inverse(Permutation::parse("123")).to_string() == "123");
  CHECK(inverse(Permutation::parse("312")).to_string() == "231");
  // 1 sits at position 4, 2 at position 7, ...
  CHECK(inverse(Permutation::parse("6371452")).to_string() == "4725613");
  CHECK(inverse(Permutation::parse("6371452")) == Permutation(oracle::inverse({6, 3, 7, 1, 4, 5, 2})));
}

TEST_CASE("statistics agree with the brute-force definitions for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    oracle::for_each_perm(n, [&](const oracle::Word& w) {
      const Permutation p(w);
      REQUIRE(maj(p) == oracle::maj(w));
      REQUIRE(inv(p) == oracle::inv(w));
      REQUIRE(imaj(p) == oracle::imaj(w));
      REQUIRE(imaj(p) == maj(inverse(p)));
      REQUIRE(inverse(inverse(p)) == p);
    });
  }
}

TEST_CASE("parse and print") {
  CHECK(Permutation::parse("10,3,7,1,2,4,5,6,8,9").to_string() == "10,3,7,1,2,4,5,6,8,9");
  CHECK(Permutation::parse("2,1").to_string() == "21");
  CHECK(Permutation::parse("").size() == 0);
  CHECK_THROWS_AS(Permutation::parse("122"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("13"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1a"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 1}), std::invalid_argument);
}

TEST_CASE("stream yields S_n once each in lexicographic order") {
  CHECK(all_permutations(1) == std::vector<Permutation>{Permutation::parse("1")});

  const auto s3 = all_permutations(3);
  CHECK(s3.size() == 6);
  CHECK(std::set<Permutation>(s3.begin(), s3.end()).size() == 6);
  CHECK(std::is_sorted(s3.begin(), s3.end()));

  std::map<int, int> by_inv;
  for (const auto& p : PermutationStream(4)) ++by_inv[inv(p)];
  CHECK(by_inv == std::map<int, int>{{0, 1}, {1, 3}, {2, 5}, {3, 6}, {4, 5}, {5, 3}, {6, 1}});
}

TEST_CASE("rank, unrank and range partitions") {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t r = 0;
    for (const auto& p : PermutationStream(n)) {
      REQUIRE(rank(p) == r);
      REQUIRE(unrank(n, r) == p);
      ++r;
    }
    CHECK(r == factorial_u64(n));
  }
  for (std::size_t parts : {1u, 3u, 7u, 100u}) {
    const auto ranges = partition_ranks(6, parts);
    CHECK(ranges.size() == std::min<std::size_t>(parts, 720));
    std::uint64_t next = 0;
    for (const auto& range : ranges) {
      CHECK(range.first == next);
      CHECK(range.size() > 0);
      next = range.last;
    }
    CHECK(next == 720);
  }
  std::vector<Permutation> pieces;
  for (const auto& range : partition_ranks(5, 7)) {
    for (const auto& p : PermutationStream(5, range)) pieces.push_back(p);
  }
  CHECK(pieces == all_permutations(5));
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(check_enumeration_limit(15), SizeLimitError);
  CHECK_THROWS_AS(check_enumeration_limit(9, 8), SizeLimitError);
  CHECK_NOTHROW(check_enumeration_limit(8, 8));
  CHECK_THROWS_AS(PermutationStream(15), SizeLimitError);
}
