#include "doctest.h"
#include "majperm/closed_forms.hpp"
#include "majperm/syt.hpp"
#include "oracle.hpp"

using namespace majperm;

TEST_CASE("partitions") {
  CHECK(partitions(1) == std::vector<Partition>{Partition({1})});
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(9).size() == 30);
  CHECK(partitions(12).size() == 77);
  CHECK(partitions(3) == std::vector<Partition>{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})});
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
}

TEST_CASE("tableau enumeration") {
  CHECK(syt_enumerate(Partition({5})).size() == 1);
  CHECK(syt_enumerate(Partition({2, 2})).size() == 2);
  CHECK(syt_enumerate(Partition({3, 2})).size() == 5);
  CHECK(Partition({3, 2}).hook_length_count() == 5);
  for (const auto& t : syt_enumerate(Partition({3, 2, 1}))) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
        if (c > 0) REQUIRE(t.rows[r][c - 1] < t.rows[r][c]);
        if (r > 0) REQUIRE(t.rows[r - 1][c] < t.rows[r][c]);
      }
    }
  }
  for (int n = 1; n <= 10; ++n) {
    std::uint64_t squares = 0;
    for (const auto& shape : partitions(n)) squares += shape.hook_length_count() * shape.hook_length_count();
    REQUIRE(squares == oracle::factorial(n));
  }
}

TEST_CASE("tableau major index") {
  CHECK(maj_tableau(Tableau{Partition({4}), {{1, 2, 3, 4}}}) == 0);
  CHECK(maj_tableau(Tableau{Partition({1, 1, 1, 1}), {{1}, {2}, {3}, {4}}}) == 6);
  CHECK(maj_tableau(Tableau{Partition({2, 1}), {{1, 3}, {2}}}) == 1);
  for (int m = 1; m <= 4; ++m) CHECK(f_multiplicity(Partition({4}), m, 0) == 1);
  CHECK(f_multiplicity(Partition({4}), 3, 1) == 0);
  CHECK(f_multiplicity(Partition({2, 1}), 3, 0) == 0);
  CHECK(f_multiplicity(Partition({2, 1}), 3, 1) == 1);
  CHECK(f_multiplicity(Partition({2, 1}), 3, 2) == 1);
  std::uint64_t total = 0;
  for (int i = 0; i < 4; ++i) total += f_multiplicity(Partition({3, 2, 1}), 4, i);
  CHECK(total == Partition({3, 2, 1}).hook_length_count());
}

TEST_CASE("tableau-pair count equals enumeration") {
  CHECK(joint_matrix_syt(3, 3, 3) == count_matrix(3, 3, 3));
  CHECK(joint_matrix_syt(4, 4, 4) == count_matrix(4, 4, 4));
  const auto m = joint_matrix_syt(5, 3, 2);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) CHECK(m.at(i, j) == 20);
  }
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int l = 1; l <= n; ++l) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(l);
        REQUIRE(joint_matrix_syt(n, k, l) == count_matrix(n, k, l));
      }
    }
  }
  for (int n = 9; n <= 11; ++n) CHECK(joint_matrix_syt(n, n, n, threaded(3)) == mnnn_matrix(n));
}
