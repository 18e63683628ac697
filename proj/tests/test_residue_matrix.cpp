#include "doctest.h"
#include "majperm/residue_matrix.hpp"
#include "oracle.hpp"

using namespace majperm;

namespace {

bool matches_oracle(const ResidueMatrix& m, const std::vector<std::vector<std::uint64_t>>& want) {
  for (int i = 0; i < m.k(); ++i) {
    for (int j = 0; j < m.l(); ++j) {
      if (m.at(i, j) != want[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) return false;
    }
  }
  return true;
}

ResidueMatrix from_rows(int n, const std::vector<std::vector<int>>& rows) {
  ResidueMatrix m(n, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.k(); ++i) {
    for (int j = 0; j < m.l(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

}  // namespace

TEST_CASE("count_matrix examples") {
  CHECK(count_matrix(3, 3, 3) == from_rows(3, {{2, 0, 0}, {0, 1, 1}, {0, 1, 1}}));
  CHECK(count_matrix(3, 3, 2) == from_rows(3, {{1, 1}, {1, 1}, {1, 1}}));

  const auto one = count_matrix(1, 5, 7);
  CHECK(one.at(0, 0) == 1);
  CHECK(one.total() == 1);
}

TEST_CASE("count_matrix equals brute force for n <= 7, both statistic pairs") {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      for (int l = 1; l <= n + 1; ++l) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(l);
        REQUIRE(matches_oracle(count_matrix(n, k, l), oracle::matrix(n, k, l)));
        REQUIRE(matches_oracle(count_matrix(n, k, l, StatPair::InvImaj), oracle::matrix(n, k, l, true)));
      }
    }
  }
}

TEST_CASE("joint distribution does not depend on the work split") {
  for (int n : {5, 8, 9}) {
    const auto seq = joint_distribution(n, StatPair::MajImaj);
    const auto par = joint_distribution(n, StatPair::MajImaj, threaded(4));
    JointDistribution pieces(n, StatPair::MajImaj);
    for (const auto& range : partition_ranks(n, 13)) pieces.accumulate(range);
    CHECK(seq.total() == oracle::factorial(n));
    for (int s = 0; s <= seq.max_stat(); ++s) {
      for (int t = 0; t <= seq.max_stat(); ++t) {
        REQUIRE(seq.count(s, t) == par.count(s, t));
        REQUIRE(seq.count(s, t) == pieces.count(s, t));
      }
    }
  }
}

TEST_CASE("matrix invariants") {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= 8; ++k) {
      for (int l = 1; l <= 8; ++l) {
        const auto m = count_matrix(n, k, l);
        REQUIRE(m.total() == oracle::factorial(n));
        REQUIRE(m.same_counts(count_matrix(n, l, k).transposed()));
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < l; ++j) REQUIRE(m.at(i, j) >= 0);
        }
      }
    }
  }
  CHECK(transpose_check(4, 2, 3));
  CHECK(transpose_check(1, 1, 1));
  CHECK(count_matrix(5, 5, 5) == count_matrix(5, 5, 5).transposed());
}

TEST_CASE("marginals") {
  auto row = [](int n, int k) {
    std::vector<long long> out;
    for (const auto& v : marginal_row(count_matrix(n, k, 1))) out.push_back(static_cast<long long>(v));
    return out;
  };
  CHECK(row(3, 3) == std::vector<long long>{2, 2, 2});
  CHECK(row(4, 2) == std::vector<long long>{12, 12});
  CHECK(row(3, 5) == std::vector<long long>{1, 2, 2, 1, 0});
  const auto m = count_matrix(5, 3, 4);
  CHECK(marginal_column(m) == marginal_row(m.transposed()));
}

TEST_CASE("block decomposition is grouping by residue class") {
  const auto m63 = count_matrix(6, 6, 3);
  const auto m33 = count_matrix(6, 3, 3);
  const auto blocks = block_decompose(m63, 3);
  REQUIRE(blocks.size() == 2);
  REQUIRE(blocks[0].size() == 1);
  for (std::size_t r = 0; r < 2; ++r) {
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        CHECK(blocks[r][0][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] * 2 == m33.at(a, b));
        CHECK(blocks[r][0][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ==
              m63.at(static_cast<int>(r) * 3 + a, b));
      }
    }
  }
  CHECK(residue_class_sums(m63, 3).same_counts(m33));

  const auto m4 = count_matrix(4, 2, 2);
  const auto whole = block_decompose(m4, 2);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0][0] == m4.rows());
  CHECK_THROWS_AS(block_decompose(m63, 4), std::invalid_argument);
}

TEST_CASE("witness sets partition S_n") {
  const auto sets = witness_sets(4, 3, 2, StatPair::InvImaj);
  REQUIRE(sets.size() == 6);
  std::size_t total = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto& s = sets[static_cast<std::size_t>(i * 2 + j)];
      total += s.size();
      CHECK(std::is_sorted(s.begin(), s.end()));
      for (const auto& p : s) {
        CHECK(inv(p) % 3 == i);
        CHECK(imaj(p) % 2 == j);
      }
    }
  }
  CHECK(total == 24);
  const auto empty = witness_sets(0, 2, 2, StatPair::MajImaj);
  CHECK(empty[0].size() == 1);
  CHECK_THROWS_AS(witness_sets(kWitnessLimit + 1, 2, 2, StatPair::MajImaj), SizeLimitError);
}

TEST_CASE("serialization") {
  const auto m = count_matrix(3, 3, 3);
  CHECK(to_json(m) == R"({"n":3,"k":3,"l":3,"statpair":"MAJ_IMAJ","rows":[["2","0","0"],["0","1","1"],["0","1","1"]]})");
  CHECK(matrix_from_json(to_json(m)) == m);
  const auto inv_m = count_matrix(4, 2, 3, StatPair::InvImaj);
  CHECK(matrix_from_json(to_json(inv_m)) == inv_m);
  CHECK(to_csv(count_matrix(3, 3, 2)) == "i,j=0,j=1\n0,1,1\n1,1,1\n2,1,1\n");
  CHECK(parse_statpair("inv-imaj") == StatPair::InvImaj);
  CHECK(parse_statpair("MAJ_IMAJ") == StatPair::MajImaj);
  CHECK_THROWS_AS(parse_statpair("des"), std::invalid_argument);
}
