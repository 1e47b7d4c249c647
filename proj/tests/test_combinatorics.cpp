#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support/oracles.hpp"
#include "wreathgap/combinatorics.hpp"
#include "wreathgap/linalg.hpp"

using namespace wreathgap;
using combinatorics::MultiPartition;
using combinatorics::Partition;

namespace {

// Number of k-tuples of partitions with total size n.
std::uint64_t multipartition_count(int k, int n) {
  std::vector<std::uint64_t> acc(n + 1, 0);
  acc[0] = 1;
  for (int s = 0; s < k; ++s) {
    std::vector<std::uint64_t> next(n + 1, 0);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) next[a + b] += acc[a] * oracle::partition_count(b);
    acc = next;
  }
  return acc[n];
}

bool is_standard(const combinatorics::StandardTableau& t) {
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (c + 1 < t.rows[r].size() && t.rows[r][c] >= t.rows[r][c + 1]) return false;
      if (r + 1 < t.rows.size() && c < t.rows[r + 1].size() && t.rows[r][c] >= t.rows[r + 1][c]) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("partition parsing and rendering") {
  CHECK(Partition::parse("(2,1)") == Partition({2, 1}));
  CHECK(Partition({3, 1, 1}).to_string() == "(3,1,1)");
  CHECK(Partition().to_string() == "()");
  CHECK(Partition::parse("∅").empty());
  CHECK(Partition::parse("()").empty());
  CHECK(Partition({4, 2}).size() == 6);
  CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Partition({2, 0}), InvalidArgument);
  CHECK_THROWS_AS(Partition::parse("2,1"), InvalidArgument);
}

TEST_CASE("partition enumeration matches the partition function") {
  for (int m = 1; m <= 10; ++m) {
    const auto ps = combinatorics::enumerate_partitions(m);
    CHECK(ps.size() == oracle::partition_count(m));
    CHECK(ps.front() == Partition({m}));
    CHECK(ps.back() == Partition(std::vector<int>(m, 1)));
    std::set<Partition> unique(ps.begin(), ps.end());
    CHECK(unique.size() == ps.size());
    for (const auto& p : ps) CHECK(p.size() == m);
  }
  CHECK(combinatorics::enumerate_partitions(3) ==
        std::vector<Partition>{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})});
}

TEST_CASE("tableaux counts match the hook length formula") {
  for (int m = 1; m <= 7; ++m)
    for (const auto& p : combinatorics::enumerate_partitions(m)) {
      CAPTURE(p.to_string());
      const auto res = combinatorics::tableaux_and_dimension(p);
      CHECK(res.dimension == oracle::hook_dimension(p.parts()));
      CHECK(res.tableaux.size() == res.dimension);
      for (const auto& t : res.tableaux) CHECK(is_standard(t));
    }
}

TEST_CASE("last-letter order for (2,1) puts the row-reading tableau first") {
  const auto res = combinatorics::tableaux_and_dimension(Partition({2, 1}));
  REQUIRE(res.tableaux.size() == 2);
  CHECK(res.tableaux[0].rows == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(res.tableaux[1].rows == std::vector<std::vector<int>>{{1, 3}, {2}});
}

TEST_CASE("sum of squared dimensions is n!") {
  for (int m = 1; m <= 8; ++m) {
    std::uint64_t sum = 0;
    for (const auto& p : combinatorics::enumerate_partitions(m)) {
      const auto d = combinatorics::tableaux_and_dimension(p).dimension;
      sum += d * d;
    }
    CHECK(sum == combinatorics::factorial(m));
  }
}

TEST_CASE("multi-partitions") {
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= 5; ++n) CHECK(combinatorics::enumerate_multipartitions(k, n).size() == multipartition_count(k, n));
  const auto mps = combinatorics::enumerate_multipartitions(2, 2);
  REQUIRE(mps.size() == 5);
  CHECK(mps[0].to_string() == "(2)|()");
  CHECK(mps[2].to_string() == "(1)|(1)");
  CHECK(mps[4].to_string() == "()|(1,1)");
  const auto mp = MultiPartition::parse("(2,1)|()|(1)");
  CHECK(mp.order() == 4);
  CHECK(mp.support() == std::vector<std::size_t>{0, 2});
  CHECK(MultiPartition::parse(mp.to_string()) == mp);
  CHECK_THROWS_AS(MultiPartition::parse("(2,1)|(x)"), InvalidArgument);
}

TEST_CASE("factorial") {
  CHECK(combinatorics::factorial(0) == 1);
  CHECK(combinatorics::factorial(5) == 120);
  CHECK(combinatorics::factorial(12) == 479001600ull);
}
