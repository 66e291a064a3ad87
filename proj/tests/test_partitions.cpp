#include "doctest.h"

#include "booklab/error.hpp"
#include "booklab/partitions.hpp"
#include "oracles.hpp"

using namespace booklab;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Partition>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.push_back(p.parts());
  return out;
}

}  // namespace

TEST_CASE("enumerate_partitions") {
  CHECK(parts_of(enumerate_partitions(4)) ==
        std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(enumerate_partitions(6).size() == 11);
  CHECK(parts_of(enumerate_partitions(1)) == std::vector<std::vector<int>>{{1}});
  const std::size_t p[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
  for (int r = 1; r <= 20; ++r) {
    // The recursive oracle also emits reverse-lex order.
    CHECK(parts_of(enumerate_partitions(r)) == oracle::partitions(r));
    CHECK(enumerate_partitions(r).size() == p[r - 1]);
  }
}

TEST_CASE("Partition validation and text") {
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  CHECK(to_string(Partition({3, 1})) == "(3,1)");
  CHECK(parse_partition("1,3") == Partition({3, 1}));
  CHECK(parse_partition("(2,2,1)").total() == 5);
  CHECK_THROWS_AS(parse_partition("3,,1"), Error);
  CHECK_THROWS_AS(parse_partition("3,-1"), Error);
}

TEST_CASE("is_s_sum_free examples") {
  CHECK(is_s_sum_free(Partition({3, 1}), 2));
  CHECK_FALSE(is_s_sum_free(Partition({2, 2}), 2));
  CHECK_FALSE(is_s_sum_free(Partition({1, 1, 1, 1}), 2));
  const auto sums = subset_sums(Partition({3, 1}));
  CHECK(sums == std::vector<bool>{true, true, false, true, true});
  CHECK_THROWS_AS(is_s_sum_free(Partition({3, 1}), 0), Error);
  CHECK_THROWS_AS(is_s_sum_free(Partition({3, 1}), 4), Error);
}

TEST_CASE("subset sums agree with the DP oracle for r up to 20") {
  for (int r = 2; r <= 20; ++r)
    for (const auto& p : enumerate_partitions(r))
      for (int s = 1; s < r; ++s) {
        const bool hit = oracle::subset_sums_to(p.parts(), s);
        REQUIRE(is_s_sum_free(p, s) == !hit);
        const auto idx = offending_subset(p, s);
        if (!hit) {
          REQUIRE(idx.empty());
          continue;
        }
        int sum = 0;
        for (std::size_t k = 0; k < idx.size(); ++k) {
          if (k > 0) REQUIRE(idx[k] > idx[k - 1]);
          sum += p[idx[k]];
        }
        REQUIRE(sum == s);
      }
}

TEST_CASE("beta examples") {
  const auto b42 = beta(4, 2);
  CHECK(b42.value == 2);
  CHECK(b42.witness == Partition({3, 1}));
  const auto b63 = beta(6, 3);
  CHECK(b63.value == 3);
  CHECK((b63.witness == Partition({4, 1, 1}) || b63.witness == Partition({2, 2, 2})));
  const auto b31 = beta(3, 1);
  CHECK(b31.value == 1);
  CHECK(b31.witness == Partition({3}));
  CHECK_THROWS_AS(beta(3, 3), Error);
}

TEST_CASE("beta is certified by full enumeration") {
  for (int r = 2; r <= 18; ++r)
    for (int s = 1; s < r; ++s) {
      const auto b = beta(r, s);
      REQUIRE(b.witness.length() == b.value);
      REQUIRE(b.witness.total() == r);
      REQUIRE(is_s_sum_free(b.witness, s));
      int best = 0;
      for (const auto& p : oracle::partitions(r))
        if (!oracle::subset_sums_to(p, s)) best = std::max(best, static_cast<int>(p.size()));
      REQUIRE(best == b.value);
    }
}
