#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dq/compositions.hpp"

using namespace dq;

TEST_CASE("small index sets listed in full") {
  auto s22 = enumerate_S(2, 2);
  REQUIRE(s22.elements.size() == 2);
  CHECK(s22.elements[0] == std::vector<int>{0, 2, 0});
  CHECK(s22.elements[1] == std::vector<int>{1, 0, 1});

  // r = 1 forces a single unit in position s.
  for (int s = 0; s <= 5; ++s) {
    auto set = enumerate_S(1, s);
    REQUIRE(set.elements.size() == 1);
    std::vector<int> expect(s + 1, 0);
    expect[s] = 1;
    CHECK(set.elements[0] == expect);
  }

  // Nothing has zero entries but positive weighted sum.
  CHECK(enumerate_S(0, 3).elements.empty());
  CHECK(enumerate_S(0, 0).elements.size() == 1);

  // s = 0 puts everything in position zero.
  auto s40 = enumerate_S(4, 0);
  REQUIRE(s40.elements.size() == 1);
  CHECK(s40.elements[0] == std::vector<int>{4});
}

TEST_CASE("elements satisfy both defining equations and are sorted") {
  auto set = enumerate_S(4, 7);
  CHECK(std::is_sorted(set.elements.begin(), set.elements.end()));
  for (const auto& b : set.elements) {
    REQUIRE(b.size() == 8);
    int count = 0;
    long long weighted = 0;
    for (int p = 0; p <= 7; ++p) {
      CHECK(b[p] >= 0);
      count += b[p];
      weighted += static_cast<long long>(p) * b[p];
    }
    CHECK(count == 4);
    CHECK(weighted == 7);
  }
  CHECK(set.contains(set.elements.front()));
  CHECK_FALSE(set.contains(std::vector<int>(8, 0)));
}

TEST_CASE("cardinality equals partitions into at most r parts") {
  for (int r = 0; r <= 9; ++r)
    for (int s = 0; s <= 9; ++s)
      CHECK(Int(enumerate_S(r, s).elements.size()) == count_partitions_bounded(s, r));
  CHECK(count_partitions_bounded(12, 12) == 77);
  CHECK(count_partitions_bounded(6, 3) == 7);
}

TEST_CASE("support-restricted halves partition by the cut") {
  auto below = enumerate_S_below(3, 4, 3);
  for (const auto& b : below.elements)
    for (std::size_t p = 3; p < b.size(); ++p) CHECK(b[p] == 0);
  auto above = enumerate_S_above(2, 6, 3);
  CHECK(!above.elements.empty());
  for (const auto& b : above.elements)
    for (int p = 0; p < 3; ++p) CHECK(b[p] == 0);
  // The above-half at (0,0) is the zero vector alone, the seed of gluing.
  CHECK(enumerate_S_above(0, 0, 5).elements.size() == 1);
  // A cut at zero forbids everything below it vacuously.
  CHECK(enumerate_S_above(2, 2, 0).elements.size() == enumerate_S(2, 2).elements.size());
}

TEST_CASE("the split identity assembles the full set exactly once") {
  for (int r = 0; r <= 6; ++r)
    for (int s = 0; s <= 6; ++s)
      for (int k = 1; k <= 6; ++k) {
        auto check = verify_split_identity(r, s, k);
        CHECK(check.ok);
        CHECK(check.assembled == check.total);
        CHECK(check.counterexample.empty());
      }
}

TEST_CASE("the rearrangement bounds hold under the threshold hypothesis") {
  for (int k = 1; k <= 5; ++k)
    for (int K = 0; K <= 4; ++K)
      for (int r = 0; r <= 6; ++r)
        for (int s = 0; s <= 8; ++s) {
          if (s + r < k * r + K) continue;
          auto check = verify_rearrange_constraint(r, s, k, K);
          CHECK(check.ok);
        }
  CHECK_THROWS_AS(verify_rearrange_constraint(2, 2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_rearrange_constraint(3, 1, 2, 3), std::invalid_argument);
}
