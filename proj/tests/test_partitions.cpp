#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dq/partitions.hpp"

using namespace dq;

namespace {
Partition pt(std::vector<long long> parts) { return Partition(std::move(parts)); }
Weight w(std::vector<long long> c) { return Weight(std::move(c)); }
}  // namespace

TEST_CASE("partition validation and accessors") {
  CHECK_THROWS_AS(pt({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(pt({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(pt({-1}), std::invalid_argument);

  auto xi = pt({4, 2, 1});
  CHECK(xi.length() == 3);
  CHECK(xi.size() == 7);
  CHECK(xi.part(1) == 4);
  CHECK(xi.part(3) == 1);
  CHECK(xi.part(4) == 0);
  CHECK_THROWS_AS(xi.part(0), std::invalid_argument);
  CHECK(xi.tail_sum(1) == 7);
  CHECK(xi.tail_sum(2) == 3);
  CHECK(xi.tail_sum(3) == 1);
  CHECK(xi.tail_sum(9) == 0);

  Partition empty;
  CHECK(empty.empty());
  CHECK(empty.size() == 0);
  CHECK(empty.tail_sum(1) == 0);
}

TEST_CASE("shape classification recognizes the three admissible shapes") {
  auto s0 = classify_shape(Partition{});
  CHECK(s0.kind == ShapeKind::Empty);
  CHECK(shape_name(s0) == "empty");

  auto s1 = classify_shape(pt({3, 3, 3}));
  CHECK(s1.kind == ShapeKind::Rectangular);
  CHECK(s1.k1 == 3);
  CHECK(s1.s1 == 3);
  CHECK(shape_name(s1) == "rectangular(3^3)");

  auto s2 = classify_shape(pt({4, 4, 2}));
  CHECK(s2.kind == ShapeKind::SpecialFatHook);
  CHECK(s2.k1 == 4);
  CHECK(s2.s1 == 2);
  CHECK(s2.k2 == 2);
  CHECK(shape_name(s2) == "special fat hook(4^2,2)");

  CHECK(classify_shape(pt({5})).kind == ShapeKind::Rectangular);
  CHECK(classify_shape(pt({2, 1})).kind == ShapeKind::SpecialFatHook);
  CHECK(classify_shape(pt({3, 2, 1})).kind == ShapeKind::Other);
  CHECK(classify_shape(pt({4, 4, 2, 2})).kind == ShapeKind::Other);
  CHECK(shape_name(classify_shape(pt({3, 2, 1}))) == "other");
}

TEST_CASE("tuple validation checks one size per positive root") {
  auto a1 = RootSystem::build("A1");
  auto t = validate_tuple(a1, w({3}), {pt({2, 1})});
  CHECK(t.lambda == w({3}));
  CHECK_THROWS_WITH_AS(validate_tuple(a1, w({3}), {pt({2, 2})}),
                       "size mismatch at root alpha_1: expected 3, got 4",
                       std::invalid_argument);

  auto a2 = RootSystem::build("A2");
  // Roots in order: alpha_1, alpha_2, alpha_1 + alpha_2 with values 1, 0, 1.
  auto t2 = validate_tuple(a2, w({1, 0}), {pt({1}), Partition{}, pt({1})});
  CHECK(t2.by_root[1].empty());
  CHECK_THROWS_AS(validate_tuple(a2, w({1, 0}), {pt({1}), pt({1}), pt({1})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_tuple(a2, w({1, 0}), {pt({1}), Partition{}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_tuple(a2, w({-1, 0}), {pt({1}), Partition{}, pt({1})}),
                  std::invalid_argument);
}

TEST_CASE("canonical tuples at a level have the stated rows") {
  auto a1 = RootSystem::build("A1");
  auto t = xi_of_level(a1, 2, w({5}));
  CHECK(t.by_root[0].parts() == std::vector<long long>{2, 2, 1});
  CHECK(classify_shape(t.by_root[0]).kind == ShapeKind::SpecialFatHook);

  auto t4 = xi_of_level(a1, 2, w({4}));
  CHECK(t4.by_root[0].parts() == std::vector<long long>{2, 2});
  CHECK(classify_shape(t4.by_root[0]).kind == ShapeKind::Rectangular);

  auto t1 = xi_of_level(a1, 1, w({3}));
  CHECK(t1.by_root[0].parts() == std::vector<long long>{1, 1, 1});

  CHECK_THROWS_AS(xi_of_level(a1, 3, w({0})), std::invalid_argument);
  CHECK_THROWS_AS(xi_of_level(a1, 0, w({2})), std::invalid_argument);
}

TEST_CASE("canonical rows use the rescaled level of each root") {
  auto b2 = RootSystem::build("B2");
  // lambda = 2 omega_1 + 2 omega_2: the long roots see box size l, the short
  // roots see 2l.
  auto t = xi_of_level(b2, 1, w({2, 2}));
  for (int a = 0; a < b2.num_positive_roots(); ++a) {
    const Root& alpha = b2.root(a);
    long long value = b2.eval_coroot(w({2, 2}), alpha);
    CHECK(t.by_root[a].size() == value);
    for (long long part : t.by_root[a].parts()) CHECK(part <= alpha.d * 1);
  }
  // Divisible weights tile into perfect rectangles.
  auto g2 = RootSystem::build("G2");
  Weight div = w({3 * 2, 1 * 2});
  auto tg = xi_of_level(g2, 2, div);
  for (int a = 0; a < g2.num_positive_roots(); ++a) {
    auto kind = classify_shape(tg.by_root[a]).kind;
    CHECK((kind == ShapeKind::Empty || kind == ShapeKind::Rectangular));
  }
}
