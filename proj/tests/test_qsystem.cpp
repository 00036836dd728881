#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dq/characters.hpp"
#include "dq/qsystem.hpp"

using namespace dq;

namespace {
Weight w(std::vector<long long> c) { return Weight(std::move(c)); }

QSystemTable kr_table(const RootSystem& rs) {
  std::vector<LaurentCharacter> q1;
  for (int i = 0; i < rs.rank(); ++i) q1.push_back(irreducible_character(rs, rs.fundamental(i)));
  return QSystemTable(rs, std::move(q1));
}
}  // namespace

TEST_CASE("constructor checks the seed data") {
  auto a2 = RootSystem::build("A2");
  CHECK_THROWS_AS(QSystemTable(a2, {}), std::invalid_argument);
  CHECK_THROWS_AS(QSystemTable(a2, {LaurentCharacter::unit(2), LaurentCharacter(2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(QSystemTable(a2, {LaurentCharacter::unit(1), LaurentCharacter::unit(1)}),
                  std::invalid_argument);
}

TEST_CASE("type A entries are the irreducible characters of rectangular weights") {
  auto a2 = RootSystem::build("A2");
  QSystemTable table(a2, type_a_initial(a2));
  CHECK(table.get(0, 0) == LaurentCharacter::unit(2));
  CHECK(table.get(0, 2) == irreducible_character(a2, w({2, 0})));
  CHECK(table.get(1, 3) == irreducible_character(a2, w({0, 3})));
  for (int i = 0; i < 2; ++i)
    for (long long m = 1; m <= 4; ++m) {
      Weight lam = Weight::zero(2);
      lam.coords[i] = m;
      CHECK(table.get(i, m) == irreducible_character(a2, lam));
    }
}

TEST_CASE("the defining relation holds on computed entries") {
  auto a3 = RootSystem::build("A3");
  QSystemTable table(a3, type_a_initial(a3));
  for (int i = 0; i < 3; ++i)
    for (long long m = 1; m <= 3; ++m) CHECK(table.recursion_holds(i, m));

  auto b2 = RootSystem::build("B2");
  auto table_b = kr_table(b2);
  for (int i = 0; i < 2; ++i)
    for (long long m = 1; m <= 3; ++m) CHECK(table_b.recursion_holds(i, m));
}

TEST_CASE("fundamental seeds in type B produce the known small dimensions") {
  auto b2 = RootSystem::build("B2");
  auto table = kr_table(b2);
  table.fill(4);
  // Long node: symmetric-power-like tower.
  std::vector<long long> long_dims{1, 5, 14, 30, 55};
  // Short node: the even entries match pair-weight modules with a trivial summand.
  std::vector<long long> short_dims{1, 4, 11, 24, 46};
  for (long long m = 0; m <= 4; ++m) {
    CHECK(table.get(0, m).mass() == Int(long_dims[m]));
    CHECK(table.get(1, m).mass() == Int(short_dims[m]));
  }
  // Q_2 at the short node is the 10-dimensional module plus the trivial one.
  CharacterContext ctx(b2);
  auto parts = decompose_character(ctx, table.get(1, 2));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == w({0, 2}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == w({0, 0}));
  CHECK(parts[1].second == 1);
}

TEST_CASE("a vanishing intermediate entry is reported with its position") {
  auto a1 = RootSystem::build("A1");
  QSystemTable table(a1, {LaurentCharacter::unit(1)});
  CHECK(table.get(0, 2).is_zero());
  try {
    table.fill(4);
    FAIL("expected a division error");
  } catch (const QSystemError& e) {
    CHECK(e.node() == 0);
    CHECK(e.m() == 4);
    CHECK(std::string(e.what()) == "division by a zero entry at Q_4^(1)");
  }
}

TEST_CASE("seeds outside any polynomial solution still fail loudly") {
  auto a2 = RootSystem::build("A2");
  auto x = irreducible_character(a2, w({1, 0}));
  QSystemTable table(a2, {x, x * x});
  CHECK_THROWS_AS(table.fill(4), QSystemError);
}

TEST_CASE("initial data files are parsed and validated") {
  auto a2 = RootSystem::build("A2");
  auto good = parse_initial_data(a2, R"({"1": [[[1,0],1]], "2": [[[0,1],1]]})");
  REQUIRE(good.size() == 2);
  CHECK(good[0] == irreducible_character(a2, w({1, 0})));

  auto doubled = parse_initial_data(a2, R"({"1": [[[1,0],2]], "2": [[[0,1],1]]})");
  CHECK(doubled[0].mass() == 6);

  auto summed = parse_initial_data(a2, R"({"1": [[[1,0],1],[[0,0],1]], "2": [[[0,1],1]]})");
  CHECK(summed[0].mass() == 4);

  CHECK_THROWS_AS(parse_initial_data(a2, "not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_initial_data(a2, R"([1,2])"), std::invalid_argument);
  CHECK_THROWS_AS(parse_initial_data(a2, R"({"1": [[[1,0],1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_initial_data(a2, R"({"1": [], "2": [[[0,1],1]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_initial_data(a2, R"({"1": [[[1],1]], "2": [[[0,1],1]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_initial_data(a2, R"({"1": [[[-1,0],1]], "2": [[[0,1],1]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_initial_data(a2, R"({"1": [[[1,0],0]], "2": [[[0,1],1]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_initial_data(a2, R"({"1": [[[1,0],1]], "2": [[[0,1],1]], "3": [[[0,1],1]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(load_initial_data(a2, "/nonexistent/data.json"), std::invalid_argument);
}

TEST_CASE("kernel factor lists follow the bond multiplicities") {
  auto a2 = RootSystem::build("A2");
  auto spec_a = kernel_spec(a2, 0, 2);
  REQUIRE(spec_a.factors.size() == 1);
  CHECK(spec_a.factors[0] == std::pair<int, long long>{1, 2});
  CHECK(spec_a.lambda == w({0, 2}));

  auto b2 = RootSystem::build("B2");
  // Long node adjacent to the short one: a single factor at the doubled index.
  auto spec_long = kernel_spec(b2, 0, 3);
  REQUIRE(spec_long.factors.size() == 1);
  CHECK(spec_long.factors[0] == std::pair<int, long long>{1, 6});
  CHECK(spec_long.lambda == w({0, 6}));
  // Short node adjacent to the long one: the long factor appears twice.
  auto spec_short = kernel_spec(b2, 1, 2);
  REQUIRE(spec_short.factors.size() == 2);
  CHECK(spec_short.factors[0] == std::pair<int, long long>{0, 2});
  CHECK(spec_short.factors[1] == std::pair<int, long long>{0, 2});
  CHECK(spec_short.lambda == w({4, 0}));

  auto g2 = RootSystem::build("G2");
  // Triple bond seen from the short node: three copies of the long factor.
  auto spec_g = kernel_spec(g2, 0, 1);
  REQUIRE(spec_g.factors.size() == 3);
  for (auto& f : spec_g.factors) CHECK(f == std::pair<int, long long>{1, 1});
  CHECK(spec_g.lambda == w({0, 3}));
}

TEST_CASE("mass identity balances for type A and type B towers") {
  auto a2 = RootSystem::build("A2");
  QSystemTable table(a2, type_a_initial(a2));
  auto check = verify_dimension_identity(table, 0, 1);
  CHECK(check.ok);
  CHECK_FALSE(check.experimental);
  CHECK(check.square == 9);
  CHECK(check.kernel_mass == 3);
  CHECK(check.shifted_mass == 6);

  auto a1 = RootSystem::build("A1");
  QSystemTable ta1(a1, type_a_initial(a1));
  auto check1 = verify_dimension_identity(ta1, 0, 2);
  CHECK(check1.ok);
  CHECK(check1.square == 9);
  CHECK(check1.kernel_mass == 1);
  CHECK(check1.shifted_mass == 8);

  auto b2 = RootSystem::build("B2");
  auto tb = kr_table(b2);
  for (int node = 0; node < 2; ++node)
    for (long long m = 1; m <= 2; ++m) {
      auto cb = verify_dimension_identity(tb, node, m);
      CHECK(cb.ok);
      CHECK_FALSE(cb.experimental);
    }

  auto g2 = RootSystem::build("G2");
  auto tg = kr_table(g2);
  auto cg = verify_dimension_identity(tg, 1, 1);
  CHECK(cg.experimental);
}
