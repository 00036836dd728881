#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dq/characters.hpp"

using namespace dq;

namespace {
Weight w(std::vector<long long> c) { return Weight(std::move(c)); }
}  // namespace

TEST_CASE("weyl dimensions of familiar modules") {
  auto a2 = RootSystem::build("A2");
  CHECK(weyl_dimension(a2, w({1, 0})) == 3);
  CHECK(weyl_dimension(a2, w({0, 1})) == 3);
  CHECK(weyl_dimension(a2, w({1, 1})) == 8);
  CHECK(weyl_dimension(a2, w({3, 0})) == 10);

  auto b2 = RootSystem::build("B2");
  CHECK(weyl_dimension(b2, w({1, 0})) == 5);
  CHECK(weyl_dimension(b2, w({0, 1})) == 4);
  CHECK(weyl_dimension(b2, w({0, 2})) == 10);
  CHECK(weyl_dimension(b2, w({1, 1})) == 16);

  auto g2 = RootSystem::build("G2");
  CHECK(weyl_dimension(g2, w({1, 0})) == 7);
  CHECK(weyl_dimension(g2, w({0, 1})) == 14);

  auto d4 = RootSystem::build("D4");
  CHECK(weyl_dimension(d4, w({1, 0, 0, 0})) == 8);
  CHECK(weyl_dimension(d4, w({0, 1, 0, 0})) == 28);

  auto a1 = RootSystem::build("A1");
  CHECK(weyl_dimension(a1, w({7})) == 8);

  CHECK_THROWS_AS(weyl_dimension(a2, w({-1, 0})), std::invalid_argument);
}

TEST_CASE("sl2 characters are the full weight strings") {
  auto a1 = RootSystem::build("A1");
  auto chi = irreducible_character(a1, w({3}));
  CHECK(chi.mass() == 4);
  for (long long k : {3, 1, -1, -3}) CHECK(chi.coeff(w({k})) == 1);
  CHECK(chi.coeff(w({0})) == 0);
}

TEST_CASE("the adjoint of A2 has a doubled zero weight") {
  auto a2 = RootSystem::build("A2");
  auto chi = irreducible_character(a2, w({1, 1}));
  CHECK(chi.mass() == 8);
  CHECK(chi.coeff(w({0, 0})) == 2);
  CHECK(chi.coeff(w({1, 1})) == 1);
  CHECK(chi.coeff(w({-1, -1})) == 1);
  CHECK(chi.coeff(w({2, -1})) == 1);
}

TEST_CASE("character mass equals the weyl dimension across types") {
  for (const char* name : {"A3", "B2", "B3", "C3", "G2", "D4"}) {
    auto rs = RootSystem::build(name);
    Weight lam = Weight::zero(rs.rank());
    lam.coords[0] = 1;
    if (rs.rank() > 1) lam.coords[rs.rank() - 1] = 1;
    CHECK(irreducible_character(rs, lam).mass() == weyl_dimension(rs, lam));
  }
  // One short-node case where the multiplicity recursion needs rescaled pairings.
  auto b2 = RootSystem::build("B2");
  CHECK(irreducible_character(b2, w({0, 2})).mass() == 10);
  CHECK(irreducible_character(b2, w({0, 2})).coeff(w({0, 0})) == 2);
}

TEST_CASE("characters are weyl-symmetric") {
  auto b2 = RootSystem::build("B2");
  auto chi = irreducible_character(b2, w({1, 1}));
  for (const auto& [mu, c] : chi.terms())
    CHECK(chi.coeff(dominant_conjugate(b2, mu)) == c);
}

TEST_CASE("dominant conjugation and orbits") {
  auto a2 = RootSystem::build("A2");
  CHECK(dominant_conjugate(a2, w({-1, 2})).dominant());
  CHECK(dominant_conjugate(a2, w({1, 0})) == w({1, 0}));
  CHECK(weyl_orbit(a2, w({1, 0})).size() == 3);
  CHECK(weyl_orbit(a2, w({1, 1})).size() == 6);
  CHECK(weyl_orbit(a2, w({0, 0})).size() == 1);
  auto b2 = RootSystem::build("B2");
  CHECK(weyl_orbit(b2, w({1, 0})).size() == 4);
  CHECK(weyl_orbit(b2, w({0, 1})).size() == 4);
  CHECK(weyl_orbit(b2, w({1, 1})).size() == 8);
}

TEST_CASE("tensor square of the A2 vector decomposes as sym plus alt") {
  auto a2 = RootSystem::build("A2");
  CharacterContext ctx(a2);
  auto v = ctx.irreducible(w({1, 0}));
  auto square = v * v;
  auto parts = decompose_character(ctx, square);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == w({2, 0}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == w({0, 1}));
  CHECK(parts[1].second == 1);
}

TEST_CASE("decomposition handles virtual differences with signs") {
  auto a2 = RootSystem::build("A2");
  CharacterContext ctx(a2);
  auto diff = ctx.irreducible(w({1, 1})) - Int(2) * ctx.irreducible(w({0, 0}));
  auto parts = decompose_character(ctx, diff);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == w({1, 1}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == w({0, 0}));
  CHECK(parts[1].second == -2);
}

TEST_CASE("non-characters are rejected by the peeling") {
  auto a2 = RootSystem::build("A2");
  CharacterContext ctx(a2);
  // A bare non-dominant monomial can never lead a character.
  auto bad = LaurentCharacter::monomial(w({-1, 0}));
  CHECK_THROWS_AS(decompose_character(ctx, bad), std::domain_error);
}

TEST_CASE("the context caches by weight") {
  auto g2 = RootSystem::build("G2");
  CharacterContext ctx(g2);
  const auto& first = ctx.irreducible(w({1, 0}));
  const auto& second = ctx.irreducible(w({1, 0}));
  CHECK(&first == &second);
  CHECK(first.mass() == 7);
}
