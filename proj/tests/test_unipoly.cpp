#include "doctest.h"
#include "support.hpp"

using namespace ffd;
using namespace ffd::testing;

TEST_CASE("zero polynomial uses the degree sentinel") {
  UniPoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == UniPoly::kZeroDegree);
  CHECK_THROWS_AS(z.leading(), std::domain_error);
  CHECK(poly({0, 0, 0}).is_zero());
}

TEST_CASE("division with remainder") {
  const UniPoly a = poly({-1, 0, 0, 1});  // t^3 - 1
  const UniPoly b = poly({-1, 1});        // t - 1
  auto [q, r] = divmod(a, b);
  CHECK(q == poly({1, 1, 1}));
  CHECK(r.is_zero());
  auto [q2, r2] = divmod(poly({1, 0, 1}), poly({0, 2}));
  CHECK(q2 == UniPoly(std::vector<Rational>{Rational(0), Rational(1, 2)}));
  CHECK(r2 == poly({1}));
  CHECK_THROWS_AS(divmod(a, UniPoly()), std::domain_error);
}

TEST_CASE("gcd is monic and handles common factors") {
  const UniPoly a = poly({-1, 0, 1});     // (t-1)(t+1)
  const UniPoly b = poly({1, 2, 1});      // (t+1)^2
  CHECK(gcd(a, b) == poly({1, 1}));
  CHECK(gcd(poly({0, 3}), poly({0, 0, 6})) == poly({0, 1}));
  CHECK(gcd(poly({1, 1}), poly({-1, 1})) == poly({1}));
  CHECK(gcd(UniPoly(), poly({2, 4})) == poly({1, 2}).monic());
}

TEST_CASE("squarefree decomposition examples") {
  // t^3 (t - 1) -> [(t - 1, 1), (t, 3)]
  auto parts = squarefree_decomposition(poly({0, 0, 0, -1, 1}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == std::pair{poly({-1, 1}), 1});
  CHECK(parts[1] == std::pair{poly({0, 1}), 3});

  // (t^2 + 1)^2 -> [(t^2 + 1, 2)]
  parts = squarefree_decomposition(poly({1, 0, 2, 0, 1}));
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == std::pair{poly({1, 0, 1}), 2});

  // t^6 + t^3 + 1 is squarefree: gcd(f, f') = 1
  const UniPoly f = poly({1, 0, 0, 1, 0, 0, 1});
  CHECK(gcd(f, f.derivative()) == poly({1}));
  parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == std::pair{f, 1});
}

TEST_CASE("squarefree decomposition reconstructs random products") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    UniPoly f = random_poly(rng, 4, 5) * pow(random_poly(rng, 3, 4), 2) * pow(random_poly(rng, 2, 3), 3);
    if (f.is_constant()) continue;
    const auto parts = squarefree_decomposition(f);
    UniPoly rebuilt = UniPoly::constant(f.leading());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      CHECK(parts[i].first.is_monic());
      CHECK(gcd(parts[i].first, parts[i].first.derivative()) == poly({1}));
      for (std::size_t j = i + 1; j < parts.size(); ++j) CHECK(gcd(parts[i].first, parts[j].first) == poly({1}));
      rebuilt *= pow(parts[i].first, static_cast<unsigned>(parts[i].second));
    }
    CHECK(rebuilt == f);
  }
}

TEST_CASE("gcd of products recovers the shared factor") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const UniPoly a = random_poly(rng, 6, 9);
    const UniPoly b = random_poly(rng, 6, 9);
    const UniPoly c = random_poly(rng, 5, 9);
    const UniPoly g = gcd(a * c, b * c);
    CHECK(divides(g, a * c));
    CHECK(divides(g, b * c));
    if (!c.is_zero()) CHECK(divides(c.monic(), g));
  }
}

TEST_CASE("rendering round-trips through integer form") {
  const UniPoly f(std::vector<Rational>{Rational(-3, 2), Rational(0), Rational(5, 7)});
  CHECK(f.to_string() == "5/7*t^2 - 3/2");
  const IntegerForm zf = integer_form(f);
  CHECK(zf.z.back() > 0);
  CHECK(from_integers(zf.z) * zf.scale == f);
}
