#include <doctest.h>

#include "stringcone/eps.hpp"
#include "stringcone/linalg.hpp"
#include "stringcone/rng.hpp"
#include "support/test_support.hpp"

using namespace stringcone;
using namespace testsupport;

TEST_CASE("rationals are canonical") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(-4, -8) == Rational(1, 2));
  Rational r(3, -6);
  CHECK(r.denominator() > 0);
  CHECK(r == Rational(-1, 2));
  CHECK(r.toString() == "-1/2");
  CHECK(Rational::fromString("-1/2") == r);
  CHECK(Rational::fromString("7") == Rational(7));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational::fromString("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("rational floor and ceil") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(5).floor() == 5);
  CHECK(Rational(5).ceil() == 5);
}

TEST_CASE("eps ordering is lexicographic") {
  // (a,b) < (c,d) iff a<c or (a=c and b<d)
  CHECK(EpsNumber(Rational(1), Rational(100)) < EpsNumber(Rational(2), Rational(-100)));
  CHECK(EpsNumber(Rational(1), Rational(-1)) < EpsNumber(Rational(1), Rational(0)));
  CHECK(EpsNumber(Rational(0), Rational(1)).isPositive());
  CHECK(!EpsNumber(Rational(0), Rational(-1)).isPositive());
  CHECK(EpsNumber(Rational(0), Rational(0)) == EpsNumber());
}

TEST_CASE("eps ordering is a total order") {
  SeededRng rng(17);
  auto sample = [&] {
    return EpsNumber(Rational(rng.nextInt(-4, 4), rng.nextInt(1, 3)),
                     Rational(rng.nextInt(-4, 4), rng.nextInt(1, 3)));
  };
  for (int trial = 0; trial < 300; ++trial) {
    EpsNumber a = sample(), b = sample(), c = sample();
    // totality and antisymmetry
    CHECK(((a < b) || (b < a) || (a == b)));
    if (a < b) CHECK(!(b < a));
    // transitivity
    if (a < b && b < c) CHECK(a < c);
    // arithmetic respects the order
    if (a < b) CHECK(a + c < b + c);
  }
}

TEST_CASE("solveLinear on the reference systems") {
  SUBCASE("identity") {
    auto sol = solveLinear(RatMatrix::identity(2), {Rational(3), Rational(5)});
    REQUIRE(sol.has_value());
    CHECK(sol->unique);
    CHECK(sol->x == RatVector{Rational(3), Rational(5)});
  }
  SUBCASE("scalar division") {
    RatMatrix a(1, 1);
    a.at(0, 0) = Rational(2);
    auto sol = solveLinear(a, {Rational(1)});
    REQUIRE(sol.has_value());
    CHECK(sol->x[0] == Rational(1, 2));
  }
  SUBCASE("inconsistent rows") {
    RatMatrix a(2, 2);
    a.at(0, 0) = a.at(0, 1) = a.at(1, 0) = a.at(1, 1) = Rational(1);
    CHECK(!solveLinear(a, {Rational(1), Rational(2)}).has_value());
  }
  SUBCASE("underdetermined flags non-uniqueness") {
    RatMatrix a(1, 2);
    a.at(0, 0) = Rational(1);
    a.at(0, 1) = Rational(1);
    auto sol = solveLinear(a, {Rational(2)});
    REQUIRE(sol.has_value());
    CHECK(!sol->unique);
    CHECK(sol->x[0] + sol->x[1] == Rational(2));
  }
  SUBCASE("shape mismatch throws") {
    CHECK_THROWS_AS(solveLinear(RatMatrix::identity(2), {Rational(1)}),
                    std::invalid_argument);
  }
}

TEST_CASE("rank on the reference matrices") {
  CHECK(rank(RatMatrix(3, 3)) == 0);
  CHECK(rank(RatMatrix::identity(4)) == 4);
  RatMatrix prop(2, 2);
  prop.at(0, 0) = Rational(1);
  prop.at(0, 1) = Rational(2);
  prop.at(1, 0) = Rational(2);
  prop.at(1, 1) = Rational(4);
  CHECK(rank(prop) == 1);
}

TEST_CASE("rank agrees with the minor-expansion oracle") {
  SeededRng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int n = static_cast<int>(rng.nextInt(1, 4));
    int m = static_cast<int>(rng.nextInt(1, 4));
    RatMatrix a(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) a.at(i, j) = Rational(rng.nextInt(-3, 3));
    CHECK(rank(a) == minorExpansionRank(a));
  }
}

TEST_CASE("solutions satisfy the system exactly") {
  SeededRng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = static_cast<int>(rng.nextInt(1, 4));
    int m = static_cast<int>(rng.nextInt(1, 4));
    RatMatrix a(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        a.at(i, j) = Rational(rng.nextInt(-4, 4), rng.nextInt(1, 3));
    RatVector b(n);
    for (int i = 0; i < n; ++i) b[i] = Rational(rng.nextInt(-4, 4), rng.nextInt(1, 3));
    auto sol = solveLinear(a, b);
    if (!sol) continue;
    for (int i = 0; i < n; ++i) {
      Rational lhs(0);
      for (int j = 0; j < m; ++j) lhs += a.at(i, j) * sol->x[j];
      CHECK(lhs == b[i]);  // no tolerance anywhere
    }
  }
}

TEST_CASE("integer determinant and scaled inverse") {
  std::vector<IntVector> m = {iv({1, 2}), iv({3, 4})};
  CHECK(intDet(m) == -2);
  auto [absDet, adj] = scaledInverse(m);
  CHECK(absDet == 2);
  // adj * m = absDet * identity
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Int s(0);
      for (int k = 0; k < 2; ++k) s += adj[i][k] * m[k][j];
      CHECK(s == (i == j ? absDet : Int(0)));
    }
  CHECK(intDet({}) == 1);

  SeededRng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng.nextInt(1, 4));
    std::vector<IntVector> a(n, IntVector(n));
    std::vector<RatVector> ra(n, RatVector(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long v = rng.nextInt(-3, 3);
        a[i][j] = v;
        ra[i][j] = Rational(v);
      }
    CHECK(Rational(intDet(a)) == cofactorDet(ra));
  }
}
