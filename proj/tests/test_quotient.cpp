#include <doctest.h>

#include <set>
#include "stringcone/errors.hpp"
#include "stringcone/quotient.hpp"
#include "support/test_support.hpp"

using namespace stringcone;
using namespace testsupport;

namespace {

Triangulation triangulate(const GradedCone& cone, std::uint64_t seed = 1) {
  SeededRng rng(seed);
  for (;;) {
    RatVector h(cone.points.size());
    for (auto& x : h) x = Rational(rng.nextInt(0, 1 << 16));
    try {
      return buildTriangulation(cone, Heights{h});
    } catch (const NotStrictlyConvex&) {
    }
  }
}

std::vector<LinearFormZ> fixedForms(const GradedCone& cone, const RatVector& coeffs) {
  auto forms = makeForms(cone, 0);
  for (auto& f : forms) f.coefficients = coeffs;
  return forms;
}

int findRow(const GradedSlice& slice, const IntVector& m) {
  for (int i = 0; i < static_cast<int>(slice.monomials.size()); ++i)
    if (slice.monomials[i] == m) return i;
  return -1;
}

}  // namespace

TEST_CASE("forms have unit dual vectors and the expected variable entries") {
  SUBCASE("orthant with unit coefficients: Z_1 = x_1, Z_2 = x_2") {
    auto forms = fixedForms(orthantCone(2), rv({1, 1}));
    // entry of Z_j on variable i is e_i[j] * c_i
    CHECK(Rational(intDot(forms[0].dualVector, orthantCone(2).points[0])) *
              forms[0].coefficients[0] ==
          Rational(1));
    CHECK(Rational(intDot(forms[0].dualVector, orthantCone(2).points[1])) *
              forms[0].coefficients[1] ==
          Rational(0));
    CHECK(Rational(intDot(forms[1].dualVector, orthantCone(2).points[1])) *
              forms[1].coefficients[1] ==
          Rational(1));
  }
  SUBCASE("index-2 cone: Z_1 = c1 x1 + c2 x2, Z_2 = 2 c2 x2") {
    GradedCone cone = index2Cone();
    auto forms = fixedForms(cone, {Rational(3), Rational(5)});
    CHECK(Rational(intDot(forms[0].dualVector, cone.points[0])) * forms[0].coefficients[0] ==
          Rational(3));
    CHECK(Rational(intDot(forms[0].dualVector, cone.points[1])) * forms[0].coefficients[1] ==
          Rational(5));
    CHECK(Rational(intDot(forms[1].dualVector, cone.points[0])) * forms[1].coefficients[0] ==
          Rational(0));
    CHECK(Rational(intDot(forms[1].dualVector, cone.points[1])) * forms[1].coefficients[1] ==
          Rational(10));
  }
  SUBCASE("sampled coefficients are distinct, nonzero, deterministic") {
    auto a = makeForms(squareCone(), 9);
    auto b = makeForms(squareCone(), 9);
    CHECK(a[0].coefficients == b[0].coefficients);
    std::set<std::string> seen;
    for (const auto& c : a[0].coefficients) {
      CHECK(!c.isZero());
      seen.insert(c.toString());
    }
    CHECK(seen.size() == a[0].coefficients.size());
  }
  SUBCASE("q-specialization uses q^height") {
    GradedCone cone = index2Cone();
    Heights h{rv({2, 1})};
    auto forms = qSpecializedForms(cone, h, Rational(1, 3));
    CHECK(forms[0].coefficients[0] == Rational(1, 9));
    CHECK(forms[0].coefficients[1] == Rational(1, 3));
    CHECK_THROWS_AS(qSpecializedForms(cone, Heights{{Rational(1, 2), Rational(0)}},
                                      Rational(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(qSpecializedForms(cone, h, Rational(0)), std::invalid_argument);
  }
}

TEST_CASE("multiplication matrices on the reference cones") {
  SUBCASE("orthant degree 0") {
    GradedCone cone = orthantCone(2);
    auto tri = triangulate(cone);
    auto slices = buildSlices(tri, 3, Flavor::Full);
    auto forms = fixedForms(cone, rv({1, 1}));
    RatMatrix m = multiplicationMatrix(cone, slices, forms[0], 0);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 1);
    // Z_1 sends 1 to x^(1,0); the other row stays zero.
    int rowX1 = findRow(slices[1], iv({1, 0}));
    int rowX2 = findRow(slices[1], iv({0, 1}));
    CHECK(m.at(rowX1, 0) == Rational(1));
    CHECK(m.at(rowX2, 0) == Rational(0));
  }
  SUBCASE("index-2 cone: the middle monomial receives nothing") {
    GradedCone cone = index2Cone();
    auto tri = triangulate(cone);
    auto slices = buildSlices(tri, 3, Flavor::Full);
    auto forms = fixedForms(cone, {Rational(3), Rational(5)});
    RatMatrix m = multiplicationMatrix(cone, slices, forms[0], 0);
    REQUIRE(m.rows() == 3);  // degree-1 monomials (1,0),(1,1),(1,2)
    CHECK(m.at(findRow(slices[1], iv({1, 0})), 0) == Rational(3));
    CHECK(m.at(findRow(slices[1], iv({1, 1})), 0) == Rational(0));
    CHECK(m.at(findRow(slices[1], iv({1, 2})), 0) == Rational(5));
  }
  SUBCASE("interior flavor stays inside the interior") {
    GradedCone cone = orthantCone(2);
    auto tri = triangulate(cone);
    auto slices = buildSlices(tri, 4, Flavor::Interior);
    CHECK(slices[0].monomials.empty());
    CHECK(slices[1].monomials.empty());
    REQUIRE(slices[2].monomials.size() == 1);  // (1,1)
    auto forms = fixedForms(cone, rv({1, 1}));
    RatMatrix m = multiplicationMatrix(cone, slices, forms[0], 2);
    REQUIRE(m.rows() == 2);  // (1,2) and (2,1)
    REQUIRE(m.cols() == 1);
    CHECK(m.at(findRow(slices[3], iv({2, 1})), 0) == Rational(1));
  }
}

TEST_CASE("quotient dimensions of the reference cones") {
  SUBCASE("orthant rank 2: full quotient is one-dimensional") {
    GradedCone cone = orthantCone(2);
    auto tri = triangulate(cone);
    auto slices = buildSlices(tri, 6, Flavor::Full);
    auto table = quotientDimensions(cone, slices, makeForms(cone, 4), 6);
    CHECK(table.dims[2] == std::vector<long long>{1, 0, 0, 0, 0, 0, 0});
  }
  SUBCASE("index-2 cone: dims match 1+t") {
    GradedCone cone = index2Cone();
    auto tri = triangulate(cone);
    auto slices = buildSlices(tri, 6, Flavor::Full);
    auto table = quotientDimensions(cone, slices, makeForms(cone, 4), 6);
    CHECK(table.dims[2] == std::vector<long long>{1, 1, 0, 0, 0, 0, 0});
  }
  SUBCASE("orthant interior: dims match t^2") {
    GradedCone cone = orthantCone(2);
    auto tri = triangulate(cone);
    auto slices = buildSlices(tri, 6, Flavor::Interior);
    auto table = quotientDimensions(cone, slices, makeForms(cone, 4), 6);
    CHECK(table.dims[2] == std::vector<long long>{0, 0, 1, 0, 0, 0, 0});
  }
}

TEST_CASE("regularity holds generically and fails for a zeroed coefficient") {
  GradedCone cone = index2Cone();
  auto tri = triangulate(cone);
  auto slices = buildSlices(tri, 6, Flavor::Full);

  auto good = quotientDimensions(cone, slices, makeForms(cone, 4), 6);
  CHECK(regularityCheck(good, 2, 6).ok);

  auto bad = quotientDimensions(cone, slices, fixedForms(cone, {Rational(0), Rational(5)}), 6);
  auto rep = regularityCheck(bad, 2, 6);
  CHECK(!rep.ok);
  REQUIRE(rep.firstFailure.has_value());
  // With c1 = 0 both forms are multiples of x2, so dimensions inflate.
  CHECK(bad.dims[2][1] > good.dims[2][1]);
}

TEST_CASE("exact sequence bounds hold even for adversarial coefficients") {
  // f_{k+1} <= f_k and f_{k+1}(t) >= (1-t) f_k(t) coefficientwise, generic or not.
  GradedCone cone = index2Cone();
  auto tri = triangulate(cone);
  auto slices = buildSlices(tri, 6, Flavor::Full);
  for (const RatVector& coeffs :
       {rv({1, 1}), RatVector{Rational(0), Rational(5)}, RatVector{Rational(7), Rational(0)}}) {
    auto table = quotientDimensions(cone, slices, fixedForms(cone, coeffs), 6);
    for (int k = 0; k < 2; ++k) {
      for (long long l = 0; l <= 6; ++l) {
        CHECK(table.dims[k + 1][l] <= table.dims[k][l]);
        long long prev = l >= 1 ? table.dims[k][l - 1] : 0;
        CHECK(table.dims[k + 1][l] >= table.dims[k][l] - prev);
      }
    }
  }
}

TEST_CASE("presentations certify against the box counts") {
  GradedCone cone = index2Cone();
  auto tri = triangulate(cone);
  auto dir = directionFromXi(tri, rv({1, 1}));
  auto boxes = computeBoxDecomposition(tri, dir);
  auto pres = buildPresentation(tri, boxes, makeForms(cone, 4), 6, Flavor::Full);
  CHECK(pres.certified());
  auto bad = buildPresentation(tri, boxes, fixedForms(cone, {Rational(0), Rational(5)}), 6,
                               Flavor::Full);
  CHECK(!bad.certified());
  CHECK(!bad.certificationFailures().empty());
}

TEST_CASE("normal forms on the reference cones") {
  GradedCone cone = index2Cone();
  auto tri = triangulate(cone);
  auto dir = directionFromXi(tri, rv({1, 1}));
  auto boxes = computeBoxDecomposition(tri, dir);
  auto forms = fixedForms(cone, {Rational(3), Rational(5)});
  auto pres = buildPresentation(tri, boxes, forms, 6, Flavor::Full);
  REQUIRE(pres.certified());

  SUBCASE("box monomials are their own normal forms") {
    auto nf = normalForm(pres, iv({1, 1}));
    REQUIRE(nf.size() == 1);
    CHECK(nf[0] == Rational(1));
  }
  SUBCASE("generator monomials reduce to zero at degree 1") {
    // Z_1, Z_2 span x^(1,0) and x^(1,2) at degree 1, so both classes vanish.
    for (auto m : {iv({1, 0}), iv({1, 2})}) {
      auto nf = normalForm(pres, m);
      REQUIRE(nf.size() == 1);
      CHECK(nf[0] == Rational(0));
    }
  }
  SUBCASE("normal form is a projection") {
    // Reducing a monomial and re-reducing the box expansion changes nothing:
    // feed each box monomial through again.
    for (const auto& b : pres.boxBasis()[1]) {
      auto nf = normalForm(pres, b);
      REQUIRE(nf.size() == 1);
      CHECK(nf[0] == Rational(1));
    }
  }
  SUBCASE("orthant: the variable class vanishes") {
    GradedCone orth = orthantCone(2);
    auto otri = triangulate(orth);
    auto odir = directionFromXi(otri, rv({1, 2}));
    auto oboxes = computeBoxDecomposition(otri, odir);
    auto opres = buildPresentation(otri, oboxes, fixedForms(orth, rv({1, 1})), 6, Flavor::Full);
    REQUIRE(opres.certified());
    auto nf = normalForm(opres, iv({1, 0}));
    CHECK(nf.empty());  // no box monomials in degree 1, the class is zero
  }
  SUBCASE("uncertified presentations refuse to reduce") {
    auto bad = buildPresentation(tri, boxes, fixedForms(cone, {Rational(0), Rational(5)}),
                                 6, Flavor::Full);
    CHECK_THROWS_AS(normalForm(bad, iv({1, 1})), NonGenericCoefficients);
  }
}

TEST_CASE("dimensions are the generic value for any generic seed") {
  GradedCone cone = squareCone();
  auto tri = buildTriangulation(cone, Heights{rv({0, 0, 0, 1})});
  auto dir = chooseXi(tri, 2);
  auto boxes = computeBoxDecomposition(tri, dir);
  std::vector<DimensionTable> tables;
  for (std::uint64_t seed : {101u, 202u}) {
    auto pres = buildPresentation(tri, boxes, makeForms(cone, seed), 8, Flavor::Full);
    REQUIRE(pres.certified());
    tables.push_back(pres.dimensions());
  }
  CHECK(tables[0].dims == tables[1].dims);
}
