#include <doctest.h>

#include "stringcone/errors.hpp"
#include "stringcone/pairing.hpp"
#include "stringcone/pipeline.hpp"
#include "support/test_support.hpp"

using namespace stringcone;
using namespace testsupport;

namespace {

struct Built {
  Triangulation tri;
  QuotientPresentation ring;
  QuotientPresentation interior;
};

Built buildBoth(const GradedCone& cone, std::uint64_t seed) {
  SessionOptions options;
  options.seed = seed;
  ConeSession session(cone, options);
  return {session.triangulation(), session.ringQuotient(), session.interiorQuotient()};
}

}  // namespace

TEST_CASE("orthant pairing is the unit") {
  auto built = buildBoth(orthantCone(2), 7);
  auto pd = buildPairing(built.ring, built.interior);
  CHECK(pd.soclePoint == iv({1, 1}));
  REQUIRE(pd.matrices.size() == 3);
  REQUIRE(pd.matrices[0].rows() == 1);
  CHECK(pd.matrices[0].at(0, 0) == Rational(1));  // phi is normalized on the socle
  CHECK(pd.matrices[1].rows() == 0);
  CHECK(pd.matrices[2].rows() == 0);
  CHECK(checkNondegeneracy(pd).ok);
}

TEST_CASE("index-2 cone pairing matrices are 1x1 and unimodular on box products") {
  auto built = buildBoth(index2Cone(), 7);
  auto pd = buildPairing(built.ring, built.interior);
  CHECK(pd.soclePoint == iv({2, 2}));
  REQUIRE(pd.matrices.size() == 3);
  // Degree 0 pairs 1 with the socle; degree 1 pairs x^(1,1) with x^(1,1),
  // whose product is exactly the socle monomial.
  CHECK(pd.matrices[0].at(0, 0) == Rational(1));
  CHECK(pd.matrices[1].at(0, 0) == Rational(1));
  CHECK(checkNondegeneracy(pd).ok);
}

TEST_CASE("square cone pairing is square and nondegenerate") {
  auto built = buildBoth(squareCone(), 7);
  auto pd = buildPairing(built.ring, built.interior);
  auto rep = checkNondegeneracy(pd);
  CHECK(rep.ok);
  // S = 1 + t: one 1x1 block at degree 0 and one at degree 1.
  REQUIRE(pd.matrices.size() == 4);
  CHECK(pd.matrices[0].rows() == 1);
  CHECK(pd.matrices[1].rows() == 1);
  CHECK(!pd.matrices[1].at(0, 0).isZero());
}

TEST_CASE("matrix sizes follow the degree polynomials") {
  SeededRng rng(29);
  for (int trial = 0; trial < 4; ++trial) {
    int r = 2 + trial % 2;
    GradedCone cone = randomGradedCone(rng, r, 6, 10);
    SessionOptions options;
    options.seed = rng.nextU64();
    ConeSession session(cone, options);
    auto pd = session.pairing();
    const auto& s = session.sPoly();
    const auto& t = session.tPoly();
    for (int l = 0; l <= r; ++l) {
      CHECK(Int(pd.matrices[l].rows()) == s.coefficient(l));
      CHECK(Int(pd.matrices[l].cols()) == t.coefficient(r - l));
      CHECK(pd.matrices[l].rows() == pd.matrices[l].cols());
    }
    CHECK(session.nondegeneracy().ok);
  }
}

TEST_CASE("phi vanishes below the top degree") {
  // The socle selector kills every interior class of degree < rank: normal
  // forms live in the box basis of their own degree, which never contains
  // the socle point.
  auto built = buildBoth(index2Cone(), 7);
  const IntVector socle = built.interior.boxBasis()[2][0];
  for (const auto& p : latticePointsUpToDegree(built.tri, 1, true)) {
    auto nf = normalForm(built.interior, p.coords);
    const auto& basis = built.interior.boxBasis()[static_cast<size_t>(p.degree)];
    CHECK(nf.size() == basis.size());
    for (const auto& b : basis) CHECK(b != socle);
  }
}

TEST_CASE("pairing is well-defined on classes") {
  // phi(nf(x^m) * y) = phi(nf(x^m * y)): reduce-then-multiply agrees with
  // multiply-then-reduce against the socle coefficient.
  auto built = buildBoth(index2Cone(), 7);
  const GradedCone cone = index2Cone();
  const int r = cone.rank;
  for (const auto& m : latticePointsUpToDegree(built.tri, 1, false)) {
    if (m.degree != 1) continue;
    for (const auto& y : latticePointsUpToDegree(built.tri, r, true)) {
      if (y.degree != r - 1) continue;
      IntVector product(r);
      for (int k = 0; k < r; ++k) product[k] = m.coords[k] + y.coords[k];
      Rational direct = normalForm(built.interior, product)[0];

      auto nfM = normalForm(built.ring, m.coords);
      const auto& basisM = built.ring.boxBasis()[1];
      Rational viaClasses(0);
      for (size_t i = 0; i < nfM.size(); ++i) {
        if (nfM[i].isZero()) continue;
        IntVector bProduct(r);
        for (int k = 0; k < r; ++k) bProduct[k] = basisM[i][k] + y.coords[k];
        viaClasses += nfM[i] * normalForm(built.interior, bProduct)[0];
      }
      CHECK(direct == viaClasses);
    }
  }
}

TEST_CASE("uncertified presentations are rejected") {
  GradedCone cone = index2Cone();
  SeededRng rng(1);
  auto tri = [&] {
    for (;;) {
      RatVector h(cone.points.size());
      for (auto& x : h) x = Rational(rng.nextInt(0, 1 << 16));
      try {
        return buildTriangulation(cone, Heights{h});
      } catch (const NotStrictlyConvex&) {
      }
    }
  }();
  auto dir = directionFromXi(tri, rv({1, 1}));
  auto boxes = computeBoxDecomposition(tri, dir);
  auto forms = makeForms(cone, 3);
  for (auto& f : forms) f.coefficients = {Rational(0), Rational(5)};
  auto ring = buildPresentation(tri, boxes, forms, 6, Flavor::Full);
  auto interior = buildPresentation(tri, boxes, forms, 6, Flavor::Interior);
  CHECK_THROWS_AS(buildPairing(ring, interior), PresentationNotCertified);
}
