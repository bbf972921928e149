#include <doctest.h>

#include <set>

#include "stringcone/cone.hpp"
#include "stringcone/errors.hpp"
#include "stringcone/triangulation.hpp"
#include "support/test_support.hpp"

using namespace stringcone;
using namespace testsupport;

namespace {

Triangulation triangulate(const GradedCone& cone, std::uint64_t seed = 1) {
  SeededRng rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    RatVector h(cone.points.size());
    for (auto& x : h) x = Rational(rng.nextInt(0, 1 << 16));
    try {
      return buildTriangulation(cone, Heights{h});
    } catch (const NotStrictlyConvex&) {
    }
  }
  throw std::runtime_error("triangulate helper failed");
}

}  // namespace

TEST_CASE("validation accepts the rank-2 orthant") {
  CHECK(validate(orthantCone(2)).ok);
  CHECK(validate(index2Cone()).ok);
  CHECK(validate(squareCone()).ok);
  CHECK(validate(orthantCone(0)).ok);  // the zero cone is legal
}

TEST_CASE("validation rejects a line") {
  GradedCone cone;
  cone.rank = 2;
  cone.degree = {Int(1), Int(0)};
  cone.rayGenerators = {iv({1, 0}), iv({-1, 0})};
  cone.points = cone.rayGenerators;
  auto rep = validate(cone);
  CHECK(!rep.ok);
  bool pointedness = false;
  for (const auto& f : rep.failures)
    if (f.find("pointed") != std::string::npos) pointedness = true;
  CHECK(pointedness);
}

TEST_CASE("validation rejects points missing a ray generator") {
  GradedCone cone;
  cone.rank = 2;
  cone.degree = {Int(1), Int(0)};
  cone.rayGenerators = {iv({1, 0}), iv({1, 2})};
  cone.points = {iv({1, 0})};
  auto rep = validate(cone);
  CHECK(!rep.ok);
  bool missing = false;
  for (const auto& f : rep.failures)
    if (f.find("ray generator") != std::string::npos) missing = true;
  CHECK(missing);
}

TEST_CASE("validation rejects wrong degrees and duplicates") {
  GradedCone bad = orthantCone(2);
  bad.degree = {Int(1), Int(0)};  // second ray now has degree 0
  CHECK(!validate(bad).ok);

  GradedCone dup = index2Cone();
  dup.points.push_back(dup.points[0]);
  CHECK(!validate(dup).ok);
}

TEST_CASE("membership through the triangulation") {
  auto tri = triangulate(orthantCone(2));
  CHECK(contains(tri, rv({2, 3}), false));
  CHECK(contains(tri, rv({2, 3}), true));
  CHECK(contains(tri, rv({0, 1}), false));
  CHECK(!contains(tri, rv({0, 1}), true));  // boundary point is not interior
  CHECK(!contains(tri, rv({-1, 1}), false));

  auto tri2 = triangulate(index2Cone());
  CHECK(contains(tri2, rv({1, 1}), true));  // 0 < y < 2x
  CHECK(contains(tri2, rv({1, 2}), false));
  CHECK(!contains(tri2, rv({1, 2}), true));
  CHECK(!contains(tri2, rv({1, 3}), false));
  // strict membership implies plain membership
  SeededRng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    RatVector p = {Rational(rng.nextInt(-2, 4)), Rational(rng.nextInt(-2, 8))};
    if (contains(tri2, p, true)) CHECK(contains(tri2, p, false));
  }
}

TEST_CASE("lattice point enumeration on the reference cones") {
  auto tri = triangulate(orthantCone(2));
  auto pts = latticePointsUpToDegree(tri, 1, false);
  std::set<IntVector> got;
  for (const auto& p : pts) got.insert(p.coords);
  CHECK(got == std::set<IntVector>{iv({0, 0}), iv({1, 0}), iv({0, 1})});

  auto interior = latticePointsUpToDegree(tri, 2, true);
  REQUIRE(interior.size() == 1);
  CHECK(interior[0].coords == iv({1, 1}));
  CHECK(interior[0].degree == 2);

  auto tri2 = triangulate(index2Cone());
  CHECK(latticePointsUpToDegree(tri2, 2, false).size() == 9);  // 1 + 3 + 5
}

TEST_CASE("degree slice counts match polytope dilation") {
  // Counts per degree equal the lattice point counts of the dilated slice
  // polytope; closed forms for the reference cones.
  auto tri = triangulate(squareCone());
  std::vector<long long> counts(5, 0);
  for (const auto& p : enumerateLatticePoints(tri, 4)) counts[p.degree]++;
  for (long long dd = 0; dd <= 4; ++dd) CHECK(counts[dd] == (dd + 1) * (dd + 1));

  auto tri2 = triangulate(index2Cone());
  std::vector<long long> counts2(5, 0);
  for (const auto& p : enumerateLatticePoints(tri2, 4)) counts2[p.degree]++;
  for (long long dd = 0; dd <= 4; ++dd) CHECK(counts2[dd] == 2 * dd + 1);
}

TEST_CASE("enumeration agrees with the caratheodory oracle") {
  SeededRng rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    GradedCone cone = randomGradedCone(rng, 2 + trial % 2, 6, 10);
    auto tri = triangulate(cone, rng.nextU64());
    std::set<IntVector> enumerated;
    for (const auto& p : latticePointsUpToDegree(tri, 3, false)) enumerated.insert(p.coords);
    // Scan a box around the degree<=3 slab independently.
    long long B = 10;
    std::function<void(int, IntVector&)> scan = [&](int k, IntVector& x) {
      if (k == cone.rank) {
        Int deg = intDot(cone.degree, x);
        if (deg < 0 || deg > 3) return;
        RatVector p(cone.rank);
        for (int i = 0; i < cone.rank; ++i) p[i] = Rational(x[i]);
        bool oracle = caratheodoryContains(cone.points, cone.rank, p);
        CHECK(oracle == (enumerated.count(x) > 0));
        return;
      }
      for (long long v = -B; v <= B; ++v) {
        x[k] = Int(static_cast<long>(v));
        scan(k + 1, x);
      }
      return;
    };
    IntVector x(cone.rank);
    scan(0, x);
  }
}

TEST_CASE("interior points lie off proper faces") {
  auto tri = triangulate(squareCone());
  std::set<IntVector> allPts, interiorPts;
  for (const auto& p : latticePointsUpToDegree(tri, 3, false)) allPts.insert(p.coords);
  for (const auto& p : latticePointsUpToDegree(tri, 3, true)) interiorPts.insert(p.coords);
  for (const auto& p : interiorPts) CHECK(allPts.count(p));
  for (const auto& p : allPts) {
    RatVector q(3);
    for (int i = 0; i < 3; ++i) q[i] = Rational(p[i]);
    CHECK(contains(tri, q, true) == (interiorPts.count(p) > 0));
  }
}

TEST_CASE("rank-0 cone has exactly the zero point") {
  GradedCone cone = orthantCone(0);
  auto tri = buildTriangulation(cone, Heights{{}});
  auto pts = latticePointsUpToDegree(tri, 3, false);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].coords.empty());
  CHECK(pts[0].degree == 0);
  CHECK(latticePointsUpToDegree(tri, 3, true).size() == 1);
}
