#pragma once

#include <string>
#include <vector>

#include "stringcone/linalg.hpp"
#include "stringcone/rational.hpp"

namespace stringcone {

class Triangulation;

/// A pointed full-dimensional rational cone together with a grading covector
/// taking value 1 on all chosen generators, and the chosen degree-1 lattice
/// points (which must include the primitive generators of all rays).
struct GradedCone {
  int rank = 0;
  std::vector<IntVector> rayGenerators;
  IntVector degree;                 // covector in the dual lattice
  std::vector<IntVector> points;    // e_1..e_d, each of degree 1

  int pointCount() const { return static_cast<int>(points.size()); }

  long long degreeOf(const IntVector& v) const;
  Rational rationalDegreeOf(const RatVector& v) const;
};

struct LatticePoint {
  IntVector coords;
  long long degree = 0;

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.coords == b.coords;
  }
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return a.coords < b.coords;
  }
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

/// Checks every structural invariant of a graded cone description; all
/// failures are collected into the report rather than thrown.
ValidationReport validate(const GradedCone& cone);

/// Membership test through the simplex cones of a triangulation. With
/// strict=true the point is tested against the interior by perturbing it
/// inward: p lies in the interior iff p - eps*(interior direction) stays in
/// the cone for all small eps, evaluated exactly at the symbolic-eps level.
bool contains(const Triangulation& tri, const RatVector& p, bool strict);

/// All lattice points of degree <= maxDegree in the cone (or its interior),
/// found by scanning the integer bounding box of the degree-<=D slice and
/// filtering by membership. Sorted lexicographically by coordinates.
std::vector<LatticePoint> latticePointsUpToDegree(const Triangulation& tri,
                                                  long long maxDegree,
                                                  bool interiorOnly);

/// Single-pass variant of the enumeration that classifies each point as
/// boundary or interior; the per-degree pipeline stages share this scan.
struct EnumeratedPoint {
  IntVector coords;
  long long degree;
  bool interior;
};
std::vector<EnumeratedPoint> enumerateLatticePoints(const Triangulation& tri,
                                                    long long maxDegree);

}  // namespace stringcone
