#pragma once

#include <optional>
#include <vector>

#include "stringcone/cone.hpp"
#include "stringcone/eps.hpp"
#include "stringcone/linalg.hpp"
#include "stringcone/rational.hpp"

namespace stringcone {

/// Lifting heights, one value per cone point; the induced regular subdivision
/// must be a triangulation using every point as a vertex.
struct Heights {
  RatVector values;
};

/// One maximal simplex of the triangulation: an index set I, the linear
/// functional interpolating the heights on its points, and the lattice index
/// |det| of its generator matrix. The signed adjugate is cached so that
/// barycentric coordinates of p come out as (adjScaled * p) / latticeIndex.
struct Simplex {
  std::vector<int> indices;            // 0-based into cone.points, ascending
  RatVector functional;                // value <functional, e_j> interpolates heights on I
  Int latticeIndex;                    // |det| of the column matrix of generators
  std::vector<IntVector> adjScaled;    // adjScaled * E = latticeIndex * identity

  bool containsIndex(int i) const;
};

struct Location {
  int simplexIndex;
  EpsVector coords;       // barycentric coordinates w.r.t. the simplex generators
  bool strictlyPositive;  // every coordinate > 0 in the eps order
};

/// Regular triangulation of the cone's point configuration, with the strict
/// convexity certificate verified at build time. Immutable after build.
class Triangulation {
 public:
  const GradedCone& cone() const { return cone_; }
  const Heights& heights() const { return heights_; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  const Simplex& simplex(int i) const { return simplices_[static_cast<size_t>(i)]; }

  /// Sum of all point vectors; an interior direction used for strict
  /// membership tests (no genericity needed for that purpose).
  const IntVector& interiorDirection() const { return interiorDir_; }
  /// Cached adjScaled * interiorDirection per simplex.
  const std::vector<IntVector>& interiorDirCoords() const { return interiorDirCoords_; }

  friend Triangulation buildTriangulation(const GradedCone& cone, const Heights& heights);

 private:
  GradedCone cone_;
  Heights heights_;
  std::vector<Simplex> simplices_;
  IntVector interiorDir_;
  std::vector<IntVector> interiorDirCoords_;
};

/// Builds the regular triangulation induced by the heights: an r-subset I is
/// a cell iff the functional interpolating the heights on I lies strictly
/// below the heights at all other points. Throws NotStrictlyConvex when the
/// subdivision has a non-simplex cell or leaves a point unused, InvalidCone /
/// DegenerateConfiguration on bad input.
Triangulation buildTriangulation(const GradedCone& cone, const Heights& heights);

/// Value of the convex piecewise-linear lift at p: the maximum of the simplex
/// functionals, evaluated in eps arithmetic. Throws PointOutsideCone.
EpsNumber psiValue(const Triangulation& tri, const EpsVector& p);

/// Finds a simplex cone containing p (all barycentric coordinates >= 0 in the
/// eps order). When p carries a generic slope, the match is unique and all
/// coordinates are strictly positive. Returns std::nullopt when p lies in no
/// simplex cone.
std::optional<Location> locateSimplex(const Triangulation& tri, const EpsVector& p);

}  // namespace stringcone
