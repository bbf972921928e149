#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stringcone/triangulation.hpp"

namespace stringcone {

/// Which perturbation of a lattice point is used: +xi decomposes the whole
/// cone, -xi decomposes its interior.
enum class Sign { PlusXi, MinusXi };

inline const char* signName(Sign s) { return s == Sign::PlusXi ? "+xi" : "-xi"; }

/// A rational direction strictly inside the cone whose coordinates are
/// nonzero in every simplex of the triangulation.
struct GenericDirection {
  RatVector xi;
  std::vector<RatVector> betas;  // betas[s][i]: coordinate of xi in simplex s
  int retries = 0;               // sampling rounds consumed
};

/// Coordinates of xi with respect to one simplex, or nullopt when xi is not
/// generic for it (some coordinate vanishes).
std::vector<RatVector> xiCoordinates(const Triangulation& tri, const RatVector& xi);

/// Wraps a user-supplied direction; throws GenericityFailure if it is not
/// strictly interior or some simplex coordinate vanishes.
GenericDirection directionFromXi(const Triangulation& tri, RatVector xi);

/// Samples xi as a random positive rational combination of the cone points,
/// resampling until every simplex coordinate is nonzero. Deterministic under
/// the seed; throws GenericityFailure after the retry budget.
GenericDirection chooseXi(const Triangulation& tri, std::uint64_t seed,
                          int maxRetries = 32);

struct BoxPoint {
  LatticePoint point;
  RatVector gamma;  // coordinates w.r.t. the simplex generators, in [0, 1]
};

/// Lattice points of the half-open fundamental parallelepiped of a simplex,
/// with the open/closed side of each coordinate window chosen by the sign of
/// the corresponding xi coordinate.
struct BoxSet {
  int simplexIndex;
  Sign sign;
  std::vector<BoxPoint> points;
};

struct BoxDecomposition {
  std::vector<BoxSet> plus;   // indexed by simplex
  std::vector<BoxSet> minus;

  const std::vector<BoxSet>& forSign(Sign s) const {
    return s == Sign::PlusXi ? plus : minus;
  }
};

BoxSet boxPoints(const Triangulation& tri, const GenericDirection& dir,
                 int simplexIndex, Sign sign);

/// All box sets of both signs from a single lattice-point scan.
BoxDecomposition computeBoxDecomposition(const Triangulation& tri,
                                         const GenericDirection& dir);

/// The canonical representation n = base + sum multiplicities[i] * e_{I[i]}
/// with base in the box set of the simplex the perturbed point lands in.
struct PointDecomposition {
  int simplexIndex;
  LatticePoint base;
  std::vector<Int> multiplicities;  // one per simplex generator
};

/// Decomposes a lattice point of the cone (sign +xi) or of its interior
/// (sign -xi). Throws PointNotInDomain when the point lies outside the
/// domain, AmbiguousLocation when the direction is not generic.
PointDecomposition decomposePoint(const Triangulation& tri,
                                  const GenericDirection& dir,
                                  const IntVector& n, Sign sign);

struct PartitionReport {
  bool ok = true;
  long long domainSize = 0;
  std::vector<std::string> problems;

  void fail(std::string p) {
    ok = false;
    if (problems.size() < 16) problems.push_back(std::move(p));
  }
};

/// Brute-force certificate that the box translates partition the domain up
/// to the given degree: every lattice point is produced exactly once and
/// decomposePoint inverts the construction.
PartitionReport verifyPartition(const Triangulation& tri, const GenericDirection& dir,
                                long long maxDegree, Sign sign);

struct PsiMinimalityReport {
  bool ok = true;
  long long representationCount = 0;
  std::vector<std::string> problems;

  void fail(std::string p) {
    ok = false;
    if (problems.size() < 16) problems.push_back(std::move(p));
  }
};

/// Exhaustively enumerates all representations n = b + sum k_i e_i with b in
/// a box set of the given sign and k_i >= 0, and checks that every split
/// value psi(b +- eps xi) + sum k_i psi(e_i) majorizes the lift value of the
/// perturbed n, with equality exactly at the canonical decomposition, in
/// exact eps order.
PsiMinimalityReport verifyPsiMinimality(const Triangulation& tri,
                                        const GenericDirection& dir,
                                        const IntVector& n, Sign sign);

}  // namespace stringcone
