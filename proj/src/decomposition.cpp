#include "stringcone/decomposition.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "stringcone/errors.hpp"
#include "stringcone/rng.hpp"

namespace stringcone {

namespace {

RatVector toRational(const IntVector& v) {
  RatVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

std::string coordString(const IntVector& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

// gamma window: true = gamma in (0,1], false = gamma in [0,1).
bool windowIsHalfOpenHigh(Sign sign, const Rational& beta) {
  return sign == Sign::PlusXi ? beta.sign() < 0 : beta.sign() > 0;
}

bool inWindow(const Rational& gamma, bool halfOpenHigh) {
  if (halfOpenHigh) return gamma.sign() > 0 && gamma <= Rational(1);
  return gamma.sign() >= 0 && gamma < Rational(1);
}

BoxSet boxFromCandidates(const Triangulation& tri, const GenericDirection& dir,
                         int simplexIndex, Sign sign,
                         const std::vector<LatticePoint>& candidates) {
  const Simplex& sx = tri.simplex(simplexIndex);
  const int r = tri.cone().rank;
  BoxSet box{simplexIndex, sign, {}};
  for (const auto& cand : candidates) {
    RatVector gamma(r);
    bool inside = true;
    for (int i = 0; i < r && inside; ++i) {
      gamma[i] = Rational(intDot(sx.adjScaled[i], cand.coords), sx.latticeIndex);
      inside = inWindow(gamma[i], windowIsHalfOpenHigh(sign, dir.betas[simplexIndex][i]));
    }
    if (inside) box.points.push_back({cand, std::move(gamma)});
  }
  return box;
}

}  // namespace

std::vector<RatVector> xiCoordinates(const Triangulation& tri, const RatVector& xi) {
  const int r = tri.cone().rank;
  std::vector<RatVector> betas;
  betas.reserve(tri.simplices().size());
  for (const auto& sx : tri.simplices()) {
    RatVector b(r);
    for (int i = 0; i < r; ++i) {
      Rational w(0);
      for (int j = 0; j < r; ++j) w += Rational(sx.adjScaled[i][j]) * xi[j];
      b[i] = w / Rational(sx.latticeIndex);
    }
    betas.push_back(std::move(b));
  }
  return betas;
}

GenericDirection directionFromXi(const Triangulation& tri, RatVector xi) {
  if (static_cast<int>(xi.size()) != tri.cone().rank)
    throw std::invalid_argument("directionFromXi: wrong length");
  if (!contains(tri, xi, /*strict=*/true))
    throw GenericityFailure("xi is not strictly inside the cone");
  auto betas = xiCoordinates(tri, xi);
  for (size_t s = 0; s < betas.size(); ++s)
    for (const auto& b : betas[s])
      if (b.isZero())
        throw GenericityFailure("xi lies on a wall: zero coordinate in simplex " +
                                std::to_string(s));
  return {std::move(xi), std::move(betas), 0};
}

GenericDirection chooseXi(const Triangulation& tri, std::uint64_t seed, int maxRetries) {
  const GradedCone& cone = tri.cone();
  const int r = cone.rank;
  SeededRng rng(mixSeed(seed, "xi"));
  for (int attempt = 0; attempt < maxRetries; ++attempt) {
    RatVector xi(r, Rational(0));
    for (const auto& p : cone.points) {
      Rational c = rng.nextPositiveRational(64, 8);
      for (int k = 0; k < r; ++k) xi[k] += c * Rational(p[k]);
    }
    auto betas = xiCoordinates(tri, xi);
    bool generic = true;
    for (const auto& bs : betas)
      for (const auto& b : bs)
        if (b.isZero()) generic = false;
    if (generic) return {std::move(xi), std::move(betas), attempt};
  }
  throw GenericityFailure("chooseXi: no generic direction after " +
                          std::to_string(maxRetries) + " attempts (seed " +
                          std::to_string(seed) + ")");
}

BoxSet boxPoints(const Triangulation& tri, const GenericDirection& dir,
                 int simplexIndex, Sign sign) {
  auto candidates = latticePointsUpToDegree(tri, tri.cone().rank, false);
  return boxFromCandidates(tri, dir, simplexIndex, sign, candidates);
}

BoxDecomposition computeBoxDecomposition(const Triangulation& tri,
                                         const GenericDirection& dir) {
  auto candidates = latticePointsUpToDegree(tri, tri.cone().rank, false);
  BoxDecomposition out;
  for (int s = 0; s < static_cast<int>(tri.simplices().size()); ++s) {
    out.plus.push_back(boxFromCandidates(tri, dir, s, Sign::PlusXi, candidates));
    out.minus.push_back(boxFromCandidates(tri, dir, s, Sign::MinusXi, candidates));
  }
  return out;
}

PointDecomposition decomposePoint(const Triangulation& tri, const GenericDirection& dir,
                                  const IntVector& n, Sign sign) {
  const GradedCone& cone = tri.cone();
  const int r = cone.rank;
  RatVector slope(r);
  for (int k = 0; k < r; ++k)
    slope[k] = sign == Sign::PlusXi ? dir.xi[k] : -dir.xi[k];

  auto loc = locateSimplex(tri, perturb(toRational(n), slope));
  if (!loc)
    throw PointNotInDomain("decomposePoint: " + coordString(n) + " is not in the " +
                           (sign == Sign::PlusXi ? "cone" : "cone interior"));
  if (!loc->strictlyPositive)
    throw AmbiguousLocation("decomposePoint: perturbed point lies on a wall; "
                            "direction is not generic");

  const Simplex& sx = tri.simplex(loc->simplexIndex);
  PointDecomposition dec;
  dec.simplexIndex = loc->simplexIndex;
  dec.multiplicities.resize(r);
  IntVector base = n;
  for (int i = 0; i < r; ++i) {
    const Rational& x = loc->coords[i].constant;
    const Rational& beta = dir.betas[loc->simplexIndex][i];
    Int l = windowIsHalfOpenHigh(sign, beta) ? Int(x.ceil() - 1) : x.floor();
    if (l < 0) throw std::logic_error("decomposePoint: negative multiplicity");
    dec.multiplicities[i] = l;
    const IntVector& gen = cone.points[sx.indices[i]];
    for (int k = 0; k < r; ++k) base[k] -= l * gen[k];
  }
  dec.base.degree = cone.degreeOf(base);
  dec.base.coords = std::move(base);
  return dec;
}

PartitionReport verifyPartition(const Triangulation& tri, const GenericDirection& dir,
                                long long maxDegree, Sign sign) {
  const GradedCone& cone = tri.cone();
  const int r = cone.rank;
  PartitionReport rep;

  auto domainList = latticePointsUpToDegree(tri, maxDegree, sign == Sign::MinusXi);
  std::set<IntVector> domain;
  for (const auto& p : domainList) domain.insert(p.coords);
  rep.domainSize = static_cast<long long>(domain.size());

  auto boxes = computeBoxDecomposition(tri, dir);

  // Reverse direction: generate every translate b + sum l_i e_i of degree
  // <= maxDegree and count how often each lattice point appears.
  std::map<IntVector, long long> counts;
  for (const auto& box : boxes.forSign(sign)) {
    const Simplex& sx = tri.simplex(box.simplexIndex);
    for (const auto& bp : box.points) {
      long long budget = maxDegree - bp.point.degree;
      if (budget < 0) continue;
      IntVector current = bp.point.coords;
      std::function<void(int, long long)> rec = [&](int i, long long left) {
        if (i == r) {
          ++counts[current];
          return;
        }
        const IntVector& gen = cone.points[sx.indices[i]];
        for (long long l = 0; l <= left; ++l) {
          rec(i + 1, left - l);
          for (int k = 0; k < r; ++k) current[k] += gen[k];
        }
        for (int k = 0; k < r; ++k) current[k] -= Int(static_cast<long>(left + 1)) * gen[k];
      };
      rec(0, budget);
    }
  }

  for (const auto& [pt, c] : counts) {
    if (!domain.count(pt))
      rep.fail("generated point " + coordString(pt) + " is outside the domain");
    else if (c != 1)
      rep.fail("point " + coordString(pt) + " covered " + std::to_string(c) + " times");
  }
  for (const auto& pt : domain)
    if (!counts.count(pt)) rep.fail("point " + coordString(pt) + " is never covered");

  // Forward direction: the locator must invert the construction.
  for (const auto& pt : domain) {
    PointDecomposition dec;
    try {
      dec = decomposePoint(tri, dir, pt, sign);
    } catch (const Error& e) {
      rep.fail("decomposePoint failed on " + coordString(pt) + ": " + e.what());
      continue;
    }
    const auto& box = boxes.forSign(sign)[dec.simplexIndex];
    bool found = false;
    for (const auto& bp : box.points)
      if (bp.point.coords == dec.base.coords) found = true;
    if (!found) {
      rep.fail("base of " + coordString(pt) + " is not a box point");
      continue;
    }
    IntVector rebuilt = dec.base.coords;
    const Simplex& sx = tri.simplex(dec.simplexIndex);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k)
        rebuilt[k] += dec.multiplicities[i] * cone.points[sx.indices[i]][k];
    if (rebuilt != pt) rep.fail("reconstruction mismatch at " + coordString(pt));
  }
  return rep;
}

PsiMinimalityReport verifyPsiMinimality(const Triangulation& tri,
                                        const GenericDirection& dir,
                                        const IntVector& n, Sign sign) {
  const GradedCone& cone = tri.cone();
  const int r = cone.rank;
  const int d = cone.pointCount();
  PsiMinimalityReport rep;

  RatVector slope(r);
  for (int k = 0; k < r; ++k)
    slope[k] = sign == Sign::PlusXi ? dir.xi[k] : -dir.xi[k];

  PointDecomposition canonical = decomposePoint(tri, dir, n, sign);
  std::vector<Int> canonicalK(d, Int(0));
  {
    const Simplex& sx = tri.simplex(canonical.simplexIndex);
    for (int i = 0; i < r; ++i) canonicalK[sx.indices[i]] = canonical.multiplicities[i];
  }

  EpsNumber lhs = psiValue(tri, perturb(toRational(n), slope));
  long long degN = cone.degreeOf(n);

  auto boxes = computeBoxDecomposition(tri, dir);
  for (const auto& box : boxes.forSign(sign)) {
    for (const auto& bp : box.points) {
      long long budget = degN - bp.point.degree;
      if (budget < 0) continue;
      IntVector target(r);
      for (int k = 0; k < r; ++k) target[k] = n[k] - bp.point.coords[k];

      EpsNumber psiBase = psiValue(tri, perturb(toRational(bp.point.coords), slope));

      std::vector<Int> k(d, Int(0));
      std::function<void(int, long long, IntVector&)> rec = [&](int i, long long left,
                                                                IntVector& rem) {
        bool remZero = true;
        for (const auto& c : rem)
          if (c != 0) remZero = false;
        if (remZero && left == 0) {
          ++rep.representationCount;
          EpsNumber rhs = psiBase;
          for (int j = 0; j < d; ++j)
            if (k[j] != 0) rhs += EpsNumber(Rational(k[j]) * tri.heights().values[j]);
          bool isCanonical =
              (bp.point.coords == canonical.base.coords) && (k == canonicalK);
          // The lift is a maximum of linear pieces, hence subadditive: every
          // split is at least the lift value, and the canonical one attains it.
          if (lhs > rhs)
            rep.fail("lift inequality violated at representation of " + coordString(n));
          else if ((lhs == rhs) != isCanonical)
            rep.fail(std::string("equality ") + (isCanonical ? "missing" : "unexpected") +
                     " at a representation of " + coordString(n));
          return;
        }
        if (i == d || left == 0) return;
        const IntVector& gen = cone.points[i];
        for (long long m = 0; m <= left; ++m) {
          k[i] = Int(static_cast<long>(m));
          rec(i + 1, left - m, rem);
          for (int kk = 0; kk < r; ++kk) rem[kk] -= gen[kk];
        }
        for (int kk = 0; kk < r; ++kk) rem[kk] += Int(static_cast<long>(left + 1)) * gen[kk];
        k[i] = 0;
      };
      rec(0, budget, target);
    }
  }
  if (rep.representationCount == 0) rep.fail("no representation found, not even the canonical one");
  return rep;
}

}  // namespace stringcone
