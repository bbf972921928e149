#include "stringcone/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "stringcone/errors.hpp"

namespace stringcone {

namespace {

Rational dotIntRat(const IntVector& a, const RatVector& b) {
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

EpsNumber dotRatEps(const RatVector& a, const EpsVector& b) {
  EpsNumber s;
  for (size_t i = 0; i < a.size(); ++i) s += b[i] * a[i];
  return s;
}

std::string indexSetName(const std::vector<int>& indices) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i] + 1;
  os << "}";
  return os.str();
}

}  // namespace

bool Simplex::containsIndex(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

Triangulation buildTriangulation(const GradedCone& cone, const Heights& heights) {
  auto report = validate(cone);
  if (!report.ok) {
    std::string msg = "cone validation failed:";
    for (const auto& f : report.failures) msg += " " + f + ";";
    throw InvalidCone(msg);
  }
  const int r = cone.rank;
  const int d = cone.pointCount();
  if (static_cast<int>(heights.values.size()) != d)
    throw std::invalid_argument("buildTriangulation: one height per point required");

  Triangulation tri;
  tri.cone_ = cone;
  tri.heights_ = heights;

  bool anyIndependent = (r == 0);
  std::vector<bool> used(d, false);

  std::vector<int> subset;
  std::function<void(int)> scan = [&](int start) {
    if (static_cast<int>(subset.size()) == r) {
      std::vector<IntVector> cols(r, IntVector(r));
      for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) cols[i][j] = cone.points[subset[j]][i];
      if (r > 0 && intDet(cols) == 0) return;
      anyIndependent = true;

      RatMatrix rows(r, r);
      RatVector rhs(r);
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) rows.at(i, j) = Rational(cone.points[subset[i]][j]);
        rhs[i] = heights.values[subset[i]];
      }
      RatVector functional;
      if (r > 0) {
        auto sol = solveLinear(rows, rhs);
        functional = sol->x;  // unique: the generators are independent
      }

      bool strictBelow = true, weakBelow = true;
      int equalityAt = -1;
      for (int j = 0; j < d; ++j) {
        if (std::binary_search(subset.begin(), subset.end(), j)) continue;
        Rational v(0);
        for (int k = 0; k < r; ++k) v += functional[k] * Rational(cone.points[j][k]);
        auto cmp = v <=> heights.values[j];
        if (cmp == std::strong_ordering::greater) {
          strictBelow = weakBelow = false;
          break;
        }
        if (cmp == std::strong_ordering::equal) {
          strictBelow = false;
          equalityAt = j;
        }
      }
      if (weakBelow && !strictBelow) {
        throw NotStrictlyConvex(
            "heights are not strictly convex: the supporting functional of " +
            indexSetName(subset) + " also touches point " +
            std::to_string(equalityAt + 1));
      }
      if (strictBelow) {
        auto [absDet, adj] = scaledInverse(cols);
        Simplex sx;
        sx.indices = subset;
        sx.functional = std::move(functional);
        sx.latticeIndex = absDet;
        sx.adjScaled = std::move(adj);
        for (int idx : subset) used[idx] = true;
        tri.simplices_.push_back(std::move(sx));
      }
      return;
    }
    for (int i = start; i < d; ++i) {
      subset.push_back(i);
      scan(i + 1);
      subset.pop_back();
    }
  };
  scan(0);

  if (!anyIndependent)
    throw DegenerateConfiguration("points do not span the ambient space");
  if (tri.simplices_.empty())
    throw NotStrictlyConvex("heights induce no full-dimensional simplex cell");
  for (int j = 0; j < d; ++j)
    if (!used[j])
      throw NotStrictlyConvex("point " + std::to_string(j + 1) +
                              " is not a vertex of the induced subdivision");

  tri.interiorDir_.assign(r, Int(0));
  for (const auto& p : cone.points)
    for (int k = 0; k < r; ++k) tri.interiorDir_[k] += p[k];
  for (const auto& sx : tri.simplices_) {
    IntVector w(r);
    for (int i = 0; i < r; ++i) w[i] = intDot(sx.adjScaled[i], tri.interiorDir_);
    tri.interiorDirCoords_.push_back(std::move(w));
  }
  return tri;
}

std::optional<Location> locateSimplex(const Triangulation& tri, const EpsVector& p) {
  const int r = tri.cone().rank;
  if (static_cast<int>(p.size()) != r)
    throw std::invalid_argument("locateSimplex: wrong point length");

  std::optional<Location> weakMatch;
  for (size_t s = 0; s < tri.simplices().size(); ++s) {
    const Simplex& sx = tri.simplex(static_cast<int>(s));
    Rational scale(Int(1), sx.latticeIndex);
    EpsVector coords(r);
    bool nonneg = true, strict = true;
    for (int i = 0; i < r && nonneg; ++i) {
      EpsNumber w;
      for (int j = 0; j < r; ++j) w += p[j] * Rational(sx.adjScaled[i][j]);
      coords[i] = w * scale;
      if (coords[i] < EpsNumber()) nonneg = false;
      else if (!coords[i].isPositive()) strict = false;
    }
    if (!nonneg) continue;
    Location loc{static_cast<int>(s), std::move(coords), strict};
    // A strictly interior match excludes every other simplex cone.
    if (strict) return loc;
    if (!weakMatch) weakMatch = std::move(loc);
  }
  return weakMatch;
}

EpsNumber psiValue(const Triangulation& tri, const EpsVector& p) {
  if (!locateSimplex(tri, p))
    throw PointOutsideCone("psiValue: point is outside the cone");
  // Convex piecewise-linear functions are the maximum of their linear pieces.
  EpsNumber best;
  bool first = true;
  for (const auto& sx : tri.simplices()) {
    EpsNumber v = dotRatEps(sx.functional, p);
    if (first || v > best) {
      best = v;
      first = false;
    }
  }
  return best;
}

}  // namespace stringcone
