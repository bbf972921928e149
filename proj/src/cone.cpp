#include "stringcone/cone.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "stringcone/errors.hpp"
#include "stringcone/triangulation.hpp"

namespace stringcone {

namespace {

bool fitsLong(const Int& z) { return z.fits_slong_p(); }

// Hermite-style incremental lattice basis over Z, kept upper triangular with
// positive pivots. Only the subgroup index is needed, not the full HNF.
class LatticeBasis {
 public:
  explicit LatticeBasis(int dim) : dim_(dim), rows_(dim) {}

  void insert(IntVector v) {
    for (int col = 0; col < dim_; ++col) {
      if (v[col] == 0) continue;
      if (rows_[col].empty()) {
        if (v[col] < 0)
          for (auto& x : v) x = -x;
        rows_[col] = std::move(v);
        return;
      }
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                 rows_[col][col].get_mpz_t(), v[col].get_mpz_t());
      Int a = rows_[col][col] / g, b = v[col] / g;
      IntVector merged(dim_), rest(dim_);
      for (int j = 0; j < dim_; ++j) {
        merged[j] = s * rows_[col][j] + t * v[j];
        rest[j] = a * v[j] - b * rows_[col][j];
      }
      rows_[col] = std::move(merged);
      v = std::move(rest);
    }
  }

  /// Index of the generated subgroup in Z^dim, or 0 when rank deficient.
  Int index() const {
    Int idx(1);
    for (int col = 0; col < dim_; ++col) {
      if (rows_[col].empty()) return Int(0);
      idx *= rows_[col][col];
    }
    return idx;
  }

 private:
  int dim_;
  std::vector<IntVector> rows_;
};

// Iterates the integer points of the bounding box of the degree-<=D slab,
// pruning coordinate prefixes whose attainable degree range misses [0, D].
// Coordinates are handed to the callback in ascending lexicographic order.
void scanDegreeSlab(const GradedCone& cone, long long maxDegree,
                    const std::function<void(const std::vector<long long>&, long long)>& emit) {
  const int r = cone.rank;
  if (r == 0) {
    emit({}, 0);
    return;
  }
  std::vector<long long> lo(r, 0), hi(r, 0), deg(r);
  for (int k = 0; k < r; ++k) {
    if (!fitsLong(cone.degree[k]))
      throw Error("enumeration: degree covector entry too large");
    deg[k] = cone.degree[k].get_si();
  }
  for (const auto& p : cone.points)
    for (int k = 0; k < r; ++k) {
      if (!fitsLong(p[k])) throw Error("enumeration: point coordinate too large");
      long long c = p[k].get_si();
      lo[k] = std::min(lo[k], maxDegree * c);
      hi[k] = std::max(hi[k], maxDegree * c);
    }

  // Attainable degree contribution of coordinates k..r-1.
  std::vector<long long> sufMin(r + 1, 0), sufMax(r + 1, 0);
  for (int k = r - 1; k >= 0; --k) {
    long long a = deg[k] * lo[k], b = deg[k] * hi[k];
    sufMin[k] = sufMin[k + 1] + std::min(a, b);
    sufMax[k] = sufMax[k + 1] + std::max(a, b);
  }

  std::vector<long long> x(r, 0);
  std::function<void(int, long long)> rec = [&](int k, long long partialDeg) {
    if (partialDeg + sufMax[k] < 0 || partialDeg + sufMin[k] > maxDegree) return;
    if (k == r) {
      emit(x, partialDeg);
      return;
    }
    for (long long v = lo[k]; v <= hi[k]; ++v) {
      x[k] = v;
      rec(k + 1, partialDeg + deg[k] * v);
    }
  };
  rec(0, 0);
}

IntVector toIntVector(const std::vector<long long>& v) {
  IntVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Int(static_cast<long>(v[i]));
  return out;
}

}  // namespace

long long GradedCone::degreeOf(const IntVector& v) const {
  Int d = intDot(degree, v);
  if (!fitsLong(d)) throw Error("degreeOf: degree out of range");
  return d.get_si();
}

Rational GradedCone::rationalDegreeOf(const RatVector& v) const {
  Rational s(0);
  for (int k = 0; k < rank; ++k) s += Rational(degree[k]) * v[k];
  return s;
}

ValidationReport validate(const GradedCone& cone) {
  ValidationReport rep;
  const int r = cone.rank;
  if (r < 0) {
    rep.fail("rank must be nonnegative");
    return rep;
  }
  if (static_cast<int>(cone.degree.size()) != r) {
    rep.fail("degree covector has wrong length");
    return rep;
  }
  for (const auto& v : cone.rayGenerators)
    if (static_cast<int>(v.size()) != r) {
      rep.fail("ray generator has wrong length");
      return rep;
    }
  for (const auto& v : cone.points)
    if (static_cast<int>(v.size()) != r) {
      rep.fail("point has wrong length");
      return rep;
    }

  if (r > 0 && cone.rayGenerators.empty()) rep.fail("no ray generators given");

  for (const auto& v : cone.rayGenerators)
    if (intDot(cone.degree, v) != 1) {
      rep.fail("some ray generator does not have degree 1");
      break;
    }
  for (const auto& v : cone.points)
    if (intDot(cone.degree, v) != 1) {
      rep.fail("some point does not have degree 1");
      break;
    }

  for (const auto& ray : cone.rayGenerators) {
    if (std::find(cone.points.begin(), cone.points.end(), ray) == cone.points.end()) {
      rep.fail("points do not include every ray generator");
      break;
    }
  }

  {
    std::set<IntVector> uniq(cone.points.begin(), cone.points.end());
    if (uniq.size() != cone.points.size()) rep.fail("points are not distinct");
  }

  const int d = cone.pointCount();

  // Pointedness: the cone contains a line iff 0 is a convex combination of
  // the points; by Caratheodory it is enough to test affinely independent
  // subsets of size <= r+1, where the combination is unique if it exists.
  {
    bool pointed = true;
    std::vector<int> subset;
    std::function<void(int)> search = [&](int start) {
      if (!pointed) return;
      if (!subset.empty()) {
        const int k = static_cast<int>(subset.size());
        RatMatrix A(r + 1, k);
        for (int j = 0; j < k; ++j) {
          for (int i = 0; i < r; ++i) A.at(i, j) = Rational(cone.points[subset[j]][i]);
          A.at(r, j) = Rational(1);
        }
        RatVector rhs(r + 1, Rational(0));
        rhs[r] = Rational(1);
        auto sol = solveLinear(A, rhs);
        if (sol && sol->unique) {
          bool allNonneg = true;
          for (const auto& c : sol->x)
            if (c.sign() < 0) allNonneg = false;
          if (allNonneg) {
            pointed = false;
            return;
          }
        }
      }
      if (static_cast<int>(subset.size()) == r + 1) return;
      for (int i = start; i < d; ++i) {
        subset.push_back(i);
        search(i + 1);
        subset.pop_back();
      }
    };
    search(0);
    if (!pointed) rep.fail("cone is not pointed");
  }

  // Full dimension over Q.
  bool spans = rank(RatMatrix::fromIntRows(cone.points)) == r;
  if (r > 0 && !spans) rep.fail("points do not span the ambient space");

  // Integral surjectivity: the group generated by the cone's lattice points
  // must be the full lattice. Points of degree <= r generate that group, so
  // it suffices to run a Hermite reduction over them. The cheap determinant
  // gcd over r-subsets of the configuration settles the common case first.
  if (spans && r > 0) {
    Int minorGcd(0);
    std::vector<int> subset;
    std::function<void(int)> dets = [&](int start) {
      if (static_cast<int>(subset.size()) == r) {
        std::vector<IntVector> m(r);
        for (int i = 0; i < r; ++i) m[i] = cone.points[subset[i]];
        Int dv = intDet(m);
        if (dv < 0) dv = -dv;
        mpz_gcd(minorGcd.get_mpz_t(), minorGcd.get_mpz_t(), dv.get_mpz_t());
        return;
      }
      for (int i = start; i < d; ++i) {
        subset.push_back(i);
        dets(i + 1);
        subset.pop_back();
      }
    };
    dets(0);

    bool surjective = (minorGcd == 1);
    if (!surjective) {
      // Deeper points can still generate the lattice. Collect all full-rank
      // r-subsets as membership witnesses and scan the degree-<=r slab.
      std::vector<std::pair<Int, std::vector<IntVector>>> witnesses;
      std::function<void(int)> collect = [&](int start) {
        if (static_cast<int>(subset.size()) == r) {
          std::vector<IntVector> cols(r, IntVector(r));
          for (int j = 0; j < r; ++j)
            for (int i = 0; i < r; ++i) cols[i][j] = cone.points[subset[j]][i];
          if (intDet(cols) != 0) witnesses.push_back(scaledInverse(cols));
          return;
        }
        for (int i = start; i < d; ++i) {
          subset.push_back(i);
          collect(i + 1);
          subset.pop_back();
        }
      };
      collect(0);

      LatticeBasis basis(r);
      scanDegreeSlab(cone, r, [&](const std::vector<long long>& x, long long) {
        IntVector p = toIntVector(x);
        for (const auto& [det, adj] : witnesses) {
          bool inside = true;
          for (int i = 0; i < r && inside; ++i)
            if (intDot(adj[i], p) < 0) inside = false;
          if (inside) {
            basis.insert(p);
            return;
          }
        }
      });
      surjective = (basis.index() == 1);
    }
    if (!surjective) rep.fail("lattice points generate a proper sublattice");
  }

  return rep;
}

bool contains(const Triangulation& tri, const RatVector& p, bool strict) {
  const GradedCone& cone = tri.cone();
  if (static_cast<int>(p.size()) != cone.rank)
    throw std::invalid_argument("contains: wrong point length");
  const auto& simplices = tri.simplices();
  for (size_t s = 0; s < simplices.size(); ++s) {
    const Simplex& sx = simplices[s];
    bool ok = true;
    for (int i = 0; i < cone.rank && ok; ++i) {
      Rational w(0);
      for (int j = 0; j < cone.rank; ++j) w += Rational(sx.adjScaled[i][j]) * p[j];
      if (!strict) {
        if (w.sign() < 0) ok = false;
      } else {
        // Coordinate of p - eps * interiorDirection must be >= 0 in eps order.
        int ws = w.sign();
        if (ws < 0 || (ws == 0 && tri.interiorDirCoords()[s][i] > 0)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::vector<EnumeratedPoint> enumerateLatticePoints(const Triangulation& tri,
                                                    long long maxDegree) {
  if (maxDegree < 0) throw std::invalid_argument("enumeration: negative degree cap");
  const GradedCone& cone = tri.cone();
  const int r = cone.rank;
  const auto& simplices = tri.simplices();
  const size_t ns = simplices.size();

  // Fast integer path: simplex data as machine integers when they fit.
  std::vector<std::vector<std::vector<long long>>> adj(ns);
  std::vector<std::vector<long long>> dirCoords(ns);
  for (size_t s = 0; s < ns; ++s) {
    adj[s].assign(r, std::vector<long long>(r));
    dirCoords[s].assign(r, 0);
    for (int i = 0; i < r; ++i) {
      if (!fitsLong(tri.interiorDirCoords()[s][i]))
        throw Error("enumeration: simplex data out of machine range");
      dirCoords[s][i] = tri.interiorDirCoords()[s][i].get_si();
      for (int j = 0; j < r; ++j) {
        if (!fitsLong(simplices[s].adjScaled[i][j]))
          throw Error("enumeration: simplex data out of machine range");
        adj[s][i][j] = simplices[s].adjScaled[i][j].get_si();
      }
    }
  }

  std::vector<EnumeratedPoint> out;
  scanDegreeSlab(cone, maxDegree, [&](const std::vector<long long>& x, long long deg) {
    if (deg < 0 || deg > maxDegree) return;
    bool inside = false, interior = false;
    for (size_t s = 0; s < ns && !(inside && interior); ++s) {
      bool in = true, strict = true;
      for (int i = 0; i < r && (in || strict); ++i) {
        long long w = 0;
        for (int j = 0; j < r; ++j) w += adj[s][i][j] * x[j];
        if (w < 0) {
          in = strict = false;
        } else if (w == 0 && dirCoords[s][i] > 0) {
          strict = false;
        }
      }
      inside = inside || in;
      interior = interior || (in && strict);
    }
    if (inside) out.push_back({toIntVector(x), deg, interior});
  });
  return out;
}

std::vector<LatticePoint> latticePointsUpToDegree(const Triangulation& tri,
                                                  long long maxDegree,
                                                  bool interiorOnly) {
  std::vector<LatticePoint> out;
  for (auto& e : enumerateLatticePoints(tri, maxDegree)) {
    if (interiorOnly && !e.interior) continue;
    out.push_back({std::move(e.coords), e.degree});
  }
  return out;
}

}  // namespace stringcone
