#include "stringcone/series.hpp"

#include <stdexcept>

namespace stringcone {

GradedPolynomial GradedPolynomial::monomial(int degree, Int coeff) {
  std::vector<Int> c(static_cast<size_t>(degree) + 1, Int(0));
  c.back() = std::move(coeff);
  return GradedPolynomial(std::move(c));
}

void GradedPolynomial::addToCoefficient(int degree, const Int& v) {
  if (degree < 0) throw std::invalid_argument("GradedPolynomial: negative degree");
  if (degree >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(degree) + 1, Int(0));
  c_[static_cast<size_t>(degree)] += v;
  trim();
}

GradedPolynomial GradedPolynomial::timesOneMinusTPower(int power, int truncateAt) const {
  // Binomial coefficients of (1-t)^power with alternating signs.
  std::vector<Int> binom(static_cast<size_t>(power) + 1);
  binom[0] = 1;
  for (int k = 1; k <= power; ++k)
    binom[static_cast<size_t>(k)] =
        binom[static_cast<size_t>(k - 1)] * (power - k + 1) / k;

  std::vector<Int> out(static_cast<size_t>(truncateAt) + 1, Int(0));
  for (int n = 0; n <= truncateAt; ++n) {
    Int acc(0);
    for (int k = 0; k <= power && k <= n; ++k) {
      Int term = binom[static_cast<size_t>(k)] * coefficient(n - k);
      if (k % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    out[static_cast<size_t>(n)] = acc;
  }
  return GradedPolynomial(std::move(out));
}

namespace {

GradedPolynomial degreeGenerating(const std::vector<BoxSet>& boxes) {
  GradedPolynomial p;
  for (const auto& box : boxes)
    for (const auto& bp : box.points)
      p.addToCoefficient(static_cast<int>(bp.point.degree), Int(1));
  return p;
}

}  // namespace

GradedPolynomial sPolynomial(const BoxDecomposition& boxes) {
  return degreeGenerating(boxes.plus);
}

GradedPolynomial tPolynomial(const BoxDecomposition& boxes) {
  return degreeGenerating(boxes.minus);
}

GradedPolynomial hilbertNumeratorTruncated(const Triangulation& tri, long long maxDegree,
                                           bool interiorOnly) {
  const int r = tri.cone().rank;
  if (maxDegree < r)
    throw std::invalid_argument("hilbertNumeratorTruncated: degree cap below rank");
  std::vector<Int> counts(static_cast<size_t>(maxDegree) + 1, Int(0));
  for (const auto& p : enumerateLatticePoints(tri, maxDegree)) {
    if (interiorOnly && !p.interior) continue;
    counts[static_cast<size_t>(p.degree)] += 1;
  }
  return GradedPolynomial(std::move(counts))
      .timesOneMinusTPower(r, static_cast<int>(maxDegree));
}

bool checkDuality(const GradedPolynomial& s, const GradedPolynomial& t, int rank) {
  if (s.degree() > rank || t.degree() > rank) return false;
  for (int k = 0; k <= rank; ++k)
    if (s.coefficient(k) != t.coefficient(rank - k)) return false;
  return true;
}

}  // namespace stringcone
