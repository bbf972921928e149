#pragma once

#include <vector>

#include "stringcone/decomposition.hpp"
#include "stringcone/rational.hpp"

namespace stringcone {

/// Dense univariate polynomial with integer coefficients, indexed by degree.
/// Trailing zeros are trimmed so the representation is canonical.
class GradedPolynomial {
 public:
  GradedPolynomial() = default;
  explicit GradedPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static GradedPolynomial one() { return GradedPolynomial({Int(1)}); }
  static GradedPolynomial monomial(int degree, Int coeff = Int(1));

  const std::vector<Int>& coefficients() const { return c_; }
  Int coefficient(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(c_.size())) return Int(0);
    return c_[static_cast<size_t>(degree)];
  }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool isZero() const { return c_.empty(); }

  void addToCoefficient(int degree, const Int& v);

  /// Multiplies by (1 - t)^power and truncates at the given degree.
  GradedPolynomial timesOneMinusTPower(int power, int truncateAt) const;

  friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
    return a.c_ == b.c_;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

/// S(t): generating polynomial of +xi box point degrees over all simplices.
GradedPolynomial sPolynomial(const BoxDecomposition& boxes);

/// T(t): generating polynomial of -xi box point degrees over all simplices.
GradedPolynomial tPolynomial(const BoxDecomposition& boxes);

/// Independent route to the same polynomials: count lattice points of the
/// cone (or its interior) per degree and multiply the counting series by
/// (1-t)^rank, truncated at degree maxDegree.
GradedPolynomial hilbertNumeratorTruncated(const Triangulation& tri, long long maxDegree,
                                           bool interiorOnly);

/// Degree-reflection identity: the coefficient of t^k in S equals the
/// coefficient of t^(rank-k) in T for all k.
bool checkDuality(const GradedPolynomial& s, const GradedPolynomial& t, int rank);

}  // namespace stringcone
