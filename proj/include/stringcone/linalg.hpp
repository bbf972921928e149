#pragma once

#include <map>
#include <optional>
#include <vector>

#include "stringcone/rational.hpp"

namespace stringcone {

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }

  RatVector row(int i) const {
    return RatVector(entries_.begin() + static_cast<size_t>(i) * cols_,
                     entries_.begin() + static_cast<size_t>(i + 1) * cols_);
  }
  RatVector column(int j) const {
    RatVector c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  static RatMatrix fromRows(const std::vector<RatVector>& rows);
  static RatMatrix fromIntRows(const std::vector<IntVector>& rows);

 private:
  int rows_, cols_;
  std::vector<Rational> entries_;
};

struct LinearSolution {
  RatVector x;
  bool unique;  // false when the system is underdetermined
};

/// Exact solve of A x = b. Returns std::nullopt when inconsistent; for
/// underdetermined systems returns the solution with free variables set to
/// zero and unique=false. Throws std::invalid_argument on shape mismatch.
std::optional<LinearSolution> solveLinear(const RatMatrix& A, const RatVector& b);

/// Exact rank over the rationals.
int rank(const RatMatrix& A);

/// Incremental row-echelon basis: feed vectors one at a time and watch the
/// rank grow. Used wherever prefix ranks of a generator sequence are needed.
class RankAccumulator {
 public:
  explicit RankAccumulator(int dimension) : dim_(dimension) {}

  /// Returns true when the vector enlarged the span.
  bool insert(RatVector v);
  int rank() const { return static_cast<int>(pivots_.size()); }
  int dimension() const { return dim_; }

  /// Reduces v against the current basis in place; the result is zero iff v
  /// lies in the span.
  void reduce(RatVector& v) const;

 private:
  int dim_;
  std::map<int, RatVector> pivots_;  // pivot column -> normalized row
};

/// Exact determinant of a square integer matrix (Bareiss elimination).
Int intDet(const std::vector<IntVector>& m);

/// Signed adjugate of a nonsingular square integer matrix: returns
/// (|det|, M) with M * A = |det| * identity. Throws on singular input.
std::pair<Int, std::vector<IntVector>> scaledInverse(const std::vector<IntVector>& a);

Rational dot(const RatVector& a, const RatVector& b);
Int intDot(const IntVector& a, const IntVector& b);

}  // namespace stringcone
