#include "stringcone/linalg.hpp"

#include <stdexcept>

namespace stringcone {

RatMatrix RatMatrix::fromRows(const std::vector<RatVector>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("RatMatrix: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::fromIntRows(const std::vector<IntVector>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("RatMatrix: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = Rational(rows[i][j]);
  }
  return m;
}

std::optional<LinearSolution> solveLinear(const RatMatrix& A, const RatVector& b) {
  if (A.rows() != static_cast<int>(b.size()))
    throw std::invalid_argument("solveLinear: row count does not match rhs length");

  const int m = A.rows(), n = A.cols();
  // Augmented matrix, eliminated in place.
  std::vector<RatVector> aug(m, RatVector(n + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = A.at(i, j);
    aug[i][n] = b[i];
  }

  std::vector<int> pivotCol;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int p = -1;
    for (int i = row; i < m; ++i)
      if (!aug[i][col].isZero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(aug[p], aug[row]);
    Rational inv = Rational(1) / aug[row][col];
    for (int j = col; j <= n; ++j) aug[row][j] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || aug[i][col].isZero()) continue;
      Rational f = aug[i][col];
      for (int j = col; j <= n; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivotCol.push_back(col);
    ++row;
  }

  for (int i = row; i < m; ++i)
    if (!aug[i][n].isZero()) return std::nullopt;

  LinearSolution sol;
  sol.x.assign(n, Rational(0));
  for (size_t k = 0; k < pivotCol.size(); ++k) sol.x[pivotCol[k]] = aug[k][n];
  sol.unique = static_cast<int>(pivotCol.size()) == n;
  return sol;
}

bool RankAccumulator::insert(RatVector v) {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("RankAccumulator: wrong vector length");
  reduce(v);
  int pivot = -1;
  for (int j = 0; j < dim_; ++j)
    if (!v[j].isZero()) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  Rational inv = Rational(1) / v[pivot];
  for (int j = pivot; j < dim_; ++j) v[j] *= inv;
  pivots_.emplace(pivot, std::move(v));
  return true;
}

void RankAccumulator::reduce(RatVector& v) const {
  for (const auto& [col, row] : pivots_) {
    if (v[col].isZero()) continue;
    Rational f = v[col];
    for (int j = col; j < dim_; ++j) v[j] -= f * row[j];
  }
}

int rank(const RatMatrix& A) {
  RankAccumulator acc(A.cols());
  for (int i = 0; i < A.rows(); ++i) acc.insert(A.row(i));
  return acc.rank();
}

Int intDet(const std::vector<IntVector>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Int(1);
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("intDet: matrix not square");

  std::vector<IntVector> a = m;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return Int(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

std::pair<Int, std::vector<IntVector>> scaledInverse(const std::vector<IntVector>& a) {
  const int n = static_cast<int>(a.size());
  Int det = intDet(a);
  if (det == 0) throw std::invalid_argument("scaledInverse: singular matrix");
  Int absDet = det < 0 ? Int(-det) : det;

  if (n == 0) return {Int(1), {}};

  // Solve A X = |det| * I exactly; entries of X are integers (signed adjugate).
  RatMatrix A = RatMatrix::fromIntRows(a);
  std::vector<IntVector> inv(n, IntVector(n));
  for (int col = 0; col < n; ++col) {
    RatVector rhs(n, Rational(0));
    rhs[col] = Rational(absDet);
    auto sol = solveLinear(A, rhs);
    if (!sol || !sol->unique)
      throw std::invalid_argument("scaledInverse: singular matrix");
    for (int i = 0; i < n; ++i) {
      if (!sol->x[i].isInteger())
        throw std::logic_error("scaledInverse: non-integral adjugate entry");
      inv[i][col] = sol->x[i].numerator();
    }
  }
  return {absDet, inv};
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int intDot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("intDot: length mismatch");
  Int s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace stringcone
