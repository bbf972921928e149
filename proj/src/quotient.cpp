#include "stringcone/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "stringcone/errors.hpp"
#include "stringcone/rng.hpp"

namespace stringcone {

namespace {

Int intPow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// Entry of form j on the variable of point i.
Rational formEntry(const GradedCone& cone, const LinearFormZ& z, int i) {
  return Rational(intDot(z.dualVector, cone.points[i])) * z.coefficients[i];
}

using SliceIndex = std::map<IntVector, int>;

SliceIndex indexSlice(const GradedSlice& slice) {
  SliceIndex idx;
  for (int i = 0; i < static_cast<int>(slice.monomials.size()); ++i)
    idx.emplace(slice.monomials[i], i);
  return idx;
}

// Image of Z * x^m as a vector in the basis of the target slice.
RatVector imageVector(const GradedCone& cone, const LinearFormZ& z, const IntVector& m,
                      const SliceIndex& target, int targetDim) {
  RatVector v(targetDim, Rational(0));
  IntVector shifted(cone.rank);
  for (int i = 0; i < cone.pointCount(); ++i) {
    Rational entry = formEntry(cone, z, i);
    if (entry.isZero()) continue;
    for (int k = 0; k < cone.rank; ++k) shifted[k] = m[k] + cone.points[i][k];
    auto it = target.find(shifted);
    if (it == target.end())
      throw std::logic_error("imageVector: product left the module");
    v[it->second] += entry;
  }
  return v;
}

}  // namespace

std::vector<LinearFormZ> makeForms(const GradedCone& cone, std::uint64_t seed) {
  const int r = cone.rank;
  const int d = cone.pointCount();
  SeededRng rng(mixSeed(seed, "coefficients"));

  RatVector coeffs(d);
  std::set<Rational> seen;
  for (int i = 0; i < d; ++i) {
    Rational c;
    do {
      c = Rational(rng.nextInt(1, 1 << 9), rng.nextInt(1, 4));
    } while (seen.count(c));
    seen.insert(c);
    coeffs[i] = c;
  }

  std::vector<LinearFormZ> forms(r);
  for (int j = 0; j < r; ++j) {
    forms[j].index = j;
    forms[j].dualVector.assign(r, Int(0));
    forms[j].dualVector[j] = 1;
    forms[j].coefficients = coeffs;
  }
  return forms;
}

std::vector<LinearFormZ> qSpecializedForms(const GradedCone& cone, const Heights& heights,
                                           const Rational& q) {
  const int r = cone.rank;
  const int d = cone.pointCount();
  if (q.isZero()) throw std::invalid_argument("qSpecializedForms: q must be nonzero");
  if (static_cast<int>(heights.values.size()) != d)
    throw std::invalid_argument("qSpecializedForms: one height per point required");

  RatVector coeffs(d);
  for (int i = 0; i < d; ++i) {
    const Rational& h = heights.values[i];
    if (!h.isInteger())
      throw std::invalid_argument("qSpecializedForms: heights must be integers");
    Int e = h.numerator();
    bool negative = e < 0;
    unsigned long ue = (negative ? Int(-e) : e).get_ui();
    Rational p(intPow(q.numerator(), ue), intPow(q.denominator(), ue));
    coeffs[i] = negative ? Rational(1) / p : p;
  }

  std::vector<LinearFormZ> forms(r);
  for (int j = 0; j < r; ++j) {
    forms[j].index = j;
    forms[j].dualVector.assign(r, Int(0));
    forms[j].dualVector[j] = 1;
    forms[j].coefficients = coeffs;
  }
  return forms;
}

std::vector<GradedSlice> buildSlices(const Triangulation& tri, long long truncation,
                                     Flavor flavor) {
  if (truncation < 0) throw std::invalid_argument("buildSlices: negative truncation");
  std::vector<GradedSlice> slices(static_cast<size_t>(truncation) + 1);
  for (long long l = 0; l <= truncation; ++l) slices[static_cast<size_t>(l)].degree = l;
  for (auto& p : enumerateLatticePoints(tri, truncation)) {
    if (flavor == Flavor::Interior && !p.interior) continue;
    slices[static_cast<size_t>(p.degree)].monomials.push_back(std::move(p.coords));
  }
  // The scan is lexicographic, so each slice is already sorted.
  return slices;
}

RatMatrix multiplicationMatrix(const GradedCone& cone,
                               const std::vector<GradedSlice>& slices,
                               const LinearFormZ& form, long long l) {
  if (l + 1 >= static_cast<long long>(slices.size()))
    throw std::invalid_argument("multiplicationMatrix: slices not built far enough");
  const GradedSlice& src = slices[static_cast<size_t>(l)];
  const GradedSlice& dst = slices[static_cast<size_t>(l + 1)];
  SliceIndex target = indexSlice(dst);
  const int rows = static_cast<int>(dst.monomials.size());
  RatMatrix m(rows, static_cast<int>(src.monomials.size()));
  for (int col = 0; col < static_cast<int>(src.monomials.size()); ++col) {
    RatVector v = imageVector(cone, form, src.monomials[col], target, rows);
    for (int i = 0; i < rows; ++i) m.at(i, col) = std::move(v[i]);
  }
  return m;
}

DimensionTable quotientDimensions(const GradedCone& cone,
                                  const std::vector<GradedSlice>& slices,
                                  const std::vector<LinearFormZ>& forms,
                                  long long truncation) {
  const int r = static_cast<int>(forms.size());
  DimensionTable table;
  table.dims.assign(static_cast<size_t>(r) + 1,
                    std::vector<long long>(static_cast<size_t>(truncation) + 1, 0));

  for (long long l = 0; l <= truncation; ++l) {
    const GradedSlice& slice = slices[static_cast<size_t>(l)];
    const int dim = static_cast<int>(slice.monomials.size());
    table.dims[0][static_cast<size_t>(l)] = dim;
    if (r == 0) continue;

    RankAccumulator acc(dim);
    SliceIndex target = indexSlice(slice);
    for (int k = 1; k <= r; ++k) {
      if (l >= 1) {
        const GradedSlice& src = slices[static_cast<size_t>(l - 1)];
        for (const auto& m : src.monomials)
          acc.insert(imageVector(cone, forms[static_cast<size_t>(k - 1)], m, target, dim));
      }
      table.dims[static_cast<size_t>(k)][static_cast<size_t>(l)] = dim - acc.rank();
    }
  }
  return table;
}

RegularityReport regularityCheck(const DimensionTable& table, int rank,
                                 long long truncation) {
  RegularityReport rep;
  const auto& f0 = table.dims[0];
  // Pascal column for (1-t)^k, rebuilt per prefix.
  for (int k = 1; k <= rank; ++k) {
    std::vector<Int> binom(static_cast<size_t>(k) + 1);
    binom[0] = 1;
    for (int j = 1; j <= k; ++j)
      binom[static_cast<size_t>(j)] = binom[static_cast<size_t>(j - 1)] * (k - j + 1) / j;
    for (long long l = 0; l <= truncation; ++l) {
      Int expected(0);
      for (int j = 0; j <= k && j <= l; ++j) {
        Int term = binom[static_cast<size_t>(j)] * Int(static_cast<long>(f0[static_cast<size_t>(l - j)]));
        if (j % 2 == 0)
          expected += term;
        else
          expected -= term;
      }
      if (expected != Int(static_cast<long>(table.dims[static_cast<size_t>(k)][static_cast<size_t>(l)]))) {
        rep.ok = false;
        rep.firstFailure = {k, l};
        return rep;
      }
    }
  }
  return rep;
}

QuotientPresentation buildPresentation(const Triangulation& tri,
                                       const BoxDecomposition& boxes,
                                       const std::vector<LinearFormZ>& forms,
                                       long long truncation, Flavor flavor) {
  const GradedCone& cone = tri.cone();
  const int r = cone.rank;
  if (static_cast<int>(forms.size()) != r)
    throw std::invalid_argument("buildPresentation: need one form per rank");

  QuotientPresentation pres;
  pres.flavor_ = flavor;
  pres.truncation_ = truncation;
  pres.cone_ = cone;
  pres.forms_ = forms;
  pres.slices_ = buildSlices(tri, truncation, flavor);
  pres.dims_ = quotientDimensions(cone, pres.slices_, forms, truncation);

  // Box monomial basis per degree, from the sign matching the flavor.
  pres.boxBasis_.assign(static_cast<size_t>(truncation) + 1, {});
  Sign sign = flavor == Flavor::Full ? Sign::PlusXi : Sign::MinusXi;
  for (const auto& box : boxes.forSign(sign))
    for (const auto& bp : box.points)
      if (bp.point.degree <= truncation)
        pres.boxBasis_[static_cast<size_t>(bp.point.degree)].push_back(bp.point.coords);
  for (auto& basis : pres.boxBasis_) std::sort(basis.begin(), basis.end());

  pres.certified_ = true;
  for (long long l = 0; l <= truncation; ++l) {
    long long quotientDim = pres.dims_.dims.back()[static_cast<size_t>(l)];
    long long boxCount = static_cast<long long>(pres.boxBasis_[static_cast<size_t>(l)].size());
    if (quotientDim != boxCount) {
      pres.certified_ = false;
      pres.failures_.push_back("degree " + std::to_string(l) + ": quotient dimension " +
                               std::to_string(quotientDim) + " != box count " +
                               std::to_string(boxCount));
    }
  }

  // Generator image cache for normal forms, degrees up to the rank.
  long long cacheTop = std::min<long long>(r, truncation);
  pres.generatorColumns_.assign(static_cast<size_t>(cacheTop) + 1, {});
  for (long long l = 1; l <= cacheTop; ++l) {
    const GradedSlice& src = pres.slices_[static_cast<size_t>(l - 1)];
    const GradedSlice& dst = pres.slices_[static_cast<size_t>(l)];
    SliceIndex target = indexSlice(dst);
    const int dim = static_cast<int>(dst.monomials.size());
    for (const auto& form : forms)
      for (const auto& m : src.monomials)
        pres.generatorColumns_[static_cast<size_t>(l)].push_back(
            imageVector(cone, form, m, target, dim));
  }
  return pres;
}

RatVector normalForm(const QuotientPresentation& pres, const IntVector& n) {
  if (!pres.certified_)
    throw NonGenericCoefficients("normalForm: presentation is not certified generic");
  long long l = pres.cone_.degreeOf(n);
  if (l < 0 || l >= static_cast<long long>(pres.generatorColumns_.size()))
    throw std::invalid_argument("normalForm: degree outside the cached range");

  const GradedSlice& slice = pres.slices_[static_cast<size_t>(l)];
  auto it = std::lower_bound(slice.monomials.begin(), slice.monomials.end(), n);
  if (it == slice.monomials.end() || *it != n)
    throw std::invalid_argument("normalForm: monomial is not in the module");
  const int row = static_cast<int>(it - slice.monomials.begin());
  const int dim = static_cast<int>(slice.monomials.size());

  const auto& basis = pres.boxBasis_[static_cast<size_t>(l)];
  std::vector<int> boxRows;
  for (const auto& b : basis) {
    auto bit = std::lower_bound(slice.monomials.begin(), slice.monomials.end(), b);
    boxRows.push_back(static_cast<int>(bit - slice.monomials.begin()));
  }
  std::vector<bool> isBoxRow(dim, false);
  for (int b : boxRows) isBoxRow[static_cast<size_t>(b)] = true;

  const auto& gens = pres.generatorColumns_[static_cast<size_t>(l)];
  const int numGen = static_cast<int>(gens.size());

  // Solve for a combination of generator images matching x^n outside the box
  // rows; the residue on the box rows is the normal form.
  std::vector<int> restRows;
  for (int i = 0; i < dim; ++i)
    if (!isBoxRow[static_cast<size_t>(i)]) restRows.push_back(i);

  RatMatrix A(static_cast<int>(restRows.size()), numGen);
  for (int c = 0; c < numGen; ++c)
    for (int i = 0; i < static_cast<int>(restRows.size()); ++i)
      A.at(i, c) = gens[static_cast<size_t>(c)][static_cast<size_t>(restRows[i])];
  RatVector rhs(restRows.size(), Rational(0));
  for (int i = 0; i < static_cast<int>(restRows.size()); ++i)
    if (restRows[i] == row) rhs[static_cast<size_t>(i)] = Rational(1);

  auto sol = solveLinear(A, rhs);
  if (!sol)
    throw NonGenericCoefficients("normalForm: class is not expressible in the box basis");

  RatVector alpha(basis.size(), Rational(0));
  for (size_t b = 0; b < basis.size(); ++b) {
    Rational v = boxRows[b] == row ? Rational(1) : Rational(0);
    for (int c = 0; c < numGen; ++c)
      v -= gens[static_cast<size_t>(c)][static_cast<size_t>(boxRows[b])] * sol->x[static_cast<size_t>(c)];
    alpha[b] = v;
  }
  return alpha;
}

}  // namespace stringcone
