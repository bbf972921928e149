#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stringcone/decomposition.hpp"
#include "stringcone/series.hpp"

namespace stringcone {

/// Which graded module is presented: the semigroup ring spanned by all cone
/// lattice points, or the ideal spanned by the interior ones.
enum class Flavor { Full, Interior };

inline const char* flavorName(Flavor f) { return f == Flavor::Full ? "ring" : "interior"; }

/// One graded piece: the monomial basis x^n for lattice points n of a fixed
/// degree, in lexicographic coordinate order.
struct GradedSlice {
  long long degree = 0;
  std::vector<IntVector> monomials;
};

/// Degree-one element Z_j = sum_i <m_j, e_i> c_i x_i with m_j a standard
/// dual basis covector and nonzero coefficients c_i.
struct LinearFormZ {
  int index = 0;            // 0-based j
  IntVector dualVector;     // m_j
  RatVector coefficients;   // c_i, one per cone point
};

/// Forms with distinct random nonzero rational coefficients, deterministic
/// under the seed.
std::vector<LinearFormZ> makeForms(const GradedCone& cone, std::uint64_t seed);

/// Forms with the one-parameter specialization c_i = q^(height of e_i).
/// Requires integer heights and nonzero q.
std::vector<LinearFormZ> qSpecializedForms(const GradedCone& cone, const Heights& heights,
                                           const Rational& q);

/// Monomial bases of all graded pieces of the chosen module through the
/// truncation degree.
std::vector<GradedSlice> buildSlices(const Triangulation& tri, long long truncation,
                                     Flavor flavor);

/// Multiplication by one form as a map from the degree-l slice to the
/// degree-(l+1) slice, in the slice monomial bases.
RatMatrix multiplicationMatrix(const GradedCone& cone,
                               const std::vector<GradedSlice>& slices,
                               const LinearFormZ& form, long long l);

/// dims[k][l] = dimension of degree-l piece after dividing by the ideal
/// generated by the first k forms; computed as slice dimension minus the
/// exact rank of the stacked form images.
struct DimensionTable {
  std::vector<std::vector<long long>> dims;  // dims[k][l], k = 0..r, l = 0..truncation
};
DimensionTable quotientDimensions(const GradedCone& cone,
                                  const std::vector<GradedSlice>& slices,
                                  const std::vector<LinearFormZ>& forms,
                                  long long truncation);

struct RegularityReport {
  bool ok = true;
  // First (prefix k, degree l) where the dimension differs from the
  // difference pattern predicted by a regular sequence.
  std::optional<std::pair<int, long long>> firstFailure;
};

/// Certifies dims[k] = (1-t)^k * dims[0] through the truncation degree for
/// every prefix; this is the graded regularity criterion.
RegularityReport regularityCheck(const DimensionTable& table, int rank,
                                 long long truncation);

/// Full presentation of one quotient: slices, forms, dimension table, box
/// monomial basis, and cached generator images for normal forms. Certified
/// means the top-prefix dimensions match the box-point counts in every
/// degree, which pins the coefficients as generic.
class QuotientPresentation {
 public:
  Flavor flavor() const { return flavor_; }
  long long truncation() const { return truncation_; }
  const GradedCone& cone() const { return cone_; }
  const std::vector<GradedSlice>& slices() const { return slices_; }
  const std::vector<LinearFormZ>& forms() const { return forms_; }
  const DimensionTable& dimensions() const { return dims_; }
  /// Box-basis lattice points per degree (empty above the rank).
  const std::vector<std::vector<IntVector>>& boxBasis() const { return boxBasis_; }
  bool certified() const { return certified_; }
  const std::vector<std::string>& certificationFailures() const { return failures_; }

  friend QuotientPresentation buildPresentation(const Triangulation& tri,
                                                const BoxDecomposition& boxes,
                                                const std::vector<LinearFormZ>& forms,
                                                long long truncation, Flavor flavor);
  friend RatVector normalForm(const QuotientPresentation& pres, const IntVector& n);

 private:
  Flavor flavor_ = Flavor::Full;
  long long truncation_ = 0;
  GradedCone cone_;
  std::vector<GradedSlice> slices_;
  std::vector<LinearFormZ> forms_;
  DimensionTable dims_;
  std::vector<std::vector<IntVector>> boxBasis_;
  bool certified_ = false;
  std::vector<std::string> failures_;
  // Generator image columns per degree l <= rank: images of all forms applied
  // to all degree-(l-1) monomials, as vectors in the degree-l slice basis.
  std::vector<std::vector<RatVector>> generatorColumns_;
};

QuotientPresentation buildPresentation(const Triangulation& tri,
                                       const BoxDecomposition& boxes,
                                       const std::vector<LinearFormZ>& forms,
                                       long long truncation, Flavor flavor);

/// Coefficients expressing the class of x^n in the box monomial basis of its
/// degree, solved exactly. Requires a certified presentation and degree(n)
/// within the cached range; throws NonGenericCoefficients when the class is
/// not expressible (a genericity failure).
RatVector normalForm(const QuotientPresentation& pres, const IntVector& n);

}  // namespace stringcone
