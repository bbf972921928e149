#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "stringcone/pairing.hpp"
#include "stringcone/quotient.hpp"
#include "stringcone/series.hpp"

namespace stringcone {

struct SessionOptions {
  std::uint64_t seed = 0;
  long long degreeCap = -1;  // -1: use 2*rank + 2
  std::optional<RatVector> heights;
  std::optional<RatVector> xi;
  std::optional<RatVector> coefficients;
  std::optional<Rational> qMode;  // coefficients q^height, overrides sampling
  int heightRetryBudget = 8;
  int xiRetryBudget = 32;
  int coefficientRetryBudget = 8;
};

/// Drives the whole chain for one cone, stage by stage and lazily:
/// validation, triangulation (re-randomizing heights on strict-convexity
/// failures), generic direction, box decomposition, degree polynomials,
/// certified quotient presentations (re-randomizing coefficients on
/// genericity failures), and the pairing. Every randomized quantity and the
/// retry count that produced it are exposed for echoing into reports.
class ConeSession {
 public:
  ConeSession(GradedCone cone, SessionOptions options);

  const GradedCone& cone() const { return cone_; }
  long long degreeCap() const { return degreeCap_; }

  const ValidationReport& validation();
  /// Throws InvalidCone when validation fails; otherwise builds lazily.
  const Triangulation& triangulation();
  int heightRetriesUsed();
  const GenericDirection& direction();
  const BoxDecomposition& boxes();

  const GradedPolynomial& sPoly();
  const GradedPolynomial& tPoly();

  /// Certified quotient presentations for both flavors, sharing one set of
  /// forms; with sampled coefficients the session reseeds until both certify
  /// and the pairing is nondegenerate. Throws NonGenericCoefficients when
  /// the budget runs out or fixed coefficients fail.
  const QuotientPresentation& ringQuotient();
  const QuotientPresentation& interiorQuotient();
  const std::vector<LinearFormZ>& forms();
  int coefficientRetriesUsed();

  const PairingData& pairing();
  const NondegeneracyReport& nondegeneracy();

 private:
  void ensureQuotients();

  GradedCone cone_;
  SessionOptions options_;
  long long degreeCap_;

  std::optional<ValidationReport> validation_;
  std::optional<Triangulation> tri_;
  int heightRetries_ = 0;
  std::optional<GenericDirection> dir_;
  std::optional<BoxDecomposition> boxes_;
  std::optional<GradedPolynomial> s_, t_;
  std::optional<QuotientPresentation> ring_, interior_;
  int coefficientRetries_ = 0;
  std::optional<PairingData> pairing_;
  std::optional<NondegeneracyReport> nondeg_;
};

}  // namespace stringcone
