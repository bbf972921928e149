#include "stringcone/pipeline.hpp"

#include "stringcone/errors.hpp"
#include "stringcone/rng.hpp"

namespace stringcone {

ConeSession::ConeSession(GradedCone cone, SessionOptions options)
    : cone_(std::move(cone)), options_(std::move(options)) {
  degreeCap_ = options_.degreeCap >= 0 ? options_.degreeCap : 2LL * cone_.rank + 2;
  if (degreeCap_ < cone_.rank + 1)
    throw std::invalid_argument("degree cap must be at least rank + 1");
}

const ValidationReport& ConeSession::validation() {
  if (!validation_) validation_ = validate(cone_);
  return *validation_;
}

const Triangulation& ConeSession::triangulation() {
  if (tri_) return *tri_;
  if (!validation().ok) {
    std::string msg = "cone validation failed:";
    for (const auto& f : validation().failures) msg += " " + f + ";";
    throw InvalidCone(msg);
  }
  if (options_.heights) {
    if (static_cast<int>(options_.heights->size()) != cone_.pointCount())
      throw std::invalid_argument("one height per point required");
    tri_ = buildTriangulation(cone_, Heights{*options_.heights});
    heightRetries_ = 0;
    return *tri_;
  }
  SeededRng rng(mixSeed(options_.seed, "heights"));
  for (int attempt = 0; attempt < options_.heightRetryBudget; ++attempt) {
    RatVector h(cone_.pointCount());
    for (auto& v : h) v = Rational(rng.nextInt(0, (1 << 20) - 1));
    try {
      tri_ = buildTriangulation(cone_, Heights{std::move(h)});
      heightRetries_ = attempt;
      return *tri_;
    } catch (const NotStrictlyConvex&) {
      // resample
    }
  }
  throw NotStrictlyConvex("no strictly convex heights found after " +
                          std::to_string(options_.heightRetryBudget) +
                          " attempts (seed " + std::to_string(options_.seed) + ")");
}

int ConeSession::heightRetriesUsed() {
  triangulation();
  return heightRetries_;
}

const GenericDirection& ConeSession::direction() {
  if (!dir_) {
    if (options_.xi)
      dir_ = directionFromXi(triangulation(), *options_.xi);
    else
      dir_ = chooseXi(triangulation(), options_.seed, options_.xiRetryBudget);
  }
  return *dir_;
}

const BoxDecomposition& ConeSession::boxes() {
  if (!boxes_) boxes_ = computeBoxDecomposition(triangulation(), direction());
  return *boxes_;
}

const GradedPolynomial& ConeSession::sPoly() {
  if (!s_) s_ = sPolynomial(boxes());
  return *s_;
}

const GradedPolynomial& ConeSession::tPoly() {
  if (!t_) t_ = tPolynomial(boxes());
  return *t_;
}

void ConeSession::ensureQuotients() {
  if (ring_) return;
  const Triangulation& tri = triangulation();
  const BoxDecomposition& bx = boxes();

  auto attemptForms = [&](const std::vector<LinearFormZ>& forms) -> bool {
    auto ring = buildPresentation(tri, bx, forms, degreeCap_, Flavor::Full);
    auto interior = buildPresentation(tri, bx, forms, degreeCap_, Flavor::Interior);
    if (!ring.certified() || !interior.certified()) return false;
    auto pd = buildPairing(ring, interior);
    auto nd = checkNondegeneracy(pd);
    if (!nd.ok) return false;
    ring_ = std::move(ring);
    interior_ = std::move(interior);
    pairing_ = std::move(pd);
    nondeg_ = std::move(nd);
    return true;
  };

  if (options_.coefficients || options_.qMode) {
    std::vector<LinearFormZ> forms;
    if (options_.qMode) {
      forms = qSpecializedForms(cone_, tri.heights(), *options_.qMode);
    } else {
      if (static_cast<int>(options_.coefficients->size()) != cone_.pointCount())
        throw std::invalid_argument("one coefficient per point required");
      for (const auto& c : *options_.coefficients)
        if (c.isZero()) throw std::invalid_argument("coefficients must be nonzero");
      forms = makeForms(cone_, 0);
      for (auto& f : forms) f.coefficients = *options_.coefficients;
    }
    coefficientRetries_ = 0;
    if (!attemptForms(forms))
      throw NonGenericCoefficients(
          "fixed coefficients are not generic: quotient dimensions or pairing "
          "rank do not match the box data");
    return;
  }

  for (int attempt = 0; attempt < options_.coefficientRetryBudget; ++attempt) {
    auto forms = makeForms(cone_, mixSeed(options_.seed, "c" + std::to_string(attempt)));
    if (attemptForms(forms)) {
      coefficientRetries_ = attempt;
      return;
    }
  }
  throw NonGenericCoefficients("no generic coefficients after " +
                               std::to_string(options_.coefficientRetryBudget) +
                               " attempts (seed " + std::to_string(options_.seed) + ")");
}

const QuotientPresentation& ConeSession::ringQuotient() {
  ensureQuotients();
  return *ring_;
}

const QuotientPresentation& ConeSession::interiorQuotient() {
  ensureQuotients();
  return *interior_;
}

const std::vector<LinearFormZ>& ConeSession::forms() {
  ensureQuotients();
  return ring_->forms();
}

int ConeSession::coefficientRetriesUsed() {
  ensureQuotients();
  return coefficientRetries_;
}

const PairingData& ConeSession::pairing() {
  ensureQuotients();
  return *pairing_;
}

const NondegeneracyReport& ConeSession::nondegeneracy() {
  ensureQuotients();
  return *nondeg_;
}

}  // namespace stringcone
