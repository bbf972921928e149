#include "stringcone/pairing.hpp"

#include <algorithm>

#include "stringcone/errors.hpp"

namespace stringcone {

PairingData buildPairing(const QuotientPresentation& ring,
                         const QuotientPresentation& interior) {
  if (ring.flavor() != Flavor::Full || interior.flavor() != Flavor::Interior)
    throw std::invalid_argument("buildPairing: expects a ring and an interior presentation");
  if (!ring.certified() || !interior.certified())
    throw PresentationNotCertified("buildPairing: both presentations must be certified");

  const GradedCone& cone = ring.cone();
  const int r = cone.rank;
  if (static_cast<long long>(r) > ring.truncation() ||
      static_cast<long long>(r) > interior.truncation())
    throw std::invalid_argument("buildPairing: truncation below the rank");

  const auto& socleBasis = interior.boxBasis()[static_cast<size_t>(r)];
  if (socleBasis.size() != 1)
    throw PresentationNotCertified(
        "buildPairing: top interior degree is not one-dimensional");

  PairingData data;
  data.soclePoint = socleBasis[0];

  for (int l = 0; l <= r; ++l) {
    const auto& rows = ring.boxBasis()[static_cast<size_t>(l)];
    const auto& cols = interior.boxBasis()[static_cast<size_t>(r - l)];
    RatMatrix P(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t a = 0; a < rows.size(); ++a) {
      for (size_t b = 0; b < cols.size(); ++b) {
        // The product of a cone monomial and an interior monomial is again
        // interior, so it reduces in the interior quotient.
        IntVector product(r);
        for (int k = 0; k < r; ++k) product[k] = rows[a][k] + cols[b][k];
        RatVector nf = normalForm(interior, product);
        P.at(static_cast<int>(a), static_cast<int>(b)) = nf.empty() ? Rational(0) : nf[0];
      }
    }
    data.matrices.push_back(std::move(P));
  }
  return data;
}

NondegeneracyReport checkNondegeneracy(const PairingData& data) {
  NondegeneracyReport rep;
  for (size_t l = 0; l < data.matrices.size(); ++l) {
    const RatMatrix& P = data.matrices[l];
    if (P.rows() != P.cols()) {
      rep.fail("pairing matrix at degree " + std::to_string(l) + " is not square");
      rep.shapes.emplace_back(P.rows(), -1);
      continue;
    }
    int rk = rank(P);
    rep.shapes.emplace_back(P.rows(), rk);
    if (rk != P.rows())
      rep.fail("pairing matrix at degree " + std::to_string(l) + " is degenerate (rank " +
               std::to_string(rk) + " of " + std::to_string(P.rows()) + ")");
  }
  return rep;
}

}  // namespace stringcone
