#pragma once

#include <string>
#include <vector>

#include "stringcone/quotient.hpp"

namespace stringcone {

/// Multiplication pairing between complementary degrees of the ring quotient
/// and the interior quotient. The functional selecting the coefficient of
/// the unique top-degree interior box monomial is normalized to 1 on it, so
/// entries are reproducible.
struct PairingData {
  IntVector soclePoint;                // the unique interior box point of top degree
  std::vector<RatMatrix> matrices;     // matrices[l]: rows = ring box basis at degree l,
                                       // cols = interior box basis at degree rank-l
};

/// Builds all pairing matrices by reducing the products of box monomials in
/// the interior quotient. Both presentations must be certified and share the
/// same forms; throws PresentationNotCertified otherwise.
PairingData buildPairing(const QuotientPresentation& ring,
                         const QuotientPresentation& interior);

struct NondegeneracyReport {
  bool ok = true;
  std::vector<std::pair<int, int>> shapes;  // per degree: (rows, rank)
  std::vector<std::string> problems;

  void fail(std::string p) {
    ok = false;
    problems.push_back(std::move(p));
  }
};

/// Every pairing matrix must be square of the predicted size and have full
/// rank over the rationals.
NondegeneracyReport checkNondegeneracy(const PairingData& data);

}  // namespace stringcone
