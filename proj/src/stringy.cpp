#include "stringcone/stringy.hpp"

#include "stringcone/pipeline.hpp"
#include "stringcone/rng.hpp"

namespace stringcone {

GradedPolynomial stratumSPolynomial(const StratumRecord& stratum, int stratumIndex,
                                    const StringyOptions& options) {
  if (!stratum.localCone || stratum.localCone->rank == 0)
    return GradedPolynomial::one();
  SessionOptions so;
  so.seed = mixSeed(options.seed, "stratum" + std::to_string(stratumIndex));
  so.degreeCap = options.degreeCap;
  ConeSession session(*stratum.localCone, so);
  return session.sPoly();
}

BivariatePolynomial stringEPolynomial(const std::vector<StratumRecord>& strata,
                                      const StringyOptions& options) {
  BivariatePolynomial total;
  for (size_t i = 0; i < strata.size(); ++i) {
    GradedPolynomial s = stratumSPolynomial(strata[i], static_cast<int>(i), options);
    for (int k = 0; k <= s.degree(); ++k) {
      Int c = s.coefficient(k);
      if (c == 0) continue;
      total.addScaledDiagonalShift(strata[i].ePolynomial, c, k);
    }
  }
  return total;
}

std::map<BivariatePolynomial::Exponent, Int> stringHodgeNumbers(
    const BivariatePolynomial& e) {
  std::map<BivariatePolynomial::Exponent, Int> h;
  for (const auto& [exp, c] : e.terms()) {
    Int value = ((exp.first + exp.second) % 2 == 0) ? c : Int(-c);
    if (value != 0) h[exp] = value;
  }
  return h;
}

}  // namespace stringcone
