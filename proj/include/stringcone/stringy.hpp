#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "stringcone/cone.hpp"
#include "stringcone/series.hpp"

namespace stringcone {

/// Finitely supported polynomial in two variables u, v with integer
/// coefficients; zero coefficients are never stored.
class BivariatePolynomial {
 public:
  using Exponent = std::pair<long long, long long>;

  BivariatePolynomial() = default;

  const std::map<Exponent, Int>& terms() const { return terms_; }
  Int coefficient(long long p, long long q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? Int(0) : it->second;
  }
  bool isZero() const { return terms_.empty(); }

  void add(long long p, long long q, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(Exponent{p, q}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e.first, e.second, c);
    return *this;
  }
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a += b;
  }
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  /// this += scale * shifted, where shifted multiplies every term of other by
  /// (uv)^k, i.e. raises both exponents by k.
  void addScaledDiagonalShift(const BivariatePolynomial& other, const Int& scale,
                              long long k) {
    for (const auto& [e, c] : other.terms_) add(e.first + k, e.second + k, scale * c);
  }

 private:
  std::map<Exponent, Int> terms_;
};

/// One stratum: its user-supplied E-polynomial and the cone describing the
/// transverse singularity type; no cone (or a rank-0 cone) means the stratum
/// is smooth and contributes its E-polynomial unchanged.
struct StratumRecord {
  BivariatePolynomial ePolynomial;
  std::optional<GradedCone> localCone;
};

struct StringyOptions {
  std::uint64_t seed = 0;
  long long degreeCap = -1;
};

/// Sum over strata of E_i(u,v) * S_i(uv), where S_i is the degree polynomial
/// of the stratum's cone evaluated at the product uv.
BivariatePolynomial stringEPolynomial(const std::vector<StratumRecord>& strata,
                                      const StringyOptions& options);

/// Signed coefficient extraction: the (p,q) entry is (-1)^(p+q) times the
/// coefficient of u^p v^q.
std::map<BivariatePolynomial::Exponent, Int> stringHodgeNumbers(
    const BivariatePolynomial& e);

/// Degree polynomial of one stratum cone (1 for smooth strata), running the
/// triangulation, direction, and box stages with per-stratum seeds.
GradedPolynomial stratumSPolynomial(const StratumRecord& stratum, int stratumIndex,
                                    const StringyOptions& options);

}  // namespace stringcone
