#pragma once

#include <compare>
#include <ostream>
#include <vector>

#include "stringcone/rational.hpp"

namespace stringcone {

/// First-order infinitesimal number a + b*eps where eps is a positive
/// infinitesimal. The ordering is lexicographic (constant first, then
/// slope); this is the exact meaning of comparisons that hold "for all
/// sufficiently small eps > 0".
struct EpsNumber {
  Rational constant;
  Rational slope;

  EpsNumber() = default;
  EpsNumber(Rational c) : constant(std::move(c)) {}
  EpsNumber(Rational c, Rational s) : constant(std::move(c)), slope(std::move(s)) {}

  EpsNumber operator-() const { return {-constant, -slope}; }
  EpsNumber& operator+=(const EpsNumber& o) {
    constant += o.constant;
    slope += o.slope;
    return *this;
  }
  EpsNumber& operator-=(const EpsNumber& o) {
    constant -= o.constant;
    slope -= o.slope;
    return *this;
  }
  /// Scaling by an ordinary rational; the product of two infinitesimal parts
  /// never arises in this library, so no eps^2 term is needed.
  EpsNumber& operator*=(const Rational& r) {
    constant *= r;
    slope *= r;
    return *this;
  }
  EpsNumber& operator/=(const Rational& r) {
    constant /= r;
    slope /= r;
    return *this;
  }

  friend EpsNumber operator+(EpsNumber a, const EpsNumber& b) { return a += b; }
  friend EpsNumber operator-(EpsNumber a, const EpsNumber& b) { return a -= b; }
  friend EpsNumber operator*(EpsNumber a, const Rational& r) { return a *= r; }
  friend EpsNumber operator*(const Rational& r, EpsNumber a) { return a *= r; }
  friend EpsNumber operator/(EpsNumber a, const Rational& r) { return a /= r; }

  friend bool operator==(const EpsNumber& a, const EpsNumber& b) {
    return a.constant == b.constant && a.slope == b.slope;
  }
  friend std::strong_ordering operator<=>(const EpsNumber& a, const EpsNumber& b) {
    auto c = a.constant <=> b.constant;
    if (c != std::strong_ordering::equal) return c;
    return a.slope <=> b.slope;
  }

  bool isPositive() const { return *this > EpsNumber(); }

  friend std::ostream& operator<<(std::ostream& os, const EpsNumber& e) {
    return os << e.constant << (e.slope.sign() < 0 ? "" : "+") << e.slope << "*eps";
  }
};

using EpsVector = std::vector<EpsNumber>;

/// Lifts a rational point to eps level with the given perturbation slope;
/// the result represents p + eps*slope.
inline EpsVector perturb(const RatVector& p, const RatVector& slope) {
  EpsVector out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = EpsNumber(p[i], slope[i]);
  return out;
}

inline EpsVector unperturbed(const RatVector& p) {
  EpsVector out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = EpsNumber(p[i]);
  return out;
}

}  // namespace stringcone
