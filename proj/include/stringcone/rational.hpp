#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stringcone {

using Int = mpz_class;
using IntVector = std::vector<Int>;

/// Exact rational scalar. Always stored reduced with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  Int numerator() const { return v_.get_num(); }
  Int denominator() const { return v_.get_den(); }
  bool isInteger() const { return v_.get_den() == 1; }
  bool isZero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  /// Largest integer <= value.
  Int floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }
  /// Smallest integer >= value.
  Int ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.isZero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p" when integral, "p/q" otherwise.
  std::string toString() const {
    if (isInteger()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  /// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
  static Rational fromString(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parseInt(s));
    return Rational(parseInt(s.substr(0, slash)), parseInt(s.substr(slash + 1)));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.toString();
  }

 private:
  explicit Rational(const mpq_class& v) : v_(v) {}

  static Int parseInt(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty integer literal");
    Int z;
    if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
      throw std::invalid_argument("Rational: bad integer literal '" + s + "'");
    return z;
  }

  mpq_class v_;
};

using RatVector = std::vector<Rational>;

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace stringcone
