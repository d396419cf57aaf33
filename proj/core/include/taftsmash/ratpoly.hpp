#pragma once

#include <utility>
#include <vector>

#include "taftsmash/rational.hpp"

namespace taftsmash {

// Dense univariate polynomial over the rationals. coeff(i) is the t^i
// coefficient; the vector never ends in a zero.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly zero() { return RatPoly(); }
  static RatPoly constant(const Rational& c);
  // c * t^k
  static RatPoly monomial(const Rational& c, int k);

  // degree of zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const;

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator-() const;
  RatPoly scaled(const Rational& s) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }
  bool operator!=(const RatPoly& o) const { return !(*this == o); }

  // Euclidean division; divisor must be nonzero.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
  // Throws NotDivisibleError when the remainder is nonzero.
  RatPoly divide_exact(const RatPoly& d) const;

  Rational eval(const Rational& x) const;
  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

// gcd is monic; returns (g, s, t) with s*a + t*b = g.
struct ExtGcdResult {
  RatPoly g, s, t;
};
ExtGcdResult ext_gcd(const RatPoly& a, const RatPoly& b);

// The N-th cyclotomic polynomial, computed by exact division of t^N - 1 by
// the proper cyclotomic divisors. Memoized; thread-safe.
const RatPoly& cyclotomic_polynomial(int n);

// Euler totient.
int totient(int n);

}  // namespace taftsmash
