#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taftsmash/ratpoly.hpp"
#include "taftsmash/rational.hpp"

namespace taftsmash {

/// An element of the cyclotomic field Q(zeta_N), stored as the unique reduced
/// residue against the power basis 1, zeta, ..., zeta^{phi(N)-1} modulo the
/// N-th cyclotomic polynomial. All arithmetic is exact; operands with
/// different conductors are embedded into Q(zeta_lcm) first.
class CycloElem {
 public:
  CycloElem() : conductor_(1), c_(1, Rational(0)) {}

  static CycloElem zero(int conductor = 1);
  static CycloElem one(int conductor = 1);
  static CycloElem from_rational(const Rational& r, int conductor = 1);
  static CycloElem from_int(long v) { return from_rational(Rational(v)); }
  /// zeta_N^k for the distinguished primitive N-th root zeta_N.
  static CycloElem root_of_unity(int conductor, long k = 1);
  /// Reduces an arbitrary coefficient vector (any length) mod Phi_N.
  static CycloElem from_coeffs(int conductor, const std::vector<Rational>& coeffs);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Precondition: is_rational().
  Rational as_rational() const;

  CycloElem operator+(const CycloElem& o) const;
  CycloElem operator-(const CycloElem& o) const;
  CycloElem operator*(const CycloElem& o) const;
  CycloElem operator/(const CycloElem& o) const;
  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
  CycloElem& operator-=(const CycloElem& o) { return *this = *this - o; }
  CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }

  bool operator==(const CycloElem& o) const;
  bool operator!=(const CycloElem& o) const { return !(*this == o); }

  CycloElem inverse() const;
  CycloElem pow(long e) const;

  /// Embedding Q(zeta_N) -> Q(zeta_M); requires N | M.
  CycloElem embedded(int conductor) const;

  /// Least k in [1, bound] with this^k = 1, if any.
  std::optional<int> multiplicative_order(int bound) const;

  std::string str() const;

 private:
  CycloElem(int conductor, std::vector<Rational> c) : conductor_(conductor), c_(std::move(c)) {}
  static std::pair<CycloElem, CycloElem> aligned(const CycloElem& a, const CycloElem& b);

  int conductor_;
  std::vector<Rational> c_;  // length phi(conductor_)
};

CycloElem operator*(const Rational& s, const CycloElem& e);

}  // namespace taftsmash
