#pragma once

#include <map>
#include <string>

#include "taftsmash/cyclotomic.hpp"

namespace taftsmash {

/// Laurent polynomial in the deformation parameter q with coefficients in
/// Q(zeta_N). Zero coefficients are never stored.
class LaurentQ {
 public:
  LaurentQ() = default;

  static LaurentQ zero() { return LaurentQ(); }
  static LaurentQ one() { return from_cyclo(CycloElem::one(1)); }
  static LaurentQ from_cyclo(const CycloElem& c);
  static LaurentQ from_rational(const Rational& r) { return from_cyclo(CycloElem::from_rational(r)); }
  /// c * q^e
  static LaurentQ term(const CycloElem& c, long e);
  static LaurentQ q_power(long e) { return term(CycloElem::one(1), e); }

  bool is_zero() const { return t_.empty(); }
  const std::map<long, CycloElem>& terms() const { return t_; }
  CycloElem coeff(long e) const;
  long min_exp() const;
  long max_exp() const;

  LaurentQ operator+(const LaurentQ& o) const;
  LaurentQ operator-(const LaurentQ& o) const;
  LaurentQ operator*(const LaurentQ& o) const;
  LaurentQ operator-() const;
  LaurentQ scaled(const CycloElem& s) const;
  bool operator==(const LaurentQ& o) const;
  bool operator!=(const LaurentQ& o) const { return !(*this == o); }

  /// q -> q0; q0 must be nonzero when negative exponents are present.
  CycloElem eval(const CycloElem& q0) const;
  /// q -> q^m, m != 0 (may be negative).
  LaurentQ compose_power(long m) const;
  /// Exact division; throws NotDivisibleError on nonzero remainder.
  LaurentQ divide_exact(const LaurentQ& d) const;

  /// Value at q = eps of this/(q - eps). Requires this(eps) = 0 after the
  /// unit monomial factor q^m clearing negative exponents is pulled out;
  /// throws NotDivisibleError otherwise.
  CycloElem div_at(const CycloElem& eps) const;

  std::string str() const;

 private:
  void insert(long e, const CycloElem& c);
  std::map<long, CycloElem> t_;
};

}  // namespace taftsmash
