#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "taftsmash/cyclotomic.hpp"

namespace taftsmash {

/// Sparse multivariate polynomial over Q(zeta_N) in a fixed named variable
/// list. Variable lists are interned and shared, so operations between
/// polynomials over the same list only compare pointers. Binary operations
/// require the same variable list; constants with an empty list embed into
/// any context. No zero coefficients are stored.
class MPoly {
 public:
  using Exp = std::vector<unsigned>;
  using VarsPtr = std::shared_ptr<const std::vector<std::string>>;

  MPoly();  // zero in the empty-variable context

  static MPoly zero(const std::vector<std::string>& vars);
  static MPoly constant(const std::vector<std::string>& vars, const CycloElem& c);
  static MPoly var(const std::vector<std::string>& vars, size_t i);
  static MPoly monomial(const std::vector<std::string>& vars, const Exp& e, const CycloElem& c);

  const std::vector<std::string>& vars() const { return *vars_; }
  const std::map<Exp, CycloElem>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  CycloElem constant_value() const;  // 0 if zero; requires is_constant()

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly scaled(const CycloElem& s) const;
  MPoly pow(unsigned k) const;
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly derivative(size_t v) const;
  CycloElem eval(const std::vector<CycloElem>& point) const;
  MPoly eval_partial(size_t v, const CycloElem& value) const;
  /// Substitutes variable v by a polynomial over the same variable list.
  MPoly substitute(size_t v, const MPoly& repl) const;

  int degree(size_t v) const;    // -1 for the zero polynomial
  long total_degree() const;     // 0 for zero
  long weighted_degree(const std::vector<long>& w) const;

  /// Leading term under lex order with var 0 highest.
  std::pair<Exp, CycloElem> leading_lex() const;
  /// Divides by the leading coefficient of the lex-first monomial.
  MPoly unit_normalized() const;

  /// Single-divisor reduction; returns true and sets *quotient when divisor
  /// exactly divides this.
  bool try_divide(const MPoly& divisor, MPoly* quotient = nullptr) const;
  MPoly divide_exact(const MPoly& divisor) const;

  /// Rewrites monomials modulo the relation vars[i]*vars[j] = 1.
  MPoly reduce_pair_to_one(size_t i, size_t j) const;

  std::string str() const;

 private:
  MPoly(VarsPtr vars, std::map<Exp, CycloElem> t) : vars_(std::move(vars)), t_(std::move(t)) {}
  void insert(const Exp& e, const CycloElem& c);
  static std::pair<MPoly, MPoly> aligned(const MPoly& a, const MPoly& b);
  static VarsPtr intern(const std::vector<std::string>& vars);

  VarsPtr vars_;
  std::map<Exp, CycloElem> t_;
};

}  // namespace taftsmash
