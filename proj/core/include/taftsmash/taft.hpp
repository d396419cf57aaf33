#pragma once

#include <array>
#include <map>

#include "taftsmash/cyclotomic.hpp"
#include "taftsmash/laurent.hpp"
#include "taftsmash/presentation.hpp"
#include "taftsmash/report.hpp"

namespace taftsmash {

using CPres = PresPtr<CycloElem>;
using CElem = BasicNCElem<CycloElem>;
using QPres = PresPtr<LaurentQ>;
using QElem = BasicNCElem<LaurentQ>;

/// The Taft algebra on a grouplike g and skew-primitive x with g^n = 1,
/// x^n = 0, x g = lam g x, for lam a primitive n-th root of unity.
struct TaftAlgebra {
  int n = 0;
  CycloElem lam;
  CPres pres;  // generators g < x

  static TaftAlgebra make(int n, const CycloElem& lam);

  CElem g() const { return CElem::generator(pres, 0); }
  CElem x() const { return CElem::generator(pres, 1); }
  /// g^l x^k
  CElem monomial(int l, int k) const;
  /// counit: 1 on g, 0 on x, extended as an algebra map
  CycloElem counit(const CElem& e) const;
  /// antipode on the basis, extended as an algebra anti-map
  CElem antipode(const CElem& e) const;
};

/// Element of a tensor power of the Taft algebra, expanded against the
/// monomial basis g^l x^k per tensor slot.
class TaftTensor {
 public:
  using Key = std::vector<std::pair<int, int>>;  // (l, k) per slot

  TaftTensor(TaftAlgebra H, int arity) : H_(std::move(H)), arity_(arity) {}

  static TaftTensor unit(const TaftAlgebra& H, int arity);

  int arity() const { return arity_; }
  const std::map<Key, CycloElem>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add(const Key& key, const CycloElem& c);
  TaftTensor operator+(const TaftTensor& o) const;
  TaftTensor operator-(const TaftTensor& o) const;
  TaftTensor operator*(const TaftTensor& o) const;  // componentwise products
  TaftTensor scaled(const CycloElem& s) const;
  bool operator==(const TaftTensor& o) const;
  bool operator!=(const TaftTensor& o) const { return !(*this == o); }

  /// Applies the coproduct to one slot, producing an (arity+1)-tensor.
  TaftTensor coproduct_at(int slot) const;
  /// Applies the counit to one slot.
  TaftTensor counit_at(int slot) const;
  /// Flattens to an algebra element by multiplying the slots together, with
  /// the antipode applied to the chosen slots first. Requires arity 2 here.
  CElem mul_with_antipode(bool antipode_first, bool antipode_second) const;

  std::string str() const;

 private:
  TaftAlgebra H_;
  int arity_;
  std::map<Key, CycloElem> t_;
};

/// The closed-form coproduct of the basis monomial g^l x^k: the sum over i of
/// the lam-binomial [k i] times g^{l+i} x^{k-i} (x) g^l x^i.
TaftTensor taft_coproduct(const TaftAlgebra& H, int l, int k);

/// Coassociativity, counit, antipode axioms, the algebra-map property of the
/// coproduct and the counit on the defining relations, and agreement of the
/// closed-form coproduct with multiplicativity, all on the full monomial
/// basis.
Report verify_hopf_axioms(const TaftAlgebra& H);

}  // namespace taftsmash
