#pragma once

#include "taftsmash/action.hpp"
#include "taftsmash/mpoly.hpp"

namespace taftsmash {

/// Commutative polynomial Poisson algebra given by a bracket table on the
/// generators, extended as a biderivation. Antisymmetry is by construction;
/// the Jacobi identity on generator triples is validated by make().
struct PoissonPolyAlgebra {
  std::vector<std::string> vars;
  std::map<std::pair<size_t, size_t>, MPoly> table;  // (i, j) with i < j -> {z_i, z_j}

  static PoissonPolyAlgebra make(std::vector<std::string> vars,
                                 std::map<std::pair<size_t, size_t>, MPoly> table);

  MPoly gen_bracket(size_t i, size_t j) const;  // any order, antisymmetric
  MPoly bracket(const MPoly& f, const MPoly& g) const;
  Report jacobi_report() const;
  MPoly var(size_t i) const { return MPoly::var(vars, i); }
};

/// alpha and beta as derivations of the base algebra, by generator images.
struct PoissonDerivationPair {
  std::vector<MPoly> alpha;
  std::vector<MPoly> beta;
};

MPoly apply_derivation(const std::vector<MPoly>& images, const MPoly& f);

/// The specialization-bracket coefficients at mu = zeta_n with lam = mu^k:
/// b1 = (q^{n^2}-1)/(q-mu) at mu, b2 = [n]_q!/(q-mu) at mu (Weyl only),
/// c1 = (k+1) b1 (cross-checked against the direct quotient), c2 =
/// (-1)^{n+1} [n]_{q^k}!/(q-mu) at mu, theta = c2/(c1-b1). The integer lift
/// of k matters for c1 and c2 individually but not for theta.
struct BracketCoefficients {
  int n = 0;
  long k = 0;
  CycloElem b1;
  std::optional<CycloElem> b2;
  CycloElem c1, c2, theta;
};

BracketCoefficients bracket_coefficients(int n, long k, Target target);

/// The induced Poisson algebra on the central polynomial generators: base on
/// z1, z2 and the full algebra on z1, z2, z3.
PoissonPolyAlgebra base_poisson_algebra(const BracketCoefficients& c, Target target);
PoissonPolyAlgebra coefficient_poisson_algebra(const BracketCoefficients& c, Target target);
PoissonDerivationPair ore_derivations(const BracketCoefficients& c);

/// Checks that alpha is a Poisson derivation, that beta is the matching
/// alpha-derivation (in the orientation forced by the Jacobi identity of the
/// extension), and that C's bracket table is exactly the Poisson Ore form
/// {z3, b} = alpha(b) z3 + beta(b) over B.
Report verify_poisson_ore(const PoissonPolyAlgebra& B, const PoissonDerivationPair& pair,
                          const PoissonPolyAlgebra& C);

/// y exactly divides {y, z_i} for every generator; Leibniz extends this to
/// {y, B} within yB.
bool is_poisson_normal(const PoissonPolyAlgebra& A, const MPoly& y);

/// Named candidates from the Poisson-prime analysis.
MPoly plane_prime_candidate(const BracketCoefficients& c);  // z2 z3 + theta z1
MPoly weyl_prime_candidate(const BracketCoefficients& c);   // z1 z2 z3 + theta z1^2 + b2 b1^{-1} z3

struct SpecializationContext {
  QPres family;
  CycloElem eps;
  int n = 0;
  std::vector<std::string> zvars;
};

SpecializationContext standard_specialization(int n, long k, Target target);

/// {sigma(a), sigma(b)} = sigma((a b - b a)/(q - eps)), expressed in the
/// z-variables. Throws NotDivisibleError if some coefficient does not vanish
/// at eps, NotCentralImageError if a surviving exponent is not a multiple of
/// n.
MPoly induced_bracket(const SpecializationContext& ctx, const QElem& a_lift, const QElem& b_lift);

/// Lifts the three central generators u^n, v^n, x^n in the family.
QElem central_lift(const SpecializationContext& ctx, size_t which);

/// Compares the engine-induced bracket with the closed-form table on all
/// generator pairs.
Report verify_bracket_table(int n, long k, Target target);

/// delta^n(v^n) against the closed product form prod_i q^{n-i-1} [n-i]_{q^k}
/// u^n, symbolically in q, plus the twisted commutation delta tau = q^k tau
/// delta on u and v.
Report verify_skew_power_formula(int n, long k, int kappa);

/// The denominator-cleared form of the inner alpha-derivation identity
/// driving the plane Poisson-prime analysis:
/// z2^2 beta(z_i) = theta (z1 z2 alpha(z_i) + z2 {z_i, z1} - z1 {z_i, z2}).
Report verify_inner_derivation_identity(const BracketCoefficients& c);

}  // namespace taftsmash
