#pragma once

#include <optional>

#include "taftsmash/taft.hpp"

namespace taftsmash {

enum class Target { QPlane, Weyl, Affine3, QMatrices, PolyRing };

std::string target_name(Target t);
std::optional<Target> target_from_name(const std::string& s);

// Built-in module algebras. Generator order: u < v (< w); a < b < c < d.
CPres quantum_plane(const CycloElem& mu);          // u v = mu v u
CPres quantum_weyl(const CycloElem& mu);           // u v - mu v u = 1
CPres commutative_plane(int conductor);            // u v = v u
CPres quantum_affine3(const CycloElem& lam, const CycloElem& mu);
CPres quantum_matrices(const CycloElem& mu);

// The k[q^{±1}]-family on u, v, x with relations
// u v - q v u - kappa, x u = q u x, x v = q^{k+1} v x + u.
QPres ore_family(long k, int kappa);
// Specialization at q = eps: evaluates every rule coefficient. The relations
// specialize rule-by-rule, so this is a structural identity of presentations.
CPres specialize(const QPres& p, const CycloElem& eps);
// The specialization of ore_family at the distinguished primitive n-th root,
// i.e. the algebra the trace-form machinery runs over.
CPres ore_specialized(int n, long k, int kappa);

/// A linear Taft action datum: g acts diagonally on the generators, x acts by
/// degree-one images. Family (1) has x(u) = 0, x(v) = eta u; family (2) is
/// the u <-> v mirror.
struct LinearAction {
  int n = 0;  // Taft parameter
  CycloElem lam, mu, eta;
  std::optional<long> k_lift;  // lam = mu^k when lam lies in <mu>
  int family = 1;
  Target target = Target::QPlane;
  CPres algebra;
  std::vector<CycloElem> g_eigen;  // one eigenvalue per generator
  std::vector<CElem> x_images;     // one image per generator

  TaftAlgebra taft() const { return TaftAlgebra::make(n, lam); }
  CElem g_image(int i) const { return CElem::generator(algebra, i).scaled(g_eigen[static_cast<size_t>(i)]); }
};

/// g as the declared diagonal automorphism.
CElem act_g(const LinearAction& a, const CElem& e);
/// x through its skew-derivation rule x(r r') = g(r) x(r') + x(r) r'.
CElem act_x(const LinearAction& a, const CElem& e);
/// The basis monomial g^l x^k: x applied k times, then g applied l times.
CElem act(const LinearAction& a, int l, int k, const CElem& e);

/// Checks h(1) = eps(h) 1, the multiplicativity axiom for g and x on all
/// pairs of monomials up to the degree bound, g^n = id and x^n = 0 on the
/// generators.
Report verify_module_algebra(const LinearAction& a, unsigned degree_bound);

struct ClassifyResult {
  std::vector<LinearAction> actions;
  Report constraints;  // symbolic derivation of the classification
};

/// The linear inner-faithful actions of the n-th Taft algebra on the target:
/// two families when the order m of mu divides n (with lam = mu^{-2} forced
/// in the Weyl case), empty otherwise. Also re-derives the diagonal
/// constraint chain symbolically and, for mu = -1, the impossibility of a
/// non-diagonal grouplike.
ClassifyResult classify_linear_actions(int n, const CycloElem& mu, Target target,
                                       const CycloElem& eta, std::optional<CycloElem> lam_choice = {});

/// Symbolic derivation, over polynomial unknowns for the g- and x-matrices,
/// that a diagonal grouplike forces the two published families.
Report verify_diagonal_classification(const CycloElem& lam, const CycloElem& mu, Target target);
/// Symbolic derivation that mu = -1 admits no non-diagonal grouplike: the
/// constraint chain terminates in 4*a1 = 0 against a1 != 0.
Report verify_nondiagonal_impossible(int kappa);

/// The standard setting with |mu| = n, lam = mu^k, gcd(k, n) = 1, eta = 1.
/// Weyl requires k = -2 mod n and n odd.
LinearAction standard_action(int n, long k, Target target);
/// H_2(-1) on the commutative plane; the center counterexample datum.
LinearAction counterexample_action();
/// H_3(lam) on quantum affine 3-space (lam, mu primitive cube roots).
LinearAction affine3_action(long lam_power = 1, long mu_power = 1);
/// H_n(mu^{-2}) on quantum 2x2 matrices, n odd.
LinearAction qmatrices_action(int n);

struct SmashProduct {
  LinearAction action;
  CPres pres;  // generators of the target followed by g, x
};

/// The smash product presentation: swap rules g r = g(r) g and
/// x r = g(r) x + x(r), truncations g^n = 1 and x^n = 0. Validates
/// confluence.
SmashProduct build_smash(const LinearAction& a);

/// Embeds an element of the action's algebra into the smash product.
CElem embed_in_smash(const SmashProduct& s, const CElem& e);
/// Projects exponent vectors: the algebra part of a smash monomial.
CElem algebra_part(const SmashProduct& s, const ExpVec& exps, const CycloElem& c);

struct PrimenessResult {
  bool prime = false;
  std::optional<CElem> witness;  // a in A with x(a) = 0 and g(a) = lam^{n-1} a
};

/// Primeness of the smash product via the eigenvalue search over the
/// x-invariant monomials u^i v^{kn}; holds exactly when |mu| = n.
PrimenessResult is_prime_smash(const SmashProduct& s);

}  // namespace taftsmash
