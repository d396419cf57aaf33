#pragma once

#include "taftsmash/action.hpp"

namespace taftsmash {

/// Endomorphisms of S = k_{-1}[u,v] # H_2(-1) given by generator images.
/// Restricted maps send 1#g to +-1 # g and 1#x to a nonzero scalar times x.
struct Endomorphism {
  CPres pres;
  std::vector<CElem> images;  // one per generator u, v, g, x

  CElem apply(const CElem& e) const { return apply_endomorphism(images, e); }
};

/// The smash product S and its distinguished elements.
SmashProduct restricted_smash();

struct EvenParams {
  CycloElem alpha, theta;
  int eps = 1;  // +-1
  std::map<long, CycloElem> betas;  // odd exponents only
};
using OddParams = EvenParams;

Endomorphism build_even(const SmashProduct& s, const EvenParams& p);
Endomorphism build_odd(const SmashProduct& s, const OddParams& p);
Endomorphism identity_endo(const SmashProduct& s);

/// Applies the map to every defining relation of S and checks the images
/// vanish.
bool is_homomorphism(const Endomorphism& e);

/// e1 after e2.
Endomorphism compose(const Endomorphism& e1, const Endomorphism& e2);

enum class Parity { Even, Odd, Neither };
std::string parity_name(Parity p);

struct ParityResult {
  Parity parity = Parity::Neither;
  EvenParams params;  // valid when parity != Neither
};

/// Pattern-matches the images against the even/odd templates and extracts
/// the parameters.
ParityResult parity(const SmashProduct& s, const Endomorphism& e);

/// Parameters of the inverse of an even-type map.
EvenParams inverse_even(const EvenParams& p);

/// Certifies a two-sided inverse: directly for even type, through the
/// square-is-even route for odd type.
bool has_two_sided_inverse(const SmashProduct& s, const Endomorphism& e);

/// The projection of the map to the degree-<= bound slice is invertible
/// (the degree-raising tails drop out; the diagonal part is triangular).
bool slice_invertible(const SmashProduct& s, const Endomorphism& e, unsigned degree_bound);

/// phi(u^2 # 1) is a scalar multiple of u^2 # 1 and phi(v^2 # 1) has the
/// shape (kappa v^2 + f(u^2)) # 1.
bool check_disc_preservation(const SmashProduct& s, const Endomorphism& e);

/// Exhaustive classification of the restricted homomorphisms with image
/// degree <= max_degree at fixed (eps, theta), following the discriminant
/// route: the homomorphism equations are joined with the shape constraints
/// the computed discriminant forces on automorphisms (the image of u^2
/// stays on u^2, the image of v^2 on v^2 plus powers of u^2), the exact
/// linear part is eliminated, and the remaining quadratic constraints are
/// branched on factorable equations. Every terminal solution piece must
/// land inside the even family, the odd family, or fail a necessary
/// automorphism condition at sampled generic points.
struct SearchLeaf {
  size_t dim = 0;
  bool in_even = false;
  bool in_odd = false;
  bool degenerate = false;  // every sample fails a necessary automorphism condition
  bool sampled_homomorphism = false;
};

struct SearchResult {
  bool complete = false;       // no unresolved branches
  bool all_classified = false; // every leaf inside the even or odd family
  size_t leaves = 0;
  size_t unresolved = 0;
  std::vector<SearchLeaf> leaf_info;
};

SearchResult classify_restricted_homs(const SmashProduct& s, unsigned max_degree, int eps,
                                      const CycloElem& theta);

/// Conjugation r -> w r w^{-1}; unit_inv must be a two-sided inverse of unit.
Endomorphism conjugation(const SmashProduct& s, const CElem& unit, const CElem& unit_inv);

/// Conjugation by the unit 1 + u#x: a restricted automorphism (it commutes
/// with 1#g and 1#x exactly) that is of neither even nor odd type. The
/// even/odd classification of the restricted automorphism group is therefore
/// incomplete; the search above reports the corresponding leaves as
/// unclassified.
Endomorphism inner_counterexample(const SmashProduct& s);

}  // namespace taftsmash
