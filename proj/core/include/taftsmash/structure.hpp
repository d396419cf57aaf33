#pragma once

#include "taftsmash/action.hpp"
#include "taftsmash/linalg.hpp"

namespace taftsmash {

/// A degree-truncated subspace of a presented algebra, held as a list of
/// linearly independent elements (canonicalized by row reduction over the
/// monomial coordinates of the slice).
struct GradedSpan {
  CPres pres;
  unsigned degree_bound = 0;
  std::vector<CElem> basis;

  size_t dim() const { return basis.size(); }
};

/// Span membership and equality as exact linear algebra over the monomial
/// coordinates.
bool span_contains(const GradedSpan& s, const CElem& e);
bool span_equal(const GradedSpan& a, const GradedSpan& b);
GradedSpan span_intersection(const GradedSpan& a, const GradedSpan& b);
/// Canonicalizes a list of elements into a GradedSpan (RREF basis).
GradedSpan make_span(const CPres& pres, unsigned degree_bound, const std::vector<CElem>& gens);

/// Monomials of degree <= D in the action's algebra with g-eigenvalue lam^k.
GradedSpan weight_space(const LinearAction& a, long k, unsigned degree_bound);

/// Kernel of the x-action on the degree-<= D slice, by exact linear solve.
GradedSpan x_invariants(const LinearAction& a, unsigned degree_bound);

/// Intersection of the x-kernel with the trivial g-weight space.
GradedSpan fixed_ring(const LinearAction& a, unsigned degree_bound);

/// The degree-truncated center of a presented algebra: the exact solution
/// space of [z, gen] = 0 for every generator over the slice spanned by
/// monomials of weighted degree <= D (weight-zero generators must be
/// truncated). Generators whose commutator action is monomial-diagonal are
/// used as a pre-filter.
GradedSpan center_truncated(const CPres& pres, unsigned degree_bound,
                            std::optional<std::vector<unsigned>> weights = {});

/// Splits a central element of a smash product as sum r_{i,j} # g^i x^j and
/// checks the central-element constraints: r_{i,j} lies in the lam^j weight
/// space and x(r_{i,j}) = (1 - lam^{i+j-1}) r_{i,j-1} (zero for j = 0).
/// Throws NotCentralError if z is not central at its degree.
Report check_center_relations(const SmashProduct& s, const CElem& z);

}  // namespace taftsmash
