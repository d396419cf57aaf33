#pragma once

#include "taftsmash/laurent.hpp"

namespace taftsmash {

/// [n]_q = 1 + q + ... + q^{n-1}, as a polynomial in q.
LaurentQ q_int_poly(long n);
/// [n]_q! = [1]_q [2]_q ... [n]_q; the empty product is 1.
LaurentQ q_factorial_poly(long n);
/// Gaussian binomial, computed by exact cancellation of the factorial
/// products over LaurentQ. Requires 0 <= i <= k (k = i = 0 allowed).
LaurentQ q_binomial_poly(long k, long i);

// Numeric evaluations. Root-of-unity arguments always go through the
// symbolic polynomial first, then substitute; vanishing factors never meet
// a division.
CycloElem q_int(long n, const CycloElem& lam);
CycloElem q_factorial(long n, const CycloElem& lam);
CycloElem q_binomial(long k, long i, const CycloElem& lam);

/// [k 1]_{q^2} + q [k 2]_q = [k+1 2]_q as Laurent polynomials; k >= 2.
bool pascal_identity_holds(long k);

}  // namespace taftsmash
