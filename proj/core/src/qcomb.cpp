#include "taftsmash/qcomb.hpp"

#include "taftsmash/errors.hpp"

namespace taftsmash {

LaurentQ q_int_poly(long n) {
  if (n < 0) throw Error("q_int_poly: n must be nonnegative");
  LaurentQ p;
  for (long e = 0; e < n; ++e) p = p + LaurentQ::q_power(e);
  return p;
}

LaurentQ q_factorial_poly(long n) {
  if (n < 0) throw Error("q_factorial_poly: n must be nonnegative");
  LaurentQ p = LaurentQ::one();
  for (long i = 1; i <= n; ++i) p = p * q_int_poly(i);
  return p;
}

LaurentQ q_binomial_poly(long k, long i) {
  if (i < 0 || i > k || k < 0) throw Error("q_binomial_poly: need 0 <= i <= k");
  // (1-q^k)...(1-q^{k-i+1}) / ((1-q)...(1-q^i))
  LaurentQ num = LaurentQ::one();
  LaurentQ den = LaurentQ::one();
  for (long j = 0; j < i; ++j) {
    num = num * (LaurentQ::one() - LaurentQ::q_power(k - j));
    den = den * (LaurentQ::one() - LaurentQ::q_power(j + 1));
  }
  return num.divide_exact(den);
}

CycloElem q_int(long n, const CycloElem& lam) {
  return q_int_poly(n).eval(lam);
}

CycloElem q_factorial(long n, const CycloElem& lam) {
  return q_factorial_poly(n).eval(lam);
}

CycloElem q_binomial(long k, long i, const CycloElem& lam) {
  return q_binomial_poly(k, i).eval(lam);
}

bool pascal_identity_holds(long k) {
  if (k < 2) throw Error("pascal_identity_holds: k must be >= 2");
  LaurentQ lhs = q_binomial_poly(k, 1).compose_power(2) + LaurentQ::q_power(1) * q_binomial_poly(k, 2);
  LaurentQ rhs = q_binomial_poly(k + 1, 2);
  return lhs == rhs;
}

}  // namespace taftsmash
