#include <doctest.h>

#include "taftsmash/qcomb.hpp"

using namespace taftsmash;

TEST_CASE("q-integers") {
  CHECK(q_int(2, CycloElem::from_int(-1)).is_zero());
  CHECK(q_int_poly(3) == LaurentQ::one() + LaurentQ::q_power(1) + LaurentQ::q_power(2));
  for (int n : {2, 3, 5}) CHECK(q_int(1, CycloElem::root_of_unity(n)).is_one());
}

TEST_CASE("q-factorials") {
  CHECK(q_factorial_poly(0) == LaurentQ::one());
  CHECK(q_factorial_poly(2) == LaurentQ::one() + LaurentQ::q_power(1));
  CHECK(q_factorial(2, CycloElem::from_int(-1)).is_zero());
}

TEST_CASE("gaussian binomials") {
  for (long k : {1L, 3L, 6L}) CHECK(q_binomial_poly(k, 0) == LaurentQ::one());
  CHECK(q_binomial_poly(2, 1) == LaurentQ::one() + LaurentQ::q_power(1));
  // at a primitive n-th root the binomial vanishes for 0 < i < n
  for (int n : {2, 3, 4, 5, 6}) {
    auto lam = CycloElem::root_of_unity(n);
    for (long i = 1; i < n; ++i) CHECK(q_binomial(n, i, lam).is_zero());
    CHECK(q_binomial(n, 0, lam).is_one());
    CHECK(q_binomial(n, n, lam).is_one());
  }
}

TEST_CASE("binomial times factorials recovers the factorial") {
  for (long k = 0; k <= 8; ++k) {
    for (long i = 0; i <= k; ++i) {
      CHECK(q_binomial_poly(k, i) * q_factorial_poly(i) * q_factorial_poly(k - i) == q_factorial_poly(k));
    }
  }
}

TEST_CASE("binomial symmetry") {
  for (long k = 1; k <= 8; ++k)
    for (long i = 0; i <= k; ++i) CHECK(q_binomial_poly(k, i) == q_binomial_poly(k, k - i));
}

TEST_CASE("pascal-type identity used by the fixed-ring induction") {
  for (long k = 2; k <= 10; ++k) CHECK(pascal_identity_holds(k));
}
