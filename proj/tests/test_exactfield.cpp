#include <doctest.h>

#include <random>

#include "taftsmash/cyclotomic.hpp"
#include "taftsmash/errors.hpp"
#include "taftsmash/laurent.hpp"
#include "taftsmash/ratpoly.hpp"

using namespace taftsmash;

namespace {

RatPoly t_pow_minus_one(int n) {
  std::vector<Rational> v(static_cast<size_t>(n) + 1, Rational(0));
  v[0] = Rational(-1);
  v.back() = Rational(1);
  return RatPoly(v);
}

CycloElem random_cyclo(std::mt19937_64& rng, int conductor) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<Rational> c(static_cast<size_t>(totient(conductor)));
  for (auto& x : c) x = make_rational(num(rng), den(rng));
  return CycloElem::from_coeffs(conductor, c);
}

LaurentQ random_laurent(std::mt19937_64& rng, int conductor) {
  std::uniform_int_distribution<long> exp(-3, 5);
  std::uniform_int_distribution<int> nterms(1, 4);
  LaurentQ p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) p = p + LaurentQ::term(random_cyclo(rng, conductor), exp(rng));
  return p;
}

}  // namespace

TEST_CASE("cyclotomic polynomials: first values") {
  CHECK(cyclotomic_polynomial(1) == RatPoly({std::vector<Rational>{Rational(-1), Rational(1)}}));
  CHECK(cyclotomic_polynomial(2) == RatPoly({std::vector<Rational>{Rational(1), Rational(1)}}));
  // Phi_4 via the exact-division oracle: (t^4 - 1) / (Phi_1 * Phi_2)
  RatPoly expected = t_pow_minus_one(4).divide_exact(cyclotomic_polynomial(1) * cyclotomic_polynomial(2));
  CHECK(cyclotomic_polynomial(4) == expected);
  CHECK(cyclotomic_polynomial(4) == RatPoly({std::vector<Rational>{Rational(1), Rational(0), Rational(1)}}));
}

TEST_CASE("cyclotomic polynomials: monic of degree phi(N), divides t^N - 1, product identity") {
  for (int n = 1; n <= 12; ++n) {
    const RatPoly& phi = cyclotomic_polynomial(n);
    CHECK(phi.degree() == totient(n));
    CHECK(phi.leading() == Rational(1));
    auto [q, r] = t_pow_minus_one(n).divmod(phi);
    CHECK(r.is_zero());
    RatPoly prod = RatPoly::constant(Rational(1));
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
    CHECK(prod == t_pow_minus_one(n));
  }
}

TEST_CASE("cyclotomic arithmetic on roots of unity") {
  auto i = CycloElem::root_of_unity(4);
  CHECK(i * i == CycloElem::from_int(-1));

  auto w = CycloElem::root_of_unity(3);
  CHECK((CycloElem::one() + w + w * w).is_zero());
  CHECK(w.inverse() == w * w);
  CHECK(w.pow(-1) == w.pow(2));
}

TEST_CASE("primitivity of the distinguished root") {
  for (int n : {2, 3, 4, 5, 6, 8, 12}) {
    auto z = CycloElem::root_of_unity(n);
    CHECK(z.pow(n).is_one());
    for (int m = 1; m < n; ++m) CHECK_FALSE(z.pow(m).is_one());
    CHECK(z.multiplicative_order(2 * n) == n);
  }
}

TEST_CASE("field axioms on random triples, exact equality") {
  std::mt19937_64 rng(20240811);
  for (int conductor : {1, 3, 4, 5, 12}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto a = random_cyclo(rng, conductor);
      auto b = random_cyclo(rng, conductor);
      auto c = random_cyclo(rng, conductor);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == CycloElem::zero(conductor));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == CycloElem::one(conductor));
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("conductor mixing embeds into the lcm") {
  auto w3 = CycloElem::root_of_unity(3);
  auto i4 = CycloElem::root_of_unity(4);
  auto prod = w3 * i4;
  CHECK(prod.conductor() == 12);
  CHECK(prod == CycloElem::root_of_unity(12, 7));  // zeta12^4 * zeta12^3
  CHECK(CycloElem::root_of_unity(4, 2) == CycloElem::from_int(-1));
}

TEST_CASE("laurent division at a specialization point") {
  auto minus1 = CycloElem::from_int(-1);
  LaurentQ p = LaurentQ::q_power(4) - LaurentQ::one();
  CHECK(p.div_at(minus1) == CycloElem::from_int(-4));

  for (long k : {-2L, 1L, 3L}) {
    auto eps = CycloElem::from_rational(make_rational(k));
    LaurentQ lin = LaurentQ::q_power(1) - LaurentQ::from_cyclo(eps);
    CHECK(lin.div_at(eps) == CycloElem::one());
    CHECK((lin * lin).div_at(eps).is_zero());
  }
}

TEST_CASE("laurent div_at clears negative exponents by a unit monomial") {
  // q - q^{-1} = q^{-1}(q^2 - 1); value of p/(q-1) at 1 is 2
  LaurentQ p = LaurentQ::q_power(1) - LaurentQ::q_power(-1);
  CHECK(p.div_at(CycloElem::one()) == CycloElem::from_int(2));
}

TEST_CASE("laurent div_at rejects non-roots") {
  LaurentQ p = LaurentQ::q_power(2) + LaurentQ::one();
  CHECK_THROWS_AS(p.div_at(CycloElem::one()), NotDivisibleError);
}

TEST_CASE("laurent div_at inverts multiplication by (q - eps)") {
  std::mt19937_64 rng(7);
  for (int conductor : {1, 3, 4}) {
    for (int trial = 0; trial < 20; ++trial) {
      LaurentQ p = random_laurent(rng, conductor);
      CycloElem eps = CycloElem::root_of_unity(conductor);
      LaurentQ shifted = p * (LaurentQ::q_power(1) - LaurentQ::from_cyclo(eps));
      CHECK(shifted.div_at(eps) == p.eval(eps));
    }
  }
}

TEST_CASE("laurent exact division and compose_power") {
  LaurentQ a = (LaurentQ::one() + LaurentQ::q_power(1)) * (LaurentQ::one() - LaurentQ::q_power(3));
  CHECK(a.divide_exact(LaurentQ::one() + LaurentQ::q_power(1)) == LaurentQ::one() - LaurentQ::q_power(3));
  CHECK_THROWS_AS((a + LaurentQ::one()).divide_exact(LaurentQ::one() + LaurentQ::q_power(1)), NotDivisibleError);
  LaurentQ b = LaurentQ::one() + LaurentQ::q_power(2);
  CHECK((LaurentQ::one() + LaurentQ::q_power(1)).compose_power(2) == b);
}
