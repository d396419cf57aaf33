#include <doctest.h>

#include <random>

#include "taftsmash/discriminant.hpp"
#include "taftsmash/poisson.hpp"

using namespace taftsmash;

namespace {
MPoly z3v(size_t i) { return MPoly::var({"z1", "z2", "z3"}, i); }
}

TEST_CASE("decomposition over the center") {
  auto d = ore_decomposition(2, 1, Target::QPlane);
  CHECK(d.rank() == 8);

  CElem u3 = CElem::monomial(d.pres, {3, 0, 0}, CycloElem::one(2));
  auto dec = decompose_over_center(u3, d);
  REQUIRE(dec.size() == 1);
  CHECK(dec.begin()->first == ExpVec{1, 0, 0});
  CHECK(dec.begin()->second == z3v(0));

  CElem m = CElem::monomial(d.pres, {2, 3, 1}, CycloElem::one(2));
  auto dec2 = decompose_over_center(m, d);
  REQUIRE(dec2.size() == 1);
  CHECK(dec2.begin()->first == ExpVec{0, 1, 1});
  CHECK(dec2.begin()->second == z3v(0) * z3v(1));

  auto dec3 = decompose_over_center(CElem::one(d.pres), d);
  REQUIRE(dec3.size() == 1);
  CHECK(dec3.begin()->first == ExpVec{0, 0, 0});
  CHECK(dec3.begin()->second == MPoly::constant({"z1", "z2", "z3"}, CycloElem::one(1)));
}

TEST_CASE("regular traces in the rank-8 algebra") {
  auto d = ore_decomposition(2, 1, Target::QPlane);
  CHECK(regular_trace(CElem::one(d.pres), d) ==
        MPoly::constant({"z1", "z2", "z3"}, CycloElem::from_int(8)));
  CHECK(regular_trace(CElem::generator(d.pres, 0), d).is_zero());
  CElem u2 = CElem::monomial(d.pres, {2, 0, 0}, CycloElem::one(2));
  CHECK(regular_trace(u2, d) == z3v(0).scaled(CycloElem::from_int(8)));
}

TEST_CASE("trace properties on random pairs") {
  auto d = ore_decomposition(2, 1, Target::QPlane);
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<unsigned> exp(0, 3);
  std::uniform_int_distribution<long> coeff(-3, 3);
  auto random_elem = [&]() {
    CElem e = CElem::zero(d.pres);
    for (int t = 0; t < 3; ++t) {
      long c = coeff(rng);
      if (c == 0) c = 2;
      e = e + CElem::monomial(d.pres, {exp(rng), exp(rng), exp(rng)}, CycloElem::from_int(c));
    }
    return e;
  };
  for (int trial = 0; trial < 50; ++trial) {
    CElem a = random_elem(), b = random_elem();
    CHECK(regular_trace(a * b, d) == regular_trace(b * a, d));
  }
  // C-linearity over a central multiplier
  CElem c = CElem::monomial(d.pres, {2, 0, 0}, CycloElem::one(2));
  for (int trial = 0; trial < 10; ++trial) {
    CElem a = random_elem();
    CHECK(regular_trace(c * a, d) == z3v(0) * regular_trace(a, d));
  }
}

TEST_CASE("trace form is symmetric") {
  auto d = ore_decomposition(2, 1, Target::QPlane);
  auto tf = trace_form(d);
  CHECK(tf.size() == 8);  // construction validates symmetry
}

TEST_CASE("rank-8 discriminant matches the factored closed form") {
  auto d = ore_decomposition(2, 1, Target::QPlane);
  auto coeffs = bracket_coefficients(2, 1, Target::QPlane);
  MPoly expected = z3v(0).pow(4) * plane_prime_candidate(coeffs).pow(4);

  MPoly via_bareiss = discriminant(d, DetMethod::FractionFree);
  MPoly via_interp = discriminant(d, DetMethod::Interpolation);
  CHECK(via_bareiss == via_interp);
  CHECK(equal_up_to_unit(via_bareiss, expected));
  // the scaled variant is still the same class
  CHECK(equal_up_to_unit(expected.scaled(CycloElem::from_int(-3)), via_bareiss));
  CHECK_FALSE(equal_up_to_unit(z3v(0), z3v(1)));
  CHECK(equal_up_to_unit(z3v(0).scaled(CycloElem::from_int(2)), z3v(0)));

  // weighted-degree identity: deg = 2 * (2 n^3 (n-1)) with z1 -> 2n, z2, z3 -> n
  CHECK(via_bareiss.weighted_degree({4, 2, 2}) == 32);
}

TEST_CASE("trivial rank-1 discriminant") {
  auto plane = commutative_plane(1);
  auto d = CentralBasisDecomposition::make(plane, {{"z1", 0, 1}, {"z2", 1, 1}});
  CHECK(d.rank() == 1);
  MPoly disc = discriminant(d);
  CHECK(disc == MPoly::constant({"z1", "z2"}, CycloElem::one(1)));
}

TEST_CASE("singular trace form is an error") {
  auto plane = commutative_plane(1);
  auto d = CentralBasisDecomposition::with_basis(plane, {{"z1", 0, 1}, {"z2", 1, 1}},
                                                 {{0, 0}, {0, 0}});
  CHECK_THROWS_AS(discriminant(d), SingularTraceFormError);
}

TEST_CASE("degree census") {
  for (int n : {2, 3, 4}) {
    auto d = ore_decomposition(n, 1, Target::QPlane);
    long expect = 2L * n * n * n * (n - 1);
    CHECK(degree_census(d, {2, 1, 1}) == expect);
    CHECK(degree_census(d, {0, 0, 0}) == 0);
  }
}

TEST_CASE("smash discriminant at n = 2 is the predicted power of u^2") {
  auto s = build_smash(standard_action(2, 1, Target::QPlane));
  auto d = smash_decomposition(s);
  CHECK(d.rank() == 16);
  MPoly disc = discriminant(d, DetMethod::FractionFree);
  MPoly expected = MPoly::var({"z1", "z2"}, 0).pow(16);  // u^32
  CHECK(equal_up_to_unit(disc, expected));
}
