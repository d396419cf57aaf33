#include <doctest.h>

#include <numeric>
#include "taftsmash/action.hpp"
#include "taftsmash/qcomb.hpp"

using namespace taftsmash;

namespace {
CycloElem roots(int n, long k = 1) { return CycloElem::root_of_unity(n, k); }
}

TEST_CASE("coproduct closed form on low monomials") {
  auto H = TaftAlgebra::make(3, roots(3));
  // Delta(x) = g (x) x + x (x) 1
  TaftTensor dx(H, 2);
  dx.add({{1, 0}, {0, 1}}, CycloElem::one(3));
  dx.add({{0, 1}, {0, 0}}, CycloElem::one(3));
  CHECK(taft_coproduct(H, 0, 1) == dx);

  for (int l = 0; l < 3; ++l) {
    TaftTensor dl(H, 2);
    dl.add({{l, 0}, {l, 0}}, CycloElem::one(3));
    CHECK(taft_coproduct(H, l, 0) == dl);
  }

  // Delta(g x) = gx (x) g + g^2 (x) gx
  TaftTensor dgx(H, 2);
  dgx.add({{1, 1}, {1, 0}}, CycloElem::one(3));
  dgx.add({{2, 0}, {1, 1}}, CycloElem::one(3));
  CHECK(taft_coproduct(H, 1, 1) == dgx);
}

TEST_CASE("hopf axioms for small Taft algebras") {
  for (int n : {2, 3}) {
    for (int j = 1; j < n; ++j) {
      if (std::gcd(j, n) != 1) continue;
      auto rep = verify_hopf_axioms(TaftAlgebra::make(n, roots(n, j)));
      INFO(rep.str());
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("antipode axiom on x explicitly") {
  auto H = TaftAlgebra::make(3, roots(3));
  auto d = taft_coproduct(H, 0, 1);
  CHECK(d.mul_with_antipode(true, false).is_zero());  // eps(x) = 0
}

TEST_CASE("the x action on the quantum plane") {
  auto a = standard_action(3, 1, Target::QPlane);
  auto u = CElem::generator(a.algebra, 0);
  auto v = CElem::generator(a.algebra, 1);
  // x(v^3) = [3]_lam u v^2 (zero at a primitive cube root)
  CHECK(act_x(a, v * v * v) == (u * v * v).scaled(q_int(3, a.lam)));
  CHECK(act_x(a, v * v * v).is_zero());
  // x(u^i v^j) = mu^i [j]_lam u^{i+1} v^{j-1}
  for (unsigned i = 0; i <= 3; ++i) {
    for (unsigned j = 1; j <= 3; ++j) {
      CElem m = CElem::monomial(a.algebra, {i, j}, CycloElem::one(3));
      CElem expect = CElem::monomial(a.algebra, {i + 1, j - 1},
                                     a.mu.pow(i) * q_int(j, a.lam));
      CHECK(act_x(a, m) == expect);
    }
  }
  CHECK(act_g(a, CElem::one(a.algebra)) == CElem::one(a.algebra));
}

TEST_CASE("module algebra verification") {
  CHECK(verify_module_algebra(standard_action(2, 1, Target::QPlane), 4).ok());
  CHECK(verify_module_algebra(standard_action(3, 1, Target::Weyl), 4).ok());
  CHECK(verify_module_algebra(counterexample_action(), 4).ok());
  CHECK(verify_module_algebra(affine3_action(), 3).ok());
  CHECK(verify_module_algebra(qmatrices_action(3), 3).ok());
}

TEST_CASE("a corrupted action fails the multiplicativity check") {
  auto a = standard_action(2, 1, Target::QPlane);
  a.g_eigen[1] = a.mu;  // g(v) = mu v instead of lam mu v
  auto rep = verify_module_algebra(a, 3);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("iterated x agrees with the coproduct expansion on products") {
  auto H = TaftAlgebra::make(3, roots(3));
  auto a = standard_action(3, 1, Target::QPlane);
  std::vector<unsigned> w(2, 1u);
  auto slice = monomial_slice(a.algebra, w, 2);
  for (int j = 1; j <= 3; ++j) {
    for (const auto& e1 : slice) {
      for (const auto& e2 : slice) {
        CElem m1 = CElem::monomial(a.algebra, e1, CycloElem::one(3));
        CElem m2 = CElem::monomial(a.algebra, e2, CycloElem::one(3));
        CElem lhs = act(a, 0, j, m1 * m2);
        CElem rhs = CElem::zero(a.algebra);
        for (int i = 0; i <= j; ++i) {
          // x^j(m m') = sum_i [j i] (g^i x^{j-i})(m) (x^i)(m')
          rhs = rhs + (act(a, i, j - i, m1) * act(a, 0, i, m2)).scaled(q_binomial(j, i, a.lam));
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("x^n annihilates low-degree elements") {
  auto a = standard_action(3, 1, Target::QPlane);
  std::vector<unsigned> w(2, 1u);
  for (const auto& e : monomial_slice(a.algebra, w, 4)) {
    CHECK(act(a, 0, 3, CElem::monomial(a.algebra, e, CycloElem::one(3))).is_zero());
  }
}

TEST_CASE("g acts as an algebra automorphism") {
  for (auto target : {Target::QPlane, Target::Weyl}) {
    auto a = standard_action(3, 1, target);
    std::vector<unsigned> w(2, 1u);
    auto slice = monomial_slice(a.algebra, w, 2);
    for (const auto& e1 : slice)
      for (const auto& e2 : slice) {
        CElem m1 = CElem::monomial(a.algebra, e1, CycloElem::one(3));
        CElem m2 = CElem::monomial(a.algebra, e2, CycloElem::one(3));
        CHECK(act_g(a, m1 * m2) == act_g(a, m1) * act_g(a, m2));
      }
  }
}

TEST_CASE("classification: families exist exactly when the order of mu divides n") {
  auto r22 = classify_linear_actions(2, roots(2), Target::QPlane, CycloElem::one(1));
  CHECK(r22.actions.size() == 2);
  CHECK(r22.constraints.ok());

  auto r32 = classify_linear_actions(3, roots(2), Target::QPlane, CycloElem::one(1));
  CHECK(r32.actions.empty());

  auto rw3 = classify_linear_actions(3, roots(3), Target::Weyl, CycloElem::one(1));
  REQUIRE(rw3.actions.size() == 1);
  CHECK(rw3.actions[0].family == 1);
  CHECK(rw3.actions[0].lam == roots(3).pow(-2));
  CHECK(rw3.constraints.ok());

  for (const auto& act : r22.actions) CHECK(verify_module_algebra(act, 4).ok());
  // eta stays free
  auto r_eta = classify_linear_actions(2, roots(2), Target::QPlane, CycloElem::from_int(5));
  for (const auto& act : r_eta.actions) CHECK(verify_module_algebra(act, 4).ok());
}

TEST_CASE("non-diagonal grouplikes are impossible at mu = -1") {
  for (int kappa : {0, 1}) {
    auto rep = verify_nondiagonal_impossible(kappa);
    INFO(rep.str());
    CHECK(rep.ok());
  }
}

TEST_CASE("smash product structure") {
  auto s = build_smash(standard_action(2, 1, Target::QPlane));
  // (1#x)(r#1) = g(r)#x + x(r)#1 for r in {u, v}
  CElem x = CElem::generator(s.pres, "x");
  for (int i : {0, 1}) {
    CElem r = CElem::generator(s.action.algebra, i);
    CElem lhs = x * embed_in_smash(s, r);
    CElem rhs = embed_in_smash(s, act_g(s.action, r)) * x + embed_in_smash(s, act_x(s.action, r));
    CHECK(lhs == rhs);
  }
  // Weyl smash encodes v u = mu^{-1}(u v - 1)
  auto sw = build_smash(standard_action(3, 1, Target::Weyl));
  CElem u = CElem::generator(sw.pres, "u"), v = CElem::generator(sw.pres, "v");
  CHECK(v * u == (u * v - CElem::one(sw.pres)).scaled(roots(3).inverse()));

  auto sa = build_smash(affine3_action());
  CElem au = CElem::generator(sa.pres, "u"), av = CElem::generator(sa.pres, "v"), aw = CElem::generator(sa.pres, "w");
  CycloElem lam = roots(3), mu = roots(3);
  CHECK(au * av == (av * au).scaled(mu));
  CHECK(av * aw == (aw * av).scaled(lam * mu));
  CHECK(aw * au == (au * aw).scaled(mu));
}

TEST_CASE("primeness of the smash product") {
  auto s22 = build_smash(standard_action(2, 1, Target::QPlane));
  auto r22 = is_prime_smash(s22);
  CHECK(r22.prime);
  REQUIRE(r22.witness.has_value());
  CHECK(*r22.witness == CElem::generator(s22.action.algebra, 0));

  // m = 2, n = 4: not prime
  auto c42 = classify_linear_actions(4, roots(2), Target::QPlane, CycloElem::one(1));
  REQUIRE(c42.actions.size() == 2);
  auto s42 = build_smash(c42.actions[0]);
  CHECK_FALSE(is_prime_smash(s42).prime);

  auto sw3 = build_smash(standard_action(3, 1, Target::Weyl));
  auto rw3 = is_prime_smash(sw3);
  CHECK(rw3.prime);
  REQUIRE(rw3.witness.has_value());
  // witness u^i with mu^i = lam^{-1} = mu^2
  CHECK(*rw3.witness == CElem::monomial(sw3.action.algebra, {2, 0}, CycloElem::one(3)));
}
