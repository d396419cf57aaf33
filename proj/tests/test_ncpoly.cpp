#include <doctest.h>

#include <random>

#include "taftsmash/action.hpp"
#include "taftsmash/confluence.hpp"

using namespace taftsmash;

namespace {

CycloElem roots(int n, long k = 1) { return CycloElem::root_of_unity(n, k); }

CElem random_elem(std::mt19937_64& rng, const CPres& p, unsigned max_degree) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::vector<unsigned> w(p->num_gens(), 1u);
  // weight-zero generators stay bounded through their truncations
  for (size_t i = 0; i < p->num_gens(); ++i) w[i] = p->weights[i];
  auto slice = monomial_slice(p, w, max_degree);
  std::uniform_int_distribution<size_t> pick(0, slice.size() - 1);
  CElem acc = CElem::zero(p);
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    long c = coeff(rng);
    if (c == 0) c = 1;
    acc = acc + CElem::monomial(p, slice[pick(rng)], CycloElem::from_int(c));
  }
  return acc;
}

std::vector<CPres> builtin_presentations() {
  std::vector<CPres> out;
  out.push_back(quantum_plane(roots(2)));
  out.push_back(quantum_plane(roots(3)));
  out.push_back(quantum_weyl(roots(3)));
  out.push_back(commutative_plane(2));
  out.push_back(quantum_affine3(roots(3), roots(3)));
  out.push_back(quantum_matrices(roots(3)));
  out.push_back(TaftAlgebra::make(2, CycloElem::from_int(-1)).pres);
  out.push_back(TaftAlgebra::make(3, roots(3)).pres);
  out.push_back(build_smash(standard_action(2, 1, Target::QPlane)).pres);
  out.push_back(build_smash(standard_action(3, 1, Target::QPlane)).pres);
  out.push_back(build_smash(standard_action(3, 1, Target::Weyl)).pres);
  out.push_back(build_smash(counterexample_action()).pres);
  out.push_back(build_smash(affine3_action()).pres);
  out.push_back(build_smash(qmatrices_action(3)).pres);
  out.push_back(ore_specialized(2, 1, 0));
  out.push_back(ore_specialized(3, 1, 0));
  out.push_back(ore_specialized(3, 1, 1));
  return out;
}

}  // namespace

TEST_CASE("normal forms of misordered words") {
  auto mu = roots(3);
  auto plane = quantum_plane(mu);
  // v u -> mu^{-1} u v
  CElem vu = CElem::from_word(plane, {1, 0}, CycloElem::one(3));
  CHECK(vu == CElem::monomial(plane, {1, 1}, mu.inverse()));

  auto taft2 = TaftAlgebra::make(2, CycloElem::from_int(-1));
  CElem xg = taft2.x() * taft2.g();
  CHECK(xg == -(taft2.g() * taft2.x()));

  auto s = build_smash(standard_action(2, 1, Target::QPlane));
  CElem x = CElem::generator(s.pres, "x");
  CElem v = CElem::generator(s.pres, "v");
  CElem u = CElem::generator(s.pres, "u");
  // x v = lam mu v x + u with lam = mu = -1 and eta = 1
  CHECK(x * v == v * x + u);
}

TEST_CASE("taft power truncations") {
  auto taft3 = TaftAlgebra::make(3, roots(3));
  CHECK(taft3.monomial(2, 0) * taft3.g() == CElem::one(taft3.pres));
  CHECK((taft3.monomial(0, 2) * taft3.x()).is_zero());
}

TEST_CASE("commutators in the smash product") {
  auto s = build_smash(standard_action(2, 1, Target::QPlane));
  CElem g = CElem::generator(s.pres, "g");
  CElem u = CElem::generator(s.pres, "u");
  // g(u) = -u gives gu = -ug, so [g, u] = 2 u g up to the sign convention
  CHECK(g * u == -(u * g));
  CHECK(commutator(g, u) == (u * g).scaled(CycloElem::from_int(-2)));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 5; ++i) {
    CElem a = random_elem(rng, s.pres, 3);
    CHECK(commutator(a, CElem::one(s.pres)).is_zero());
  }
}

TEST_CASE("normal form is idempotent") {
  std::mt19937_64 rng(99);
  for (const auto& p : builtin_presentations()) {
    for (int trial = 0; trial < 10; ++trial) {
      CElem e = random_elem(rng, p, 3);
      CHECK(CElem::from_terms(p, e.terms()) == e);
    }
  }
}

TEST_CASE("multiplication is associative on random triples") {
  std::mt19937_64 rng(2026);
  for (const auto& p : builtin_presentations()) {
    for (int trial = 0; trial < 25; ++trial) {
      CElem a = random_elem(rng, p, 2);
      CElem b = random_elem(rng, p, 2);
      CElem c = random_elem(rng, p, 2);
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("basis dimension counts") {
  for (int n : {2, 3, 4}) {
    auto taft = TaftAlgebra::make(n, roots(n));
    std::vector<unsigned> w(2, 0u);
    CHECK(monomial_slice(taft.pres, w, 0).size() == static_cast<size_t>(n) * static_cast<size_t>(n));
  }
  for (int n : {2, 3}) {
    auto s = build_smash(standard_action(n, 1, Target::QPlane));
    // u, v exponents below n and the full Taft part: n^4 monomials
    std::vector<unsigned> w = {1, 1, 0, 0};
    auto slice = monomial_slice(s.pres, w, static_cast<unsigned>(2 * (n - 1)));
    size_t count = 0;
    for (const auto& e : slice)
      if (e[0] < static_cast<unsigned>(n) && e[1] < static_cast<unsigned>(n)) ++count;
    CHECK(count == static_cast<size_t>(n * n * n * n));
  }
}

TEST_CASE("every built-in presentation is confluent") {
  for (const auto& p : builtin_presentations()) {
    auto rep = verify_confluence(p);
    INFO(p->name, ": ", rep.first_failure);
    CHECK(rep.ok);
  }
}

TEST_CASE("a corrupted Weyl smash rule fails the overlap check") {
  // wrong coefficient on x v (mu instead of lam mu); x*v*u no longer resolves
  auto mu = roots(3);
  auto lam = mu.pow(-2);
  PresentationBuilder<CycloElem> b("corrupted-weyl-smash", CycloElem::one(3));
  b.generator("u").generator("v").generator("g", 0).generator("x", 0);
  CycloElem mi = mu.inverse();
  b.swap("v", "u", {{ExpVec{1, 1, 0, 0}, mi}, {ExpVec{0, 0, 0, 0}, -mi}});
  b.swap("g", "u", {{ExpVec{1, 0, 1, 0}, mu}});
  b.swap("g", "v", {{ExpVec{0, 1, 1, 0}, lam * mu}});
  b.swap("x", "u", {{ExpVec{1, 0, 0, 1}, mu}});
  b.swap("x", "v", {{ExpVec{0, 1, 0, 1}, mu}, {ExpVec{1, 0, 0, 0}, CycloElem::one(3)}});
  b.swap("x", "g", {{ExpVec{0, 0, 1, 1}, lam}});
  b.power("g", 3, {{ExpVec{0, 0, 0, 0}, CycloElem::one(3)}});
  b.power("x", 3, {});
  auto rep = verify_confluence(b.build());
  CHECK_FALSE(rep.ok);
  CHECK(rep.first_failure.find("x*v*u") != std::string::npos);
}

TEST_CASE("dropping the derivation term from x v gives a consistent but wrong algebra") {
  // the eta = 0 variant stays confluent; it is simply not the smash of the
  // action (the skew-primitive part of x is gone)
  auto a = standard_action(3, 1, Target::Weyl);
  auto mu = a.mu;
  auto lam = a.lam;
  PresentationBuilder<CycloElem> b("eta0-weyl-smash", CycloElem::one(3));
  b.generator("u").generator("v").generator("g", 0).generator("x", 0);
  CycloElem mi = mu.inverse();
  b.swap("v", "u", {{ExpVec{1, 1, 0, 0}, mi}, {ExpVec{0, 0, 0, 0}, -mi}});
  b.swap("g", "u", {{ExpVec{1, 0, 1, 0}, mu}});
  b.swap("g", "v", {{ExpVec{0, 1, 1, 0}, lam * mu}});
  b.swap("x", "u", {{ExpVec{1, 0, 0, 1}, mu}});
  b.swap("x", "v", {{ExpVec{0, 1, 0, 1}, lam * mu}});  // missing + u
  b.swap("x", "g", {{ExpVec{0, 0, 1, 1}, lam}});
  b.power("g", 3, {{ExpVec{0, 0, 0, 0}, CycloElem::one(3)}});
  b.power("x", 3, {});
  auto p = b.build();
  CHECK(verify_confluence(p).ok);
  // x r != g(r) x + x(r) for r = v in this presentation
  CElem x = CElem::generator(p, "x");
  CElem v = CElem::generator(p, "v");
  CElem u = CElem::generator(p, "u");
  CHECK(x * v != v.scaled(lam * mu) * x + u);
}

TEST_CASE("apply_endomorphism") {
  auto mu = roots(3);
  auto plane = quantum_plane(mu);
  CElem u = CElem::generator(plane, 0), v = CElem::generator(plane, 1);
  std::mt19937_64 rng(7);
  CElem e = random_elem(rng, plane, 3);
  CHECK(apply_endomorphism({u, v}, e) == e);

  auto two = CycloElem::from_int(2), three = CycloElem::from_int(3);
  CElem uv = u * v;
  CHECK(apply_endomorphism({u.scaled(two), v.scaled(three)}, uv) == uv.scaled(two * three));
}

TEST_CASE("filtration degrees") {
  auto rmu = ore_specialized(2, 1, 0);
  CElem uvx = CElem::monomial(rmu, {1, 1, 1}, CycloElem::one(2));
  CHECK(filtration_degree(uvx, {2, 1, 1}) == 4);
  CHECK(filtration_degree(CElem::one(rmu), {2, 1, 1}) == 0);
  auto plane = quantum_plane(roots(2));
  CElem m = CElem::monomial(plane, {2, 3}, CycloElem::one(2));
  CHECK(filtration_degree(m, {2, 1}) == 7);
}

TEST_CASE("specialization of the q-family is the directly built algebra") {
  for (int kappa : {0, 1}) {
    auto direct = ore_specialized(3, 1, kappa);
    auto via_family = specialize(ore_family(1, kappa), roots(3));
    CHECK(direct->structurally_equal(*via_family));
  }
}

TEST_CASE("presentation mismatch is an error") {
  auto p2 = quantum_plane(roots(2));
  auto p3 = quantum_plane(roots(3));
  CElem a = CElem::generator(p2, 0);
  CElem b = CElem::generator(p3, 0);
  CHECK_THROWS_AS((void)(a * b), PresentationMismatchError);
}
