#include <doctest.h>

#include "taftsmash/io.hpp"

using namespace taftsmash;

TEST_CASE("presentation round-trips are bit-exact") {
  std::vector<CPres> cps = {quantum_plane(CycloElem::root_of_unity(3)),
                            quantum_weyl(CycloElem::root_of_unity(5)),
                            build_smash(standard_action(2, 1, Target::QPlane)).pres,
                            quantum_matrices(CycloElem::root_of_unity(3))};
  for (const auto& p : cps) {
    std::string first = presentation_to_json(p);
    auto back = std::get<CPres>(presentation_from_json(first));
    CHECK(back->structurally_equal(*p));
    CHECK(presentation_to_json(back) == first);
  }
  QPres q = ore_family(-2, 1);
  std::string first = presentation_to_json(q);
  auto back = std::get<QPres>(presentation_from_json(first));
  CHECK(back->structurally_equal(*q));
  CHECK(presentation_to_json(back) == first);
}

TEST_CASE("action round-trip") {
  for (auto a : {standard_action(3, 1, Target::QPlane), counterexample_action(), qmatrices_action(3)}) {
    std::string first = action_to_json(a);
    LinearAction back = action_from_json(first);
    CHECK(action_to_json(back) == first);
    CHECK(back.lam == a.lam);
    CHECK(back.mu == a.mu);
    CHECK(back.g_eigen == a.g_eigen);
    for (size_t i = 0; i < a.x_images.size(); ++i) CHECK(back.x_images[i] == a.x_images[i]);
  }
}

TEST_CASE("element round-trip keeps exact rationals") {
  auto p = quantum_plane(CycloElem::root_of_unity(3));
  CElem e = CElem::monomial(p, {2, 1}, CycloElem::from_rational(make_rational(-7, 3))) +
            CElem::monomial(p, {0, 1}, CycloElem::root_of_unity(3));
  CHECK(elem_from_json(p, elem_to_json(e)) == e);
}

TEST_CASE("span reports carry monomials with coefficients") {
  auto a = standard_action(2, 1, Target::QPlane);
  auto fr = fixed_ring(a, 4);
  std::string text = span_to_json(fr);
  CHECK(text.find("graded_span") != std::string::npos);
  CHECK(text.find("u^2") != std::string::npos);
}
