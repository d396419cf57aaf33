#include "taftsmash/io.hpp"

#include <json.hpp>

namespace taftsmash {

namespace {

using json = nlohmann::ordered_json;

json cyclo_to_json(const CycloElem& c) {
  json coeffs = json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(to_string(r));
  return json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

CycloElem cyclo_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& s : j.at("coeffs")) coeffs.push_back(rational_from_string(s.get<std::string>()));
  return CycloElem::from_coeffs(j.at("conductor").get<int>(), coeffs);
}

json laurent_to_json(const LaurentQ& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json{{"exp", e}, {"coeff", cyclo_to_json(c)}});
  return json{{"terms", terms}};
}

LaurentQ laurent_from_json(const json& j) {
  LaurentQ p;
  for (const auto& t : j.at("terms"))
    p = p + LaurentQ::term(cyclo_from_json(t.at("coeff")), t.at("exp").get<long>());
  return p;
}

template <class Coeff, class CoeffWriter>
json presentation_to_json_impl(const BasicPresentation<Coeff>& p, const std::string& ring_type,
                               CoeffWriter write) {
  json out;
  out["schema_version"] = 1;
  out["kind"] = "presentation";
  out["name"] = p.name;
  out["coeff_ring"] = ring_type;
  out["generators"] = p.generators;
  out["weights"] = p.weights;
  json swaps = json::array();
  for (const auto& [key, rhs] : p.swap_rules) {
    json terms = json::array();
    for (const auto& [e, c] : rhs) terms.push_back(json{{"exps", e}, {"coeff", write(c)}});
    swaps.push_back(json{{"later", p.generators[static_cast<size_t>(key.first)]},
                         {"earlier", p.generators[static_cast<size_t>(key.second)]},
                         {"rhs", terms}});
  }
  out["swap_rules"] = swaps;
  json powers = json::array();
  for (const auto& [g, pr] : p.power_rules) {
    json terms = json::array();
    for (const auto& [e, c] : pr.replacement) terms.push_back(json{{"exps", e}, {"coeff", write(c)}});
    powers.push_back(json{{"gen", p.generators[static_cast<size_t>(g)]},
                          {"exponent", pr.exponent},
                          {"rhs", terms}});
  }
  out["power_rules"] = powers;
  return out;
}

template <class Coeff, class CoeffReader>
PresPtr<Coeff> presentation_from_json_impl(const json& j, Coeff one, CoeffReader read) {
  PresentationBuilder<Coeff> b(j.at("name").get<std::string>(), one);
  auto gens = j.at("generators").get<std::vector<std::string>>();
  auto weights = j.at("weights").get<std::vector<unsigned>>();
  for (size_t i = 0; i < gens.size(); ++i) b.generator(gens[i], weights[i]);
  for (const auto& r : j.at("swap_rules")) {
    std::vector<std::pair<ExpVec, Coeff>> terms;
    for (const auto& t : r.at("rhs"))
      terms.push_back({t.at("exps").get<ExpVec>(), read(t.at("coeff"))});
    b.swap(r.at("later").get<std::string>(), r.at("earlier").get<std::string>(), terms);
  }
  for (const auto& r : j.at("power_rules")) {
    std::vector<std::pair<ExpVec, Coeff>> terms;
    for (const auto& t : r.at("rhs"))
      terms.push_back({t.at("exps").get<ExpVec>(), read(t.at("coeff"))});
    b.power(r.at("gen").get<std::string>(), r.at("exponent").get<unsigned>(), terms);
  }
  return b.build();
}

json elem_to_json_impl(const CElem& e) {
  json terms = json::array();
  for (const auto& [exps, c] : e.terms()) terms.push_back(json{{"exps", exps}, {"coeff", cyclo_to_json(c)}});
  return terms;
}

int max_conductor_of(const json& j) {
  int n = 1;
  for (const auto& r : j.at("swap_rules"))
    for (const auto& t : r.at("rhs")) n = std::max(n, t.at("coeff").at("conductor").get<int>());
  for (const auto& r : j.at("power_rules"))
    for (const auto& t : r.at("rhs")) n = std::max(n, t.at("coeff").at("conductor").get<int>());
  return n;
}

}  // namespace

std::string presentation_to_json(const CPres& p) {
  return presentation_to_json_impl(*p, "cyclotomic", cyclo_to_json).dump(2);
}

std::string presentation_to_json(const QPres& p) {
  return presentation_to_json_impl(*p, "laurent_q", laurent_to_json).dump(2);
}

AnyPres presentation_from_json(const std::string& text) {
  json j = json::parse(text);
  std::string ring = j.at("coeff_ring").get<std::string>();
  if (ring == "cyclotomic") {
    int n = max_conductor_of(j);
    return presentation_from_json_impl<CycloElem>(j, CycloElem::one(n),
                                                  [](const json& c) { return cyclo_from_json(c); });
  }
  if (ring == "laurent_q") {
    return presentation_from_json_impl<LaurentQ>(j, LaurentQ::one(),
                                                 [](const json& c) { return laurent_from_json(c); });
  }
  throw Error("unknown coefficient ring: " + ring);
}

std::string action_to_json(const LinearAction& a) {
  json out;
  out["schema_version"] = 1;
  out["kind"] = "linear_action";
  out["n"] = a.n;
  out["lam"] = cyclo_to_json(a.lam);
  out["mu"] = cyclo_to_json(a.mu);
  out["eta"] = cyclo_to_json(a.eta);
  if (a.k_lift)
    out["k"] = *a.k_lift;
  else
    out["k"] = nullptr;
  out["family"] = a.family;
  out["target"] = target_name(a.target);
  out["algebra"] = json::parse(presentation_to_json(a.algebra));
  json eig = json::array();
  for (const auto& c : a.g_eigen) eig.push_back(cyclo_to_json(c));
  out["g_eigen"] = eig;
  json ximg = json::array();
  for (const auto& e : a.x_images) ximg.push_back(elem_to_json_impl(e));
  out["x_images"] = ximg;
  return out.dump(2);
}

LinearAction action_from_json(const std::string& text) {
  json j = json::parse(text);
  LinearAction a;
  a.n = j.at("n").get<int>();
  a.lam = cyclo_from_json(j.at("lam"));
  a.mu = cyclo_from_json(j.at("mu"));
  a.eta = cyclo_from_json(j.at("eta"));
  if (!j.at("k").is_null()) a.k_lift = j.at("k").get<long>();
  a.family = j.at("family").get<int>();
  auto t = target_from_name(j.at("target").get<std::string>());
  if (!t) throw Error("unknown target");
  a.target = *t;
  a.algebra = std::get<CPres>(presentation_from_json(j.at("algebra").dump()));
  for (const auto& c : j.at("g_eigen")) a.g_eigen.push_back(cyclo_from_json(c));
  for (const auto& terms : j.at("x_images")) {
    CElem e = CElem::zero(a.algebra);
    for (const auto& t2 : terms)
      e = e + CElem::monomial(a.algebra, t2.at("exps").get<ExpVec>(), cyclo_from_json(t2.at("coeff")));
    a.x_images.push_back(e);
  }
  return a;
}

std::string span_to_json(const GradedSpan& s) {
  json out;
  out["schema_version"] = 1;
  out["kind"] = "graded_span";
  out["degree_bound"] = s.degree_bound;
  out["dim"] = s.dim();
  json basis = json::array();
  for (const auto& e : s.basis) {
    basis.push_back(json{{"str", e.str()}, {"terms", elem_to_json_impl(e)}});
  }
  out["basis"] = basis;
  return out.dump(2);
}

std::string elem_to_json(const CElem& e) {
  return elem_to_json_impl(e).dump(2);
}

CElem elem_from_json(const CPres& p, const std::string& text) {
  json j = json::parse(text);
  CElem e = CElem::zero(p);
  for (const auto& t : j)
    e = e + CElem::monomial(p, t.at("exps").get<ExpVec>(), cyclo_from_json(t.at("coeff")));
  return e;
}

}  // namespace taftsmash
