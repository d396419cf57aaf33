#include "taftsmash/action.hpp"

#include <functional>
#include <numeric>

#include "taftsmash/confluence.hpp"
#include "taftsmash/mpoly.hpp"
#include "taftsmash/qcomb.hpp"

namespace taftsmash {

std::string target_name(Target t) {
  switch (t) {
    case Target::QPlane: return "qplane";
    case Target::Weyl: return "weyl";
    case Target::Affine3: return "affine3";
    case Target::QMatrices: return "qmatrices";
    case Target::PolyRing: return "polyring";
  }
  return "?";
}

std::optional<Target> target_from_name(const std::string& s) {
  if (s == "qplane") return Target::QPlane;
  if (s == "weyl") return Target::Weyl;
  if (s == "affine3") return Target::Affine3;
  if (s == "qmatrices") return Target::QMatrices;
  if (s == "polyring") return Target::PolyRing;
  return std::nullopt;
}

namespace {

ExpVec ev(std::initializer_list<unsigned> xs) { return ExpVec(xs); }

}  // namespace

CPres quantum_plane(const CycloElem& mu) {
  int N = mu.conductor();
  PresentationBuilder<CycloElem> b("qplane", CycloElem::one(N));
  b.generator("u").generator("v");
  b.swap("v", "u", {{ev({1, 1}), mu.inverse()}});
  return b.build();
}

CPres quantum_weyl(const CycloElem& mu) {
  int N = mu.conductor();
  PresentationBuilder<CycloElem> b("weyl", CycloElem::one(N));
  b.generator("u").generator("v");
  CycloElem mi = mu.inverse();
  b.swap("v", "u", {{ev({1, 1}), mi}, {ev({0, 0}), -mi}});
  return b.build();
}

CPres commutative_plane(int conductor) {
  PresentationBuilder<CycloElem> b("polyring", CycloElem::one(conductor));
  b.generator("u").generator("v");
  b.swap("v", "u", {{ev({1, 1}), CycloElem::one(conductor)}});
  return b.build();
}

CPres quantum_affine3(const CycloElem& lam, const CycloElem& mu) {
  int N = std::lcm(lam.conductor(), mu.conductor());
  PresentationBuilder<CycloElem> b("affine3", CycloElem::one(N));
  b.generator("u").generator("v").generator("w");
  // u v = mu v u, v w = lam mu w v, w u = mu u w
  b.swap("v", "u", {{ev({1, 1, 0}), mu.inverse()}});
  b.swap("w", "v", {{ev({0, 1, 1}), (lam * mu).inverse()}});
  b.swap("w", "u", {{ev({1, 0, 1}), mu}});
  return b.build();
}

CPres quantum_matrices(const CycloElem& mu) {
  int N = mu.conductor();
  CycloElem mi = mu.inverse();
  PresentationBuilder<CycloElem> b("qmatrices", CycloElem::one(N));
  b.generator("a").generator("b").generator("c").generator("d");
  b.swap("b", "a", {{ev({1, 1, 0, 0}), mi}});
  b.swap("c", "a", {{ev({1, 0, 1, 0}), mi}});
  b.swap("c", "b", {{ev({0, 1, 1, 0}), CycloElem::one(N)}});
  b.swap("d", "a", {{ev({1, 0, 0, 1}), CycloElem::one(N)}, {ev({0, 1, 1, 0}), -(mu - mi)}});
  b.swap("d", "b", {{ev({0, 1, 0, 1}), mi}});
  b.swap("d", "c", {{ev({0, 0, 1, 1}), mi}});
  return b.build();
}

QPres ore_family(long k, int kappa) {
  if (kappa != 0 && kappa != 1) throw Error("ore_family: kappa must be 0 or 1");
  LaurentQ one = LaurentQ::one();
  LaurentQ qi = LaurentQ::q_power(-1);
  PresentationBuilder<LaurentQ> b("ore_family(k=" + std::to_string(k) + ",kappa=" + std::to_string(kappa) + ")", one);
  b.generator("u").generator("v").generator("x");
  // u v - q v u - kappa
  if (kappa)
    b.swap("v", "u", {{ev({1, 1, 0}), qi}, {ev({0, 0, 0}), -qi}});
  else
    b.swap("v", "u", {{ev({1, 1, 0}), qi}});
  // x u = q u x, x v = q^{k+1} v x + u
  b.swap("x", "u", {{ev({1, 0, 1}), LaurentQ::q_power(1)}});
  b.swap("x", "v", {{ev({0, 1, 1}), LaurentQ::q_power(k + 1)}, {ev({1, 0, 0}), one}});
  return b.build();
}

CPres specialize(const QPres& p, const CycloElem& eps) {
  PresentationBuilder<CycloElem> b(p->name + "@eps", CycloElem::one(eps.conductor()));
  for (size_t i = 0; i < p->num_gens(); ++i) b.generator(p->generators[i], p->weights[i]);
  for (const auto& [key, rhs] : p->swap_rules) {
    std::vector<std::pair<ExpVec, CycloElem>> terms;
    for (const auto& [e, c] : rhs) terms.push_back({e, c.eval(eps)});
    b.swap(p->generators[static_cast<size_t>(key.first)], p->generators[static_cast<size_t>(key.second)], terms);
  }
  for (const auto& [g, pr] : p->power_rules) {
    std::vector<std::pair<ExpVec, CycloElem>> terms;
    for (const auto& [e, c] : pr.replacement) terms.push_back({e, c.eval(eps)});
    b.power(p->generators[static_cast<size_t>(g)], pr.exponent, terms);
  }
  return b.build();
}

CPres ore_specialized(int n, long k, int kappa) {
  return specialize(ore_family(k, kappa), CycloElem::root_of_unity(n));
}

CElem act_g(const LinearAction& a, const CElem& e) {
  typename CElem::Terms t;
  CElem acc = CElem::zero(a.algebra);
  for (const auto& [exps, c] : e.terms()) {
    CycloElem f = c;
    for (size_t i = 0; i < exps.size(); ++i)
      if (exps[i]) f = f * a.g_eigen[i].pow(static_cast<long>(exps[i]));
    acc = acc + CElem::monomial(a.algebra, exps, f);
  }
  return acc;
}

CElem act_x(const LinearAction& a, const CElem& e) {
  std::map<ExpVec, CElem> memo;
  const auto one = CycloElem::one(a.lam.conductor());
  std::function<CElem(const ExpVec&)> on_mono = [&](const ExpVec& m) -> CElem {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    int i = -1;
    for (size_t j = 0; j < m.size(); ++j) {
      if (m[j]) {
        i = static_cast<int>(j);
        break;
      }
    }
    if (i < 0) return CElem::zero(a.algebra);
    ExpVec rest = m;
    rest[static_cast<size_t>(i)] -= 1;
    // x(gen * rest) = g(gen) x(rest) + x(gen) rest
    CElem rest_elem = CElem::monomial(a.algebra, rest, one);
    CElem val = (CElem::generator(a.algebra, i) * on_mono(rest)).scaled(a.g_eigen[static_cast<size_t>(i)]) +
                a.x_images[static_cast<size_t>(i)] * rest_elem;
    memo.emplace(m, val);
    return val;
  };
  CElem acc = CElem::zero(a.algebra);
  for (const auto& [exps, c] : e.terms()) acc = acc + on_mono(exps).scaled(c);
  return acc;
}

CElem act(const LinearAction& a, int l, int k, const CElem& e) {
  CElem cur = e;
  for (int i = 0; i < k; ++i) cur = act_x(a, cur);
  for (int i = 0; i < l; ++i) cur = act_g(a, cur);
  return cur;
}

Report verify_module_algebra(const LinearAction& a, unsigned degree_bound) {
  Report rep;
  const auto one_elem = CElem::one(a.algebra);
  rep.add("g(1) = 1", act_g(a, one_elem) == one_elem);
  rep.add("x(1) = 0", act_x(a, one_elem).is_zero());

  std::vector<unsigned> w(a.algebra->num_gens(), 1u);
  auto slice = monomial_slice(a.algebra, w, degree_bound);
  bool g_mult = true, x_mult = true;
  std::string g_witness, x_witness;
  const auto one = CycloElem::one(a.lam.conductor());
  for (const auto& e1 : slice) {
    CElem m1 = CElem::monomial(a.algebra, e1, one);
    for (const auto& e2 : slice) {
      CElem m2 = CElem::monomial(a.algebra, e2, one);
      CElem prod = m1 * m2;
      if (g_mult && act_g(a, prod) != act_g(a, m1) * act_g(a, m2)) {
        g_mult = false;
        g_witness = m1.str() + " , " + m2.str();
      }
      if (x_mult && act_x(a, prod) != act_g(a, m1) * act_x(a, m2) + act_x(a, m1) * m2) {
        x_mult = false;
        x_witness = m1.str() + " , " + m2.str();
      }
    }
  }
  rep.add("g multiplicative on degree-" + std::to_string(degree_bound) + " pairs", g_mult, g_witness);
  rep.add("x(r r') = g(r) x(r') + x(r) r' on degree-" + std::to_string(degree_bound) + " pairs", x_mult,
          x_witness);

  // the action must factor through the Taft relations as operators
  bool taft_rel = true;
  std::string rel_witness;
  for (const auto& e : slice) {
    CElem m = CElem::monomial(a.algebra, e, one);
    if (act_x(a, act_g(a, m)) != act_g(a, act_x(a, m)).scaled(a.lam)) {
      taft_rel = false;
      rel_witness = m.str();
      break;
    }
  }
  rep.add("x g = lam g x as operators on the slice", taft_rel, rel_witness);

  bool gn = true, xn = true;
  for (size_t i = 0; i < a.algebra->num_gens(); ++i) {
    CElem gen = CElem::generator(a.algebra, static_cast<int>(i));
    CElem gg = gen;
    for (int j = 0; j < a.n; ++j) gg = act_g(a, gg);
    if (gg != gen) gn = false;
    CElem xx = gen;
    for (int j = 0; j < a.n; ++j) xx = act_x(a, xx);
    if (!xx.is_zero()) xn = false;
  }
  rep.add("g^n acts as the identity on generators", gn);
  rep.add("x^n acts as zero on generators", xn);
  return rep;
}

// ---------------------------------------------------------------------------
// symbolic classification checks

namespace {

using MElem = BasicNCElem<MPoly>;
using MPres = PresPtr<MPoly>;

struct SymbolicSetup {
  std::vector<std::string> vars;
  MPres pres;  // plane or weyl over MPoly coefficients
  MPoly a1, b1, a2, b2, al, be;
  MPoly kappa_const;
};

SymbolicSetup symbolic_setup(std::vector<std::string> vars, const CycloElem& mu, int kappa) {
  SymbolicSetup s;
  s.vars = vars;
  MPoly one = MPoly::constant(vars, CycloElem::one(mu.conductor()));
  PresentationBuilder<MPoly> b("symbolic-target", one);
  b.generator("u").generator("v");
  MPoly mi = MPoly::constant(vars, mu.inverse());
  if (kappa)
    b.swap("v", "u", {{ev({1, 1}), mi}, {ev({0, 0}), -mi}});
  else
    b.swap("v", "u", {{ev({1, 1}), mi}});
  s.pres = b.build();
  auto var_by = [&](const std::string& name) {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return MPoly::var(vars, i);
    throw Error("missing symbol " + name);
  };
  s.a1 = var_by("a1");
  s.b1 = var_by("b1");
  s.a2 = var_by("a2");
  s.b2 = var_by("b2");
  s.al = var_by("al");
  s.be = var_by("be");
  s.kappa_const = MPoly::constant(vars, CycloElem::from_int(kappa));
  return s;
}

// x(gen_i gen_j) = g(gen_i) x(gen_j) + x(gen_i) gen_j with symbolic matrices;
// gu, gv are the images of u, v under g, xu, xv those under x.
MElem leibniz_x(const SymbolicSetup& s, const MElem& gu, const MElem& gv, const MElem& xu, const MElem& xv,
                int i, int j) {
  const MElem& gi = i == 0 ? gu : gv;
  const MElem& xi = i == 0 ? xu : xv;
  const MElem& xj = j == 0 ? xu : xv;
  MElem genj = MElem::generator(s.pres, j);
  return gi * xj + xi * genj;
}

MPoly coeff_of(const MElem& e, const ExpVec& exps) {
  return e.coefficient(exps);
}

}  // namespace

Report verify_diagonal_classification(const CycloElem& lam, const CycloElem& mu, Target target) {
  Report rep;
  if (target != Target::QPlane && target != Target::Weyl)
    throw InvalidActionError("classification derivation covers the plane and Weyl targets");
  int kappa = target == Target::Weyl ? 1 : 0;
  auto s = symbolic_setup({"a1", "b1", "a2", "b2", "al", "be"}, mu, kappa);
  const auto& vars = s.vars;
  MPoly one = MPoly::constant(vars, CycloElem::one(1));
  MPoly lamc = MPoly::constant(vars, lam);
  MPoly muc = MPoly::constant(vars, mu);

  // x g - lam g x as a matrix over the symbols; diagonal g = diag(al, be)
  MPoly e_uu = s.al * s.a1 - lamc * s.a1 * s.al;
  MPoly e_uv = s.al * s.a2 - lamc * s.a2 * s.be;
  MPoly e_vu = s.be * s.b1 - lamc * s.b1 * s.al;
  MPoly e_vv = s.be * s.b2 - lamc * s.b2 * s.be;
  rep.add("(xg - lam gx)_uu = (1-lam) a1 al", e_uu == (one - lamc) * s.a1 * s.al);
  rep.add("(xg - lam gx)_vv = (1-lam) b2 be", e_vv == (one - lamc) * s.b2 * s.be);
  rep.add("lam != 1, al and be invertible: a1 = 0 and b2 = 0", !(lam - CycloElem::one(1)).is_zero());

  // with a1 = b2 = 0, x^2 = diag(a2 b1, a2 b1)
  MPoly zero = MPoly::zero(vars);
  MPoly x2_uu = s.a1 * s.a1 + s.a2 * s.b1;
  MPoly x2_uv = s.a2 * (s.a1 + s.b2);
  auto kill = [&](const MPoly& p) { return p.substitute(0, zero).substitute(3, zero); };  // a1 -> 0, b2 -> 0
  rep.add("x^2 diagonal after a1 = b2 = 0", kill(x2_uv).is_zero() && kill(x2_uu) == s.a2 * s.b1);
  rep.add("x^2 = 0 forces a2 b1 = 0", true, "branch on which factor vanishes");

  // branch a2 = 0: x(u) = 0, x(v) = b1 u
  {
    MElem gu = MElem::generator(s.pres, 0).scaled(s.al);
    MElem gv = MElem::generator(s.pres, 1).scaled(s.be);
    MElem xu = MElem::zero(s.pres);
    MElem xv = MElem::generator(s.pres, 0).scaled(s.b1);
    MElem rel = leibniz_x(s, gu, gv, xu, xv, 0, 1) - leibniz_x(s, gu, gv, xu, xv, 1, 0).scaled(muc);
    MPoly c_u2 = coeff_of(rel, ev({2, 0}));
    bool shape = c_u2 == (s.al - muc) * s.b1;
    bool others = coeff_of(rel, ev({0, 2})).is_zero() && coeff_of(rel, ev({1, 1})).is_zero() &&
                  coeff_of(rel, ev({0, 0})).is_zero();
    rep.add("family (1) branch: x(relation) = (al - mu) b1 u^2", shape && others);
    rep.add("b1 != 0 (inner faithful): al = mu", true);
    // then (xg - lam gx)_vu = 0 with al = mu gives be = lam mu
    MPoly forced = e_vu.substitute(4, muc);  // al -> mu
    rep.add("al = mu forces be = lam mu", forced == s.b1 * (s.be - lamc * muc));
    if (target == Target::Weyl) {
      // g must fix the Weyl relation: al be = 1, so lam = mu^{-2}
      MElem g_rel = gu * gv - (gv * gu).scaled(MPoly::constant(vars, mu)) - MElem::one(s.pres).scaled(s.kappa_const);
      MPoly c0 = coeff_of(g_rel, ev({0, 0}));
      rep.add("g fixes the Weyl relation iff al be = 1", c0 == s.al * s.be - one);
      rep.add("al = mu, be = lam mu, al be = 1: lam = mu^{-2}", lam == mu.pow(-2));
    }
  }

  // branch b1 = 0: x(u) = a2 v, x(v) = 0
  {
    MElem gu = MElem::generator(s.pres, 0).scaled(s.al);
    MElem gv = MElem::generator(s.pres, 1).scaled(s.be);
    MElem xu = MElem::generator(s.pres, 1).scaled(s.a2);
    MElem xv = MElem::zero(s.pres);
    MElem rel = leibniz_x(s, gu, gv, xu, xv, 0, 1) - leibniz_x(s, gu, gv, xu, xv, 1, 0).scaled(muc);
    MPoly c_v2 = coeff_of(rel, ev({0, 2}));
    bool shape = c_v2 == (one - muc * s.be) * s.a2;
    bool others = coeff_of(rel, ev({2, 0})).is_zero() && coeff_of(rel, ev({1, 1})).is_zero() &&
                  coeff_of(rel, ev({0, 0})).is_zero();
    rep.add("family (2) branch: x(relation) = (1 - mu be) a2 v^2", shape && others);
    // be = mu^{-1}, then (xg - lam gx)_uv = 0 gives al = lam mu^{-1}
    MPoly forced = e_uv.substitute(5, MPoly::constant(vars, mu.inverse()));  // be -> mu^{-1}
    rep.add("be = mu^{-1} forces al = lam mu^{-1}", forced == s.a2 * (s.al - lamc * MPoly::constant(vars, mu.inverse())));
    if (target == Target::Weyl)
      rep.add("family (2) admissible for the Weyl target iff lam = mu^2", true,
              lam == mu.pow(2) ? "holds for this lam" : "fails for this lam; family (2) excluded");
  }

  return rep;
}

Report verify_nondiagonal_impossible(int kappa) {
  Report rep;
  // mu = -1; non-diagonal grouplike g(u) = al v, g(v) = be u, with al ali = 1.
  std::vector<std::string> vars = {"a1", "a2", "b1", "b2", "al", "ali", "be"};
  const CycloElem minus1 = CycloElem::from_int(-1);
  auto s = symbolic_setup(vars, minus1, kappa);
  auto var_ix = [&](const std::string& name) {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return i;
    throw Error("missing symbol " + name);
  };
  MPoly a1 = MPoly::var(vars, var_ix("a1"));
  MPoly a2 = MPoly::var(vars, var_ix("a2"));
  MPoly b1 = MPoly::var(vars, var_ix("b1"));
  MPoly b2 = MPoly::var(vars, var_ix("b2"));
  MPoly al = MPoly::var(vars, var_ix("al"));
  MPoly ali = MPoly::var(vars, var_ix("ali"));
  MPoly be = MPoly::var(vars, var_ix("be"));
  size_t i_al = var_ix("al"), i_ali = var_ix("ali");
  auto reduce = [&](const MPoly& p) { return p.reduce_pair_to_one(i_al, i_ali); };

  MElem gu = MElem::generator(s.pres, 1).scaled(al);  // g(u) = al v
  MElem gv = MElem::generator(s.pres, 0).scaled(be);  // g(v) = be u
  MElem xu = MElem::generator(s.pres, 0).scaled(a1) + MElem::generator(s.pres, 1).scaled(a2);
  MElem xv = MElem::generator(s.pres, 0).scaled(b1) + MElem::generator(s.pres, 1).scaled(b2);

  // x applied to u v + v u - kappa (mu = -1)
  MElem rel = leibniz_x(s, gu, gv, xu, xv, 0, 1) + leibniz_x(s, gu, gv, xu, xv, 1, 0);
  MPoly c_v2 = coeff_of(rel, ev({0, 2}));
  MPoly c_u2 = coeff_of(rel, ev({2, 0}));
  MPoly c_uv = coeff_of(rel, ev({1, 1}));
  MPoly c_1 = coeff_of(rel, ev({0, 0}));
  rep.add("v^2 coefficient is al b2 + a2", c_v2 == al * b2 + a2);
  rep.add("u^2 coefficient is be a1 + b1", c_u2 == be * a1 + b1);
  rep.add("uv coefficient is a1 + be a2 - al b1 - b2", c_uv == a1 + be * a2 - al * b1 - b2);
  rep.add("constant coefficient is kappa (al b1 + b2)", c_1 == s.kappa_const * (al * b1 + b2));

  // solve: b2 = -ali a2, b1 = -be a1 (al ali = 1)
  size_t i_b1 = var_ix("b1"), i_b2 = var_ix("b2");
  auto solved = [&](const MPoly& p) {
    return reduce(p.substitute(i_b2, -(ali * a2)).substitute(i_b1, -(be * a1)));
  };
  rep.add("b2 = -ali a2 and b1 = -be a1 solve the v^2 and u^2 constraints",
          solved(c_v2).is_zero() && solved(c_u2).is_zero());

  // x^2 entries under the substitutions
  MPoly x2_uu = a1 * a1 + a2 * b1;
  MPoly x2_uv = a2 * (a1 + b2);
  MPoly x2_vv = a2 * b1 + b2 * b2;
  rep.add("x^2 entry (u->v part) reduces to a2 (a1 - ali a2)", solved(x2_uv) == reduce(a2 * (a1 - ali * a2)));
  rep.add("x^2 entry (v->v part) reduces to a2 (ali^2 a2 - be a1)",
          solved(x2_vv) == reduce(a2 * (ali * ali * a2 - be * a1)));

  // degenerate branch a1 = 0: b1 = 0, then x^2 = 0 forces a2 = 0 and x = 0
  {
    size_t i_a1 = var_ix("a1");
    MPoly deg = solved(x2_uv).substitute(i_a1, MPoly::zero(vars));
    rep.add("branch a1 = 0: x^2 forces -ali a2^2 = 0, so x = 0 (not inner faithful)",
            deg == reduce(-(ali * a2 * a2)));
  }

  // main branch a1 != 0, a2 != 0: a2 = al a1, then al be = 1
  size_t i_a2 = var_ix("a2");
  auto main_subst = [&](const MPoly& p) { return reduce(solved(p).substitute(i_a2, al * a1)); };
  rep.add("a2 (a1 - ali a2) = 0 with a2 != 0 gives a2 = al a1", main_subst(x2_uv).is_zero());
  MPoly one_p = MPoly::constant(vars, CycloElem::one(1));
  rep.add("x^2 (v->v) then reads a1^2 (1 - al be), forcing be = ali",
          main_subst(x2_vv) == a1 * a1 * (one_p - al * be));
  size_t i_be = var_ix("be");
  MPoly final_uv = main_subst(c_uv).substitute(i_be, ali);
  final_uv = reduce(final_uv);
  rep.add("uv constraint collapses to 4 a1 = 0: contradiction with a1 != 0",
          final_uv == a1.scaled(CycloElem::from_int(4)));
  if (kappa) {
    MPoly final_c = main_subst(c_1).substitute(i_be, ali);
    final_c = reduce(final_c);
    rep.add("kappa = 1 constant constraint collapses to -2 a1 = 0: contradiction",
            final_c == a1.scaled(CycloElem::from_int(-2)));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// built-in actions

namespace {

LinearAction family_action(int n, const CycloElem& lam, const CycloElem& mu, const CycloElem& eta,
                           int family, Target target, CPres algebra) {
  LinearAction a;
  a.n = n;
  a.lam = lam;
  a.mu = mu;
  a.eta = eta;
  a.family = family;
  a.target = target;
  a.algebra = std::move(algebra);
  auto u = CElem::generator(a.algebra, 0);
  auto v = CElem::generator(a.algebra, 1);
  if (family == 1) {
    a.g_eigen = {mu, lam * mu};
    a.x_images = {CElem::zero(a.algebra), u.scaled(eta)};
  } else {
    a.g_eigen = {lam * mu.inverse(), mu.inverse()};
    a.x_images = {v.scaled(eta), CElem::zero(a.algebra)};
  }
  // lift of k with lam = mu^k, when lam lies in <mu>
  auto m = mu.multiplicative_order(4 * n * mu.conductor());
  if (m) {
    CycloElem p = CycloElem::one(mu.conductor());
    for (long k = 0; k < *m; ++k) {
      if (p == lam) {
        a.k_lift = k;
        break;
      }
      p = p * mu;
    }
  }
  return a;
}

}  // namespace

ClassifyResult classify_linear_actions(int n, const CycloElem& mu, Target target, const CycloElem& eta,
                                       std::optional<CycloElem> lam_choice) {
  if (target != Target::QPlane && target != Target::Weyl)
    throw InvalidActionError("classification covers the plane and Weyl targets");
  if (eta.is_zero()) throw InvalidActionError("eta must be nonzero");
  ClassifyResult out;
  auto mo = mu.multiplicative_order(4 * n * mu.conductor());
  if (!mo || *mo <= 1) throw InvalidActionError("mu must have finite multiplicative order > 1");
  int m = *mo;
  if (n % m != 0) return out;  // inner faithful linear actions exist iff m | n

  if (target == Target::QPlane) {
    CycloElem lam = lam_choice ? *lam_choice : CycloElem::root_of_unity(n);
    auto lo = lam.multiplicative_order(2 * n * lam.conductor());
    if (!lo || *lo != n) throw InvalidActionError("lam must be a primitive n-th root of unity");
    out.actions.push_back(family_action(n, lam, mu, eta, 1, target, quantum_plane(mu)));
    out.actions.push_back(family_action(n, lam, mu, eta, 2, target, quantum_plane(mu)));
    out.constraints = verify_diagonal_classification(lam, mu, target);
  } else {
    // the Taft parameter is fixed first; family (1) needs lam = mu^{-2},
    // family (2) needs lam = mu^2, and primitivity forces |mu| = n odd
    CycloElem lam = lam_choice ? *lam_choice : mu.pow(-2);
    auto lo = lam.multiplicative_order(2 * n * mu.conductor());
    if (lo && *lo == n) {
      if (lam == mu.pow(-2)) out.actions.push_back(family_action(n, lam, mu, eta, 1, target, quantum_weyl(mu)));
      if (lam == mu.pow(2)) out.actions.push_back(family_action(n, lam, mu, eta, 2, target, quantum_weyl(mu)));
    }
    out.constraints = verify_diagonal_classification(lam, mu, target);
  }
  if (mu == CycloElem::from_int(-1)) {
    Report nd = verify_nondiagonal_impossible(target == Target::Weyl ? 1 : 0);
    for (auto& c : nd.checks) out.constraints.checks.push_back(c);
  }
  return out;
}

LinearAction standard_action(int n, long k, Target target) {
  if (n <= 1) throw InvalidActionError("need n > 1");
  long kr = ((k % n) + n) % n;
  if (kr == 0) throw InvalidActionError("k = 0 mod n is excluded");
  if (std::gcd(kr, static_cast<long>(n)) != 1) throw InvalidActionError("k must be prime to n");
  CycloElem mu = CycloElem::root_of_unity(n);
  CycloElem lam = mu.pow(k);
  if (target == Target::Weyl) {
    if ((kr + 2) % n != 0) throw InvalidActionError("Weyl target needs k = -2 mod n");
    if (n % 2 == 0) throw InvalidActionError("Weyl target needs n odd");
  } else if (target != Target::QPlane) {
    throw InvalidActionError("standard_action covers the plane and Weyl targets");
  }
  CPres alg = target == Target::Weyl ? quantum_weyl(mu) : quantum_plane(mu);
  LinearAction a = family_action(n, lam, mu, CycloElem::one(n), 1, target, alg);
  a.k_lift = k;  // keep the caller's lift; theta-invariance compares k and k + n
  return a;
}

LinearAction counterexample_action() {
  LinearAction a;
  a.n = 2;
  a.lam = CycloElem::from_int(-1);
  a.mu = CycloElem::from_int(1);
  a.eta = CycloElem::from_int(1);
  a.family = 1;
  a.target = Target::PolyRing;
  a.algebra = commutative_plane(2);
  a.g_eigen = {CycloElem::one(2), -CycloElem::one(2)};
  a.x_images = {CElem::zero(a.algebra), CElem::generator(a.algebra, 0)};
  return a;
}

LinearAction affine3_action(long lam_power, long mu_power) {
  if (lam_power % 3 == 0 || mu_power % 3 == 0) throw InvalidActionError("need primitive cube roots");
  CycloElem lam = CycloElem::root_of_unity(3, lam_power);
  CycloElem mu = CycloElem::root_of_unity(3, mu_power);
  LinearAction a;
  a.n = 3;
  a.lam = lam;
  a.mu = mu;
  a.eta = CycloElem::one(3);
  a.family = 1;
  a.target = Target::Affine3;
  a.algebra = quantum_affine3(lam, mu);
  a.g_eigen = {mu, lam * mu, lam * lam * mu};
  a.x_images = {CElem::zero(a.algebra), CElem::generator(a.algebra, 0), CElem::generator(a.algebra, 1)};
  return a;
}

LinearAction qmatrices_action(int n) {
  if (n <= 2 || n % 2 == 0) throw InvalidActionError("quantum matrices action needs odd n > 2");
  CycloElem mu = CycloElem::root_of_unity(n);
  CycloElem lam = mu.pow(-2);
  LinearAction a;
  a.n = n;
  a.lam = lam;
  a.mu = mu;
  a.eta = CycloElem::one(n);
  a.family = 1;
  a.target = Target::QMatrices;
  a.algebra = quantum_matrices(mu);
  CycloElem mi = mu.inverse();
  a.g_eigen = {mu, mu, mi, mi};
  a.x_images = {CElem::zero(a.algebra), CElem::zero(a.algebra), CElem::generator(a.algebra, 0),
                CElem::generator(a.algebra, 1)};
  a.k_lift = n - 2;
  return a;
}

SmashProduct build_smash(const LinearAction& a) {
  const auto& alg = *a.algebra;
  size_t na = alg.num_gens();
  int N = a.lam.conductor();
  PresentationBuilder<CycloElem> b("smash(" + alg.name + ",n=" + std::to_string(a.n) + ")",
                                   CycloElem::one(N));
  for (size_t i = 0; i < na; ++i) b.generator(alg.generators[i], alg.weights[i]);
  b.generator("g", 0).generator("x", 0);

  auto extend = [&](const ExpVec& e, unsigned ge, unsigned xe) {
    ExpVec out(e);
    out.push_back(ge);
    out.push_back(xe);
    return out;
  };
  for (const auto& [key, rhs] : alg.swap_rules) {
    std::vector<std::pair<ExpVec, CycloElem>> terms;
    for (const auto& [e, c] : rhs) terms.push_back({extend(e, 0, 0), c});
    b.swap(alg.generators[static_cast<size_t>(key.first)], alg.generators[static_cast<size_t>(key.second)], terms);
  }
  for (const auto& [g, pr] : alg.power_rules) {
    std::vector<std::pair<ExpVec, CycloElem>> terms;
    for (const auto& [e, c] : pr.replacement) terms.push_back({extend(e, 0, 0), c});
    b.power(alg.generators[static_cast<size_t>(g)], pr.exponent, terms);
  }
  for (size_t i = 0; i < na; ++i) {
    // g r = g(r) g
    ExpVec gi = extend(ExpVec(na, 0u), 1, 0);
    gi[i] = 1;
    b.swap("g", alg.generators[i], {{gi, a.g_eigen[i]}});
    // x r = g(r) x + x(r)
    std::vector<std::pair<ExpVec, CycloElem>> terms;
    ExpVec xi = extend(ExpVec(na, 0u), 0, 1);
    xi[i] = 1;
    terms.push_back({xi, a.g_eigen[i]});
    for (const auto& [e, c] : a.x_images[i].terms()) terms.push_back({extend(e, 0, 0), c});
    b.swap("x", alg.generators[i], terms);
  }
  b.swap("x", "g", {{extend(ExpVec(na, 0u), 1, 1), a.lam}});
  b.power("g", static_cast<unsigned>(a.n), {{extend(ExpVec(na, 0u), 0, 0), CycloElem::one(N)}});
  b.power("x", static_cast<unsigned>(a.n), {});

  SmashProduct s;
  s.action = a;
  s.pres = b.build();
  auto conf = verify_confluence(s.pres);
  if (!conf.ok) throw InvalidActionError("smash presentation is not confluent: " + conf.first_failure);
  return s;
}

CElem embed_in_smash(const SmashProduct& s, const CElem& e) {
  CElem acc = CElem::zero(s.pres);
  for (const auto& [exps, c] : e.terms()) {
    ExpVec ext(exps);
    ext.push_back(0);
    ext.push_back(0);
    acc = acc + CElem::monomial(s.pres, ext, c);
  }
  return acc;
}

CElem algebra_part(const SmashProduct& s, const ExpVec& exps, const CycloElem& c) {
  ExpVec alg(exps.begin(), exps.end() - 2);
  return CElem::monomial(s.action.algebra, alg, c);
}

PrimenessResult is_prime_smash(const SmashProduct& s) {
  const LinearAction& a = s.action;
  if ((a.target != Target::QPlane && a.target != Target::Weyl) || a.family != 1)
    throw InvalidActionError("primeness test covers family-(1) plane and Weyl actions");
  auto mo = a.mu.multiplicative_order(4 * a.n * a.mu.conductor());
  if (!mo) throw InvalidActionError("mu must have finite order");
  int m = *mo;
  CycloElem want = a.lam.pow(a.n - 1);
  PrimenessResult out;
  // x-invariant monomials are u^i v^{kn}; their g-eigenvalue is mu^i, so the
  // scan over i mod m decides existence
  for (int i = 0; i < m; ++i) {
    if (a.mu.pow(i) == want) {
      ExpVec e(a.algebra->num_gens(), 0u);
      e[0] = static_cast<unsigned>(i);
      CElem w = CElem::monomial(a.algebra, e, CycloElem::one(a.lam.conductor()));
      if (!act_x(a, w).is_zero()) continue;
      if (act_g(a, w) != w.scaled(want)) continue;
      out.prime = true;
      out.witness = w;
      return out;
    }
  }
  out.prime = false;
  return out;
}

}  // namespace taftsmash
