#include "taftsmash/taft.hpp"

#include <sstream>

#include "taftsmash/qcomb.hpp"

namespace taftsmash {

TaftAlgebra TaftAlgebra::make(int n, const CycloElem& lam) {
  if (n <= 1) throw Error("Taft algebra needs n > 1");
  auto ord = lam.multiplicative_order(2 * n * lam.conductor());
  if (!ord || *ord != n) throw Error("lam must be a primitive n-th root of unity");
  ExpVec gx = {1, 1};
  PresentationBuilder<CycloElem> b("taft(n=" + std::to_string(n) + ")", CycloElem::one(lam.conductor()));
  b.generator("g", 0).generator("x", 0);
  b.swap("x", "g", {{gx, lam}});  // x g = lam g x
  b.power("g", static_cast<unsigned>(n), {{ExpVec{0, 0}, CycloElem::one(lam.conductor())}});
  b.power("x", static_cast<unsigned>(n), {});
  TaftAlgebra H;
  H.n = n;
  H.lam = lam;
  H.pres = b.build();
  return H;
}

CElem TaftAlgebra::monomial(int l, int k) const {
  return CElem::monomial(pres, ExpVec{static_cast<unsigned>(l), static_cast<unsigned>(k)},
                         CycloElem::one(lam.conductor()));
}

CycloElem TaftAlgebra::counit(const CElem& e) const {
  // eps(g) = 1, eps(x) = 0: only pure g-powers survive
  CycloElem acc = CycloElem::zero(lam.conductor());
  for (const auto& [exps, c] : e.terms()) {
    if (exps[1] == 0) acc += c;
  }
  return acc;
}

CElem TaftAlgebra::antipode(const CElem& e) const {
  // S(g) = g^{n-1}, S(x) = -g^{n-1} x, extended anti-multiplicatively:
  // S(g^l x^k) = S(x)^k S(g)^l
  CElem sg = monomial(n - 1, 0);
  CElem sx = -monomial(n - 1, 1);
  CElem acc = CElem::zero(pres);
  for (const auto& [exps, c] : e.terms()) {
    CElem term = CElem::scalar(pres, c);
    for (unsigned i = 0; i < exps[1]; ++i) term = term * sx;
    for (unsigned i = 0; i < exps[0]; ++i) term = term * sg;
    acc = acc + term;
  }
  return acc;
}

TaftTensor TaftTensor::unit(const TaftAlgebra& H, int arity) {
  TaftTensor t(H, arity);
  t.add(Key(static_cast<size_t>(arity), {0, 0}), CycloElem::one(H.lam.conductor()));
  return t;
}

void TaftTensor::add(const Key& key, const CycloElem& c) {
  if (c.is_zero()) return;
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

TaftTensor TaftTensor::operator+(const TaftTensor& o) const {
  TaftTensor t = *this;
  for (const auto& [k, c] : o.t_) t.add(k, c);
  return t;
}

TaftTensor TaftTensor::operator-(const TaftTensor& o) const {
  TaftTensor t = *this;
  for (const auto& [k, c] : o.t_) t.add(k, -c);
  return t;
}

TaftTensor TaftTensor::scaled(const CycloElem& s) const {
  TaftTensor t(H_, arity_);
  for (const auto& [k, c] : t_) t.add(k, c * s);
  return t;
}

bool TaftTensor::operator==(const TaftTensor& o) const {
  return arity_ == o.arity_ && t_ == o.t_;
}

TaftTensor TaftTensor::operator*(const TaftTensor& o) const {
  if (arity_ != o.arity_) throw Error("tensor arity mismatch");
  TaftTensor out(H_, arity_);
  for (const auto& [ka, ca] : t_) {
    for (const auto& [kb, cb] : o.t_) {
      // componentwise PBW products, then distribute
      std::vector<CElem> comps;
      comps.reserve(static_cast<size_t>(arity_));
      for (int s = 0; s < arity_; ++s)
        comps.push_back(H_.monomial(ka[static_cast<size_t>(s)].first, ka[static_cast<size_t>(s)].second) *
                        H_.monomial(kb[static_cast<size_t>(s)].first, kb[static_cast<size_t>(s)].second));
      std::vector<std::pair<Key, CycloElem>> partial{{Key{}, ca * cb}};
      for (const auto& comp : comps) {
        std::vector<std::pair<Key, CycloElem>> next;
        for (const auto& [key, coeff] : partial) {
          for (const auto& [exps, c] : comp.terms()) {
            Key nk = key;
            nk.push_back({static_cast<int>(exps[0]), static_cast<int>(exps[1])});
            next.push_back({std::move(nk), coeff * c});
          }
        }
        partial = std::move(next);
      }
      for (const auto& [key, coeff] : partial) out.add(key, coeff);
    }
  }
  return out;
}

TaftTensor TaftTensor::coproduct_at(int slot) const {
  TaftTensor out(H_, arity_ + 1);
  for (const auto& [key, c] : t_) {
    TaftTensor d = taft_coproduct(H_, key[static_cast<size_t>(slot)].first, key[static_cast<size_t>(slot)].second);
    for (const auto& [dk, dc] : d.terms()) {
      Key nk;
      nk.reserve(key.size() + 1);
      for (int s = 0; s < slot; ++s) nk.push_back(key[static_cast<size_t>(s)]);
      nk.push_back(dk[0]);
      nk.push_back(dk[1]);
      for (size_t s = static_cast<size_t>(slot) + 1; s < key.size(); ++s) nk.push_back(key[s]);
      out.add(nk, c * dc);
    }
  }
  return out;
}

TaftTensor TaftTensor::counit_at(int slot) const {
  TaftTensor out(H_, arity_ - 1);
  for (const auto& [key, c] : t_) {
    auto [l, k] = key[static_cast<size_t>(slot)];
    if (k != 0) continue;  // eps(g^l x^k) = delta_{k,0}
    Key nk;
    for (size_t s = 0; s < key.size(); ++s)
      if (static_cast<int>(s) != slot) nk.push_back(key[s]);
    out.add(nk, c);
  }
  return out;
}

CElem TaftTensor::mul_with_antipode(bool antipode_first, bool antipode_second) const {
  if (arity_ != 2) throw Error("mul_with_antipode needs arity 2");
  CElem acc = CElem::zero(H_.pres);
  for (const auto& [key, c] : t_) {
    CElem a = H_.monomial(key[0].first, key[0].second);
    CElem b = H_.monomial(key[1].first, key[1].second);
    if (antipode_first) a = H_.antipode(a);
    if (antipode_second) b = H_.antipode(b);
    acc = acc + (a * b).scaled(c);
  }
  return acc;
}

std::string TaftTensor::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*";
    for (size_t s = 0; s < key.size(); ++s) {
      if (s) os << "(x)";
      os << "g^" << key[s].first << "x^" << key[s].second;
    }
  }
  return os.str();
}

TaftTensor taft_coproduct(const TaftAlgebra& H, int l, int k) {
  if (l < 0 || k < 0 || l >= H.n || k >= H.n) throw Error("taft_coproduct: exponents out of range");
  TaftTensor out(H, 2);
  for (int i = 0; i <= k; ++i) {
    CycloElem c = q_binomial(k, i, H.lam);
    out.add({{(l + i) % H.n, k - i}, {l, i}}, c);
  }
  return out;
}

namespace {

TaftTensor tensor_of(const TaftAlgebra& H, const CElem& first, const CElem& second) {
  TaftTensor out(H, 2);
  for (const auto& [ea, ca] : first.terms())
    for (const auto& [eb, cb] : second.terms())
      out.add({{static_cast<int>(ea[0]), static_cast<int>(ea[1])},
               {static_cast<int>(eb[0]), static_cast<int>(eb[1])}},
              ca * cb);
  return out;
}

TaftTensor coproduct_of_elem(const TaftAlgebra& H, const CElem& e) {
  TaftTensor out(H, 2);
  for (const auto& [exps, c] : e.terms())
    out = out + taft_coproduct(H, static_cast<int>(exps[0]), static_cast<int>(exps[1])).scaled(c);
  return out;
}

}  // namespace

Report verify_hopf_axioms(const TaftAlgebra& H) {
  Report rep;
  const int n = H.n;
  const auto one = CycloElem::one(H.lam.conductor());

  TaftTensor dg = taft_coproduct(H, 1, 0);
  TaftTensor dx = taft_coproduct(H, 0, 1);

  // closed-form coproduct of each basis monomial agrees with Delta(g)^l Delta(x)^k
  bool mult_ok = true;
  for (int l = 0; l < n && mult_ok; ++l) {
    for (int k = 0; k < n && mult_ok; ++k) {
      TaftTensor prod = TaftTensor::unit(H, 2);
      for (int i = 0; i < l; ++i) prod = prod * dg;
      for (int i = 0; i < k; ++i) prod = prod * dx;
      mult_ok = prod == taft_coproduct(H, l, k);
    }
  }
  rep.add("coproduct is multiplicative on the basis", mult_ok);

  // algebra map on the relations
  {
    TaftTensor xg = dx * dg;
    TaftTensor gx = dg * dx;
    rep.add("coproduct respects x g = lam g x", xg == gx.scaled(H.lam));
    TaftTensor gpow = TaftTensor::unit(H, 2);
    for (int i = 0; i < n; ++i) gpow = gpow * dg;
    rep.add("coproduct respects g^n = 1", gpow == TaftTensor::unit(H, 2));
    TaftTensor xpow = TaftTensor::unit(H, 2);
    for (int i = 0; i < n; ++i) xpow = xpow * dx;
    rep.add("coproduct respects x^n = 0", xpow.is_zero());
    CycloElem ex = H.counit(H.x()), eg = H.counit(H.g());
    rep.add("counit respects the relations",
            (ex * eg == H.lam * eg * ex) && eg.pow(n).is_one() && ex.pow(n).is_zero());
  }

  bool coassoc = true, counit_ok = true, antipode_ok = true;
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k < n; ++k) {
      TaftTensor d = taft_coproduct(H, l, k);
      if (d.coproduct_at(0) != d.coproduct_at(1)) coassoc = false;
      TaftTensor id1 = d.counit_at(0);
      TaftTensor id2 = d.counit_at(1);
      TaftTensor self(H, 1);
      self.add({{l, k}}, one);
      if (id1 != self || id2 != self) counit_ok = false;
      CElem lhs = d.mul_with_antipode(true, false);
      CElem rhs = d.mul_with_antipode(false, true);
      CElem target = CElem::one(H.pres).scaled(H.counit(H.monomial(l, k)));
      if (lhs != target || rhs != target) antipode_ok = false;
    }
  }
  rep.add("coassociativity on the basis", coassoc);
  rep.add("counit axiom on the basis", counit_ok);
  rep.add("antipode axiom on the basis", antipode_ok);
  return rep;
}

}  // namespace taftsmash
