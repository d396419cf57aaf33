#include "taftsmash/mpoly.hpp"

#include <mutex>
#include <set>
#include <sstream>

#include "taftsmash/errors.hpp"

namespace taftsmash {

MPoly::VarsPtr MPoly::intern(const std::vector<std::string>& vars) {
  struct Cmp {
    bool operator()(const VarsPtr& a, const VarsPtr& b) const { return *a < *b; }
  };
  static std::set<VarsPtr, Cmp> registry;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto probe = std::make_shared<const std::vector<std::string>>(vars);
  auto it = registry.find(probe);
  if (it != registry.end()) return *it;
  registry.insert(probe);
  return probe;
}

MPoly::MPoly() : vars_(intern({})) {}

MPoly MPoly::zero(const std::vector<std::string>& vars) {
  return MPoly(intern(vars), {});
}

MPoly MPoly::constant(const std::vector<std::string>& vars, const CycloElem& c) {
  MPoly p(intern(vars), {});
  p.insert(Exp(p.vars_->size(), 0u), c);
  return p;
}

MPoly MPoly::var(const std::vector<std::string>& vars, size_t i) {
  if (i >= vars.size()) throw Error("MPoly::var index out of range");
  MPoly p(intern(vars), {});
  Exp e(p.vars_->size(), 0u);
  e[i] = 1;
  p.insert(e, CycloElem::one(1));
  return p;
}

MPoly MPoly::monomial(const std::vector<std::string>& vars, const Exp& e, const CycloElem& c) {
  MPoly p(intern(vars), {});
  if (e.size() != p.vars_->size()) throw Error("MPoly::monomial exponent length mismatch");
  p.insert(e, c);
  return p;
}

void MPoly::insert(const Exp& e, const CycloElem& c) {
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

bool MPoly::is_constant() const {
  if (t_.empty()) return true;
  if (t_.size() != 1) return false;
  for (unsigned x : t_.begin()->first)
    if (x) return false;
  return true;
}

CycloElem MPoly::constant_value() const {
  if (t_.empty()) return CycloElem::zero(1);
  if (!is_constant()) throw Error("constant_value of non-constant polynomial");
  return t_.begin()->second;
}

std::pair<MPoly, MPoly> MPoly::aligned(const MPoly& a, const MPoly& b) {
  if (a.vars_ == b.vars_) return {a, b};
  if (a.vars_->empty() && a.is_constant()) {
    MPoly ea(b.vars_, {});
    ea.insert(Exp(b.vars_->size(), 0u), a.constant_value());
    return {ea, b};
  }
  if (b.vars_->empty() && b.is_constant()) {
    MPoly eb(a.vars_, {});
    eb.insert(Exp(a.vars_->size(), 0u), b.constant_value());
    return {a, eb};
  }
  if (*a.vars_ == *b.vars_) return {a, b};
  throw Error("MPoly operands live over different variable lists");
}

MPoly MPoly::operator+(const MPoly& o) const {
  auto [a, b] = aligned(*this, o);
  for (const auto& [e, c] : b.t_) a.insert(e, c);
  return a;
}

MPoly MPoly::operator-(const MPoly& o) const {
  auto [a, b] = aligned(*this, o);
  for (const auto& [e, c] : b.t_) a.insert(e, -c);
  return a;
}

MPoly MPoly::operator-() const {
  MPoly p(vars_, {});
  for (const auto& [e, c] : t_) p.t_.emplace(e, -c);
  return p;
}

MPoly MPoly::operator*(const MPoly& o) const {
  auto [a, b] = aligned(*this, o);
  MPoly p(a.vars_, {});
  for (const auto& [ea, ca] : a.t_) {
    for (const auto& [eb, cb] : b.t_) {
      Exp e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      p.insert(e, ca * cb);
    }
  }
  return p;
}

MPoly MPoly::scaled(const CycloElem& s) const {
  MPoly p(vars_, {});
  for (const auto& [e, c] : t_) p.insert(e, c * s);
  return p;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly acc(vars_, {});
  acc.insert(Exp(vars_->size(), 0u), CycloElem::one(1));
  MPoly base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool MPoly::operator==(const MPoly& o) const {
  auto [a, b] = aligned(*this, o);
  return a.t_ == b.t_;
}

MPoly MPoly::derivative(size_t v) const {
  MPoly p(vars_, {});
  for (const auto& [e, c] : t_) {
    if (e[v] == 0) continue;
    Exp de(e);
    de[v] -= 1;
    p.insert(de, CycloElem::from_rational(Rational(static_cast<long>(e[v]))) * c);
  }
  return p;
}

CycloElem MPoly::eval(const std::vector<CycloElem>& point) const {
  if (point.size() != vars_->size()) throw Error("MPoly::eval point length mismatch");
  CycloElem acc = CycloElem::zero(1);
  for (const auto& [e, c] : t_) {
    CycloElem m = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) m = m * point[i].pow(static_cast<long>(e[i]));
    acc += m;
  }
  return acc;
}

MPoly MPoly::eval_partial(size_t v, const CycloElem& value) const {
  if (degree(v) <= 0) return *this;
  MPoly p(vars_, {});
  for (const auto& [e, c] : t_) {
    Exp re(e);
    unsigned k = re[v];
    re[v] = 0;
    p.insert(re, c * value.pow(static_cast<long>(k)));
  }
  return p;
}

MPoly MPoly::substitute(size_t v, const MPoly& repl) const {
  if (degree(v) <= 0) return *this;
  if (repl.is_constant()) return eval_partial(v, repl.constant_value());
  MPoly acc(vars_, {});
  for (const auto& [e, c] : t_) {
    Exp re(e);
    unsigned k = re[v];
    re[v] = 0;
    MPoly term(vars_, {});
    term.insert(re, c);
    if (k) term = term * repl.pow(k);
    acc = acc + term;
  }
  return acc;
}

int MPoly::degree(size_t v) const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, static_cast<int>(e[v]));
  return d;
}

long MPoly::total_degree() const {
  long d = 0;
  for (const auto& [e, c] : t_) {
    long s = 0;
    for (unsigned x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

long MPoly::weighted_degree(const std::vector<long>& w) const {
  if (w.size() != vars_->size()) throw Error("weight vector length mismatch");
  long d = 0;
  for (const auto& [e, c] : t_) {
    long s = 0;
    for (size_t i = 0; i < e.size(); ++i) s += w[i] * static_cast<long>(e[i]);
    d = std::max(d, s);
  }
  return d;
}

std::pair<MPoly::Exp, CycloElem> MPoly::leading_lex() const {
  if (t_.empty()) throw Error("leading term of zero polynomial");
  auto it = t_.rbegin();
  return {it->first, it->second};
}

MPoly MPoly::unit_normalized() const {
  if (t_.empty()) return *this;
  return scaled(leading_lex().second.inverse());
}

bool MPoly::try_divide(const MPoly& divisor, MPoly* quotient) const {
  if (divisor.is_zero()) throw DivisionByZeroError("MPoly division by zero");
  auto [a, d] = aligned(*this, divisor);
  auto [lde, ldc] = d.leading_lex();
  MPoly q(a.vars_, {});
  MPoly r = a;
  while (!r.is_zero()) {
    auto [lre, lrc] = r.leading_lex();
    bool divisible = true;
    Exp e(lre);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < lde[i]) {
        divisible = false;
        break;
      }
      e[i] -= lde[i];
    }
    if (!divisible) return false;
    MPoly m(a.vars_, {});
    m.insert(e, lrc / ldc);
    q = q + m;
    r = r - m * d;
  }
  if (quotient) *quotient = q;
  return true;
}

MPoly MPoly::divide_exact(const MPoly& divisor) const {
  MPoly q;
  if (!try_divide(divisor, &q)) throw NotDivisibleError("multivariate division has remainder");
  return q;
}

MPoly MPoly::reduce_pair_to_one(size_t i, size_t j) const {
  MPoly p(vars_, {});
  for (const auto& [e, c] : t_) {
    Exp re(e);
    unsigned m = std::min(re[i], re[j]);
    re[i] -= m;
    re[j] -= m;
    p.insert(re, c);
  }
  return p;
}

std::string MPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    for (size_t i = 0; i < it->first.size(); ++i) {
      if (!it->first[i]) continue;
      os << "*" << (*vars_)[i];
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

}  // namespace taftsmash
