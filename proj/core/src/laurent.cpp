#include "taftsmash/laurent.hpp"

#include <sstream>

#include "taftsmash/errors.hpp"

namespace taftsmash {

LaurentQ LaurentQ::from_cyclo(const CycloElem& c) {
  LaurentQ p;
  p.insert(0, c);
  return p;
}

LaurentQ LaurentQ::term(const CycloElem& c, long e) {
  LaurentQ p;
  p.insert(e, c);
  return p;
}

void LaurentQ::insert(long e, const CycloElem& c) {
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

CycloElem LaurentQ::coeff(long e) const {
  auto it = t_.find(e);
  return it == t_.end() ? CycloElem::zero(1) : it->second;
}

long LaurentQ::min_exp() const {
  if (t_.empty()) throw Error("min_exp of zero Laurent polynomial");
  return t_.begin()->first;
}

long LaurentQ::max_exp() const {
  if (t_.empty()) throw Error("max_exp of zero Laurent polynomial");
  return t_.rbegin()->first;
}

LaurentQ LaurentQ::operator+(const LaurentQ& o) const {
  LaurentQ p = *this;
  for (const auto& [e, c] : o.t_) p.insert(e, c);
  return p;
}

LaurentQ LaurentQ::operator-(const LaurentQ& o) const {
  LaurentQ p = *this;
  for (const auto& [e, c] : o.t_) p.insert(e, -c);
  return p;
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ p;
  for (const auto& [e, c] : t_) p.t_.emplace(e, -c);
  return p;
}

LaurentQ LaurentQ::operator*(const LaurentQ& o) const {
  LaurentQ p;
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) p.insert(e1 + e2, c1 * c2);
  return p;
}

LaurentQ LaurentQ::scaled(const CycloElem& s) const {
  LaurentQ p;
  for (const auto& [e, c] : t_) p.insert(e, c * s);
  return p;
}

bool LaurentQ::operator==(const LaurentQ& o) const {
  if (t_.size() != o.t_.size()) return false;
  auto it = t_.begin();
  auto jt = o.t_.begin();
  for (; it != t_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second != jt->second) return false;
  }
  return true;
}

CycloElem LaurentQ::eval(const CycloElem& q0) const {
  CycloElem acc = CycloElem::zero(1);
  for (const auto& [e, c] : t_) acc += c * q0.pow(e);
  return acc;
}

LaurentQ LaurentQ::compose_power(long m) const {
  if (m == 0) throw Error("compose_power with m = 0");
  LaurentQ p;
  for (const auto& [e, c] : t_) p.insert(e * m, c);
  return p;
}

LaurentQ LaurentQ::divide_exact(const LaurentQ& d) const {
  if (d.is_zero()) throw DivisionByZeroError("Laurent division by zero");
  if (is_zero()) return LaurentQ();
  // shift both to ordinary polynomials, divide, shift back
  long sn = min_exp(), sd = d.min_exp();
  std::map<long, CycloElem> r(t_);
  LaurentQ q;
  const CycloElem dlead = d.t_.rbegin()->second;
  long dmax = d.max_exp();
  while (!r.empty()) {
    long rmax = r.rbegin()->first;
    if (rmax - sn < dmax - sd) break;
    CycloElem f = r.rbegin()->second / dlead;
    long shift = rmax - dmax;
    q.insert(shift, f);
    for (const auto& [e, c] : d.t_) {
      auto it = r.find(e + shift);
      CycloElem nc = (it == r.end() ? CycloElem::zero(1) : it->second) - f * c;
      if (it != r.end()) r.erase(it);
      if (!nc.is_zero()) r.emplace(e + shift, nc);
    }
  }
  if (!r.empty()) throw NotDivisibleError("Laurent division has remainder");
  return q;
}

CycloElem LaurentQ::div_at(const CycloElem& eps) const {
  if (eps.is_zero()) throw Error("div_at requires a nonzero specialization point");
  if (is_zero()) return CycloElem::zero(1);
  long m = std::min<long>(min_exp(), 0);
  // this = q^m * P with P an ordinary polynomial; q^m is a unit of value eps^m
  std::map<long, CycloElem> p;
  for (const auto& [e, c] : t_) p.emplace(e - m, c);
  // synthetic division of P by (q - eps)
  long deg = p.rbegin()->first;
  CycloElem carry = CycloElem::zero(1);
  CycloElem value = CycloElem::zero(1);
  for (long e = deg; e >= 0; --e) {
    auto it = p.find(e);
    CycloElem ce = it == p.end() ? CycloElem::zero(1) : it->second;
    carry = ce + eps * carry;
    if (e == 0) {
      value = carry;  // P(eps), the remainder
    }
  }
  if (!value.is_zero()) throw NotDivisibleError("Laurent polynomial does not vanish at the specialization point");
  // quotient evaluated at eps via a second synthetic pass
  CycloElem qval = CycloElem::zero(1);
  carry = CycloElem::zero(1);
  for (long e = deg; e >= 1; --e) {
    auto it = p.find(e);
    CycloElem ce = it == p.end() ? CycloElem::zero(1) : it->second;
    carry = ce + eps * carry;  // coefficient of q^{e-1} in P/(q-eps)
    qval = qval * eps + carry;
  }
  return eps.pow(m) * qval;
}

std::string LaurentQ::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (e != 0) os << "*q^" << e;
  }
  return os.str();
}

}  // namespace taftsmash
