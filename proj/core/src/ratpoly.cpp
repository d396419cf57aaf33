#include "taftsmash/ratpoly.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "taftsmash/errors.hpp"

namespace taftsmash {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

RatPoly RatPoly::constant(const Rational& c) {
  return RatPoly(std::vector<Rational>{c});
}

RatPoly RatPoly::monomial(const Rational& c, int k) {
  if (c == 0) return RatPoly();
  std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
  v.back() = c;
  return RatPoly(std::move(v));
}

void RatPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

Rational RatPoly::leading() const {
  if (is_zero()) return Rational(0);
  return c_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-() const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x = -x;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::scaled(const Rational& s) const {
  if (s == 0) return RatPoly();
  std::vector<Rational> v(c_);
  for (auto& x : v) x *= s;
  return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  if (d.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  RatPoly r = *this;
  if (r.degree() < d.degree()) return {RatPoly(), r};
  std::vector<Rational> q(static_cast<size_t>(r.degree() - d.degree()) + 1, Rational(0));
  const Rational lead_inv = 1 / d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Rational f = r.leading() * lead_inv;
    q[static_cast<size_t>(shift)] = f;
    r = r - (d * RatPoly::monomial(f, shift));
  }
  return {RatPoly(std::move(q)), r};
}

RatPoly RatPoly::divide_exact(const RatPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw NotDivisibleError("polynomial division has remainder");
  return q;
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::string RatPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c_[i]) << ")";
    if (i > 0) os << "*" << var << "^" << i;
  }
  return os.str();
}

ExtGcdResult ext_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(Rational(1)), s1 = RatPoly();
  RatPoly t0 = RatPoly(), t1 = RatPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    RatPoly s2 = s0 - q * s1;
    RatPoly t2 = t0 - q * t1;
    r0 = r1; r1 = r;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (!r0.is_zero()) {
    Rational inv = 1 / r0.leading();
    r0 = r0.scaled(inv);
    s0 = s0.scaled(inv);
    t0 = t0.scaled(inv);
  }
  return {r0, s0, t0};
}

int totient(int n) {
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const RatPoly& cyclotomic_polynomial(int n) {
  if (n < 1) throw Error("cyclotomic_polynomial: n must be positive");
  static std::map<int, RatPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<const RatPoly&(int)> get = [&](int m) -> const RatPoly& {
    auto jt = cache.find(m);
    if (jt != cache.end()) return jt->second;
    // t^m - 1
    std::vector<Rational> tm(static_cast<size_t>(m) + 1, Rational(0));
    tm[0] = Rational(-1);
    tm.back() = Rational(1);
    RatPoly num{std::move(tm)};
    for (int d = 1; d < m; ++d) {
      if (m % d == 0) num = num.divide_exact(get(d));
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return get(n);
}

}  // namespace taftsmash
