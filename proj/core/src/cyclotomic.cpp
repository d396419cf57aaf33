#include "taftsmash/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "taftsmash/errors.hpp"

namespace taftsmash {

namespace {

struct CycloCtx {
  int n = 1;
  int deg = 1;  // phi(n)
  RatPoly phi;
  // reduction of t^k mod Phi_n for k = deg .. 2*deg-2
  std::vector<std::vector<Rational>> powred;
};

const CycloCtx& ctx_for(int n) {
  static std::map<int, std::unique_ptr<CycloCtx>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<CycloCtx>();
  ctx->n = n;
  ctx->phi = cyclotomic_polynomial(n);
  ctx->deg = ctx->phi.degree();
  int d = ctx->deg;
  // t^d = -(phi - t^d); then extend one power at a time
  std::vector<Rational> cur(static_cast<size_t>(d), Rational(0));
  for (int i = 0; i < d; ++i) cur[static_cast<size_t>(i)] = -ctx->phi.coeff(i);
  ctx->powred.push_back(cur);
  for (int k = d + 1; k <= 2 * d - 2; ++k) {
    std::vector<Rational> next(static_cast<size_t>(d), Rational(0));
    // multiply cur by t, reduce the overflow term
    Rational top = cur[static_cast<size_t>(d - 1)];
    for (int i = d - 1; i > 0; --i) next[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
    next[0] = Rational(0);
    if (top != 0) {
      const auto& red = ctx->powred[0];
      for (int i = 0; i < d; ++i) next[static_cast<size_t>(i)] += top * red[static_cast<size_t>(i)];
    }
    ctx->powred.push_back(next);
    cur = std::move(next);
  }
  return *cache.emplace(n, std::move(ctx)).first->second;
}

std::vector<Rational> reduce_mod_phi(int n, const std::vector<Rational>& raw) {
  const CycloCtx& ctx = ctx_for(n);
  int d = ctx.deg;
  std::vector<Rational> out(static_cast<size_t>(d), Rational(0));
  std::vector<Rational> work = raw;
  // high powers beyond 2d-2 fall back to full polynomial division
  if (static_cast<int>(work.size()) > 2 * d - 1) {
    RatPoly p{work};
    auto [q, r] = p.divmod(ctx.phi);
    (void)q;
    work.assign(static_cast<size_t>(d), Rational(0));
    for (int i = 0; i <= r.degree(); ++i) work[static_cast<size_t>(i)] = r.coeff(i);
  }
  for (size_t k = 0; k < work.size(); ++k) {
    if (work[k] == 0) continue;
    if (static_cast<int>(k) < d) {
      out[k] += work[k];
    } else {
      const auto& red = ctx.powred[k - static_cast<size_t>(d)];
      for (int i = 0; i < d; ++i) out[static_cast<size_t>(i)] += work[k] * red[static_cast<size_t>(i)];
    }
  }
  return out;
}

}  // namespace

CycloElem CycloElem::zero(int conductor) {
  return CycloElem(conductor, std::vector<Rational>(static_cast<size_t>(ctx_for(conductor).deg), Rational(0)));
}

CycloElem CycloElem::one(int conductor) {
  return from_rational(Rational(1), conductor);
}

CycloElem CycloElem::from_rational(const Rational& r, int conductor) {
  auto e = zero(conductor);
  e.c_[0] = r;
  return e;
}

CycloElem CycloElem::root_of_unity(int conductor, long k) {
  if (conductor < 1) throw Error("root_of_unity: conductor must be positive");
  long kk = k % conductor;
  if (kk < 0) kk += conductor;
  std::vector<Rational> raw(static_cast<size_t>(kk) + 1, Rational(0));
  raw.back() = Rational(1);
  return CycloElem(conductor, reduce_mod_phi(conductor, raw));
}

CycloElem CycloElem::from_coeffs(int conductor, const std::vector<Rational>& coeffs) {
  return CycloElem(conductor, reduce_mod_phi(conductor, coeffs));
}

bool CycloElem::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycloElem::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycloElem::as_rational() const {
  if (!is_rational()) throw Error("as_rational on non-rational cyclotomic element");
  return c_[0];
}

CycloElem CycloElem::embedded(int conductor) const {
  if (conductor == conductor_) return *this;
  if (conductor % conductor_ != 0) throw Error("cyclotomic embedding needs divisible conductors");
  int step = conductor / conductor_;
  std::vector<Rational> raw(static_cast<size_t>((c_.size() - 1) * static_cast<size_t>(step)) + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) raw[i * static_cast<size_t>(step)] = c_[i];
  return CycloElem(conductor, reduce_mod_phi(conductor, raw));
}

std::pair<CycloElem, CycloElem> CycloElem::aligned(const CycloElem& a, const CycloElem& b) {
  if (a.conductor_ == b.conductor_) return {a, b};
  int l = std::lcm(a.conductor_, b.conductor_);
  return {a.embedded(l), b.embedded(l)};
}

CycloElem CycloElem::operator+(const CycloElem& o) const {
  auto [a, b] = aligned(*this, o);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

CycloElem CycloElem::operator-(const CycloElem& o) const {
  auto [a, b] = aligned(*this, o);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
  return a;
}

CycloElem CycloElem::operator-() const {
  CycloElem a = *this;
  for (auto& x : a.c_) x = -x;
  return a;
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
  auto [a, b] = aligned(*this, o);
  size_t d = a.c_.size();
  std::vector<Rational> raw(2 * d - 1, Rational(0));
  for (size_t i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (b.c_[j] == 0) continue;
      raw[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return CycloElem(a.conductor_, reduce_mod_phi(a.conductor_, raw));
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero cyclotomic element");
  const CycloCtx& ctx = ctx_for(conductor_);
  RatPoly a{std::vector<Rational>(c_)};
  auto res = ext_gcd(a, ctx.phi);
  // Phi_N is irreducible, so gcd(a, Phi_N) = 1 for nonzero a.
  if (res.g.degree() != 0) throw Error("cyclotomic inverse: gcd not constant");
  std::vector<Rational> raw(res.s.coeffs());
  return CycloElem(conductor_, reduce_mod_phi(conductor_, raw));
}

CycloElem CycloElem::operator/(const CycloElem& o) const {
  if (o.is_zero()) throw DivisionByZeroError("cyclotomic division by zero");
  auto [a, b] = aligned(*this, o);
  return a * b.inverse();
}

CycloElem CycloElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloElem acc = one(conductor_);
  CycloElem base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool CycloElem::operator==(const CycloElem& o) const {
  if (conductor_ == o.conductor_) return c_ == o.c_;
  auto [a, b] = aligned(*this, o);
  return a.c_ == b.c_;
}

std::optional<int> CycloElem::multiplicative_order(int bound) const {
  if (is_zero()) return std::nullopt;
  CycloElem p = *this;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p = p * *this;
  }
  return std::nullopt;
}

std::string CycloElem::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_string(c_[i]);
    if (i >= 1) {
      os << "*z" << conductor_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

CycloElem operator*(const Rational& s, const CycloElem& e) {
  return CycloElem::from_rational(s, 1) * e;
}

}  // namespace taftsmash
