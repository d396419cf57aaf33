#pragma once

#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "taftsmash/errors.hpp"

namespace taftsmash {

using ExpVec = std::vector<unsigned>;

/// A presented algebra with a PBW-style rewriting system: an ordered list of
/// generators, one swap rule per misordered pair (the normal-ordered rewrite
/// of later*earlier), and optional power-truncation rules gen^p -> element.
/// Normal-form monomials are the increasing-order words; elements are finite
/// maps from exponent vectors to coefficients.
template <class Coeff>
struct BasicPresentation {
  using Terms = std::map<ExpVec, Coeff>;
  struct PowerRule {
    unsigned exponent;
    Terms replacement;
  };

  std::string name;
  std::vector<std::string> generators;
  std::vector<unsigned> weights;  // filtration weights
  Coeff one;                      // unit of the coefficient ring, carries its context
  std::map<std::pair<int, int>, Terms> swap_rules;  // key (later, earlier), later > earlier
  std::map<int, PowerRule> power_rules;

  size_t num_gens() const { return generators.size(); }

  int gen_index(const std::string& g) const {
    for (size_t i = 0; i < generators.size(); ++i)
      if (generators[i] == g) return static_cast<int>(i);
    throw Error("unknown generator: " + g);
  }

  bool structurally_equal(const BasicPresentation& o) const {
    return generators == o.generators && weights == o.weights && one == o.one &&
           swap_rules == o.swap_rules && power_rules_equal(o);
  }

 private:
  bool power_rules_equal(const BasicPresentation& o) const {
    if (power_rules.size() != o.power_rules.size()) return false;
    for (const auto& [g, pr] : power_rules) {
      auto it = o.power_rules.find(g);
      if (it == o.power_rules.end()) return false;
      if (it->second.exponent != pr.exponent || it->second.replacement != pr.replacement) return false;
    }
    return true;
  }
};

template <class Coeff>
using PresPtr = std::shared_ptr<const BasicPresentation<Coeff>>;

namespace detail {

constexpr int kMaxRewriteDepth = 20000;

template <class Coeff>
void add_term(std::map<ExpVec, Coeff>& t, const ExpVec& e, const Coeff& c) {
  if (c.is_zero()) return;
  auto it = t.find(e);
  if (it == t.end()) {
    t.emplace(e, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t.erase(it);
  }
}

template <class Coeff>
void mul_mono_terms(const BasicPresentation<Coeff>& p, const ExpVec& a, const Coeff& c, const ExpVec& b,
                    std::map<ExpVec, Coeff>& out, int depth);

// Multiply the normal monomial (m, c) by a single generator on the right.
template <class Coeff>
void mul_mono_gen(const BasicPresentation<Coeff>& p, const ExpVec& m, const Coeff& c, int g,
                  std::map<ExpVec, Coeff>& out, int depth) {
  if (depth > kMaxRewriteDepth)
    throw Error("rewriting depth exceeded in presentation '" + p.name + "'");
  int later = -1;
  for (int j = static_cast<int>(p.num_gens()) - 1; j > g; --j) {
    if (m[static_cast<size_t>(j)] > 0) {
      later = j;
      break;
    }
  }
  if (later < 0) {
    ExpVec e = m;
    e[static_cast<size_t>(g)] += 1;
    auto pr = p.power_rules.find(g);
    if (pr != p.power_rules.end() && e[static_cast<size_t>(g)] == pr->second.exponent) {
      ExpVec base = e;
      base[static_cast<size_t>(g)] = 0;
      for (const auto& [re, rc] : pr->second.replacement)
        mul_mono_terms(p, base, c * rc, re, out, depth + 1);
      return;
    }
    add_term(out, e, c);
    return;
  }
  ExpVec base = m;
  base[static_cast<size_t>(later)] -= 1;
  auto rule = p.swap_rules.find({later, g});
  if (rule == p.swap_rules.end())
    throw Error("missing swap rule (" + p.generators[static_cast<size_t>(later)] + ", " +
                p.generators[static_cast<size_t>(g)] + ") in presentation '" + p.name + "'");
  for (const auto& [re, rc] : rule->second) mul_mono_terms(p, base, c * rc, re, out, depth + 1);
}

template <class Coeff>
void mul_mono_terms(const BasicPresentation<Coeff>& p, const ExpVec& a, const Coeff& c, const ExpVec& b,
                    std::map<ExpVec, Coeff>& out, int depth) {
  if (c.is_zero()) return;
  std::map<ExpVec, Coeff> acc;
  acc.emplace(a, c);
  for (size_t i = 0; i < p.num_gens(); ++i) {
    for (unsigned rep = 0; rep < b[i]; ++rep) {
      std::map<ExpVec, Coeff> next;
      for (const auto& [e, cc] : acc) mul_mono_gen(p, e, cc, static_cast<int>(i), next, depth + 1);
      acc = std::move(next);
      if (acc.empty()) return;
    }
  }
  for (const auto& [e, cc] : acc) add_term(out, e, cc);
}

}  // namespace detail

/// A normal-form element of a presented algebra. Exponent vectors always
/// respect truncations and no zero coefficients are stored, so equality is
/// structural.
template <class Coeff>
class BasicNCElem {
 public:
  using Pres = PresPtr<Coeff>;
  using Terms = std::map<ExpVec, Coeff>;

  BasicNCElem() = default;

  static BasicNCElem zero(Pres p) { return BasicNCElem(std::move(p), Terms{}); }

  static BasicNCElem scalar(Pres p, const Coeff& c) {
    Terms t;
    detail::add_term(t, ExpVec(p->num_gens(), 0u), c);
    return BasicNCElem(std::move(p), std::move(t));
  }

  static BasicNCElem one(Pres p) {
    Coeff c = p->one;
    return scalar(std::move(p), c);
  }

  static BasicNCElem generator(Pres p, int i) {
    ExpVec e(p->num_gens(), 0u);
    e[static_cast<size_t>(i)] = 1;
    return monomial(std::move(p), e, p->one);
  }

  static BasicNCElem generator(Pres p, const std::string& name) {
    return generator(p, p->gen_index(name));
  }

  /// Builds c * prod_i gen_i^{e_i}; exponents may exceed truncations and are
  /// normalized through the rewriting engine.
  static BasicNCElem monomial(Pres p, const ExpVec& e, const Coeff& c) {
    if (e.size() != p->num_gens()) throw Error("exponent vector length mismatch");
    Terms t;
    detail::mul_mono_terms(*p, ExpVec(p->num_gens(), 0u), c, e, t, 0);
    return BasicNCElem(std::move(p), std::move(t));
  }

  /// Normal form of a formal product of generators with a coefficient.
  static BasicNCElem from_word(Pres p, const std::vector<int>& word, const Coeff& c) {
    Terms acc;
    acc.emplace(ExpVec(p->num_gens(), 0u), c);
    for (int g : word) {
      if (g < 0 || g >= static_cast<int>(p->num_gens())) throw Error("word letter out of range");
      Terms next;
      for (const auto& [e, cc] : acc) detail::mul_mono_gen(*p, e, cc, g, next, 0);
      acc = std::move(next);
      if (acc.empty()) break;
    }
    return BasicNCElem(std::move(p), std::move(acc));
  }

  static BasicNCElem from_terms(Pres p, const Terms& raw) {
    Terms t;
    for (const auto& [e, c] : raw) {
      if (e.size() != p->num_gens()) throw Error("exponent vector length mismatch");
      detail::mul_mono_terms(*p, ExpVec(p->num_gens(), 0u), c, e, t, 0);
    }
    return BasicNCElem(std::move(p), std::move(t));
  }

  const Pres& pres() const { return p_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  bool is_scalar() const {
    if (t_.empty()) return true;
    if (t_.size() != 1) return false;
    const ExpVec& e = t_.begin()->first;
    for (unsigned x : e)
      if (x) return false;
    return true;
  }

  Coeff coefficient(const ExpVec& e) const {
    auto it = t_.find(e);
    if (it == t_.end()) {
      Coeff z = p_->one;
      return z + (-z);
    }
    return it->second;
  }

  BasicNCElem operator+(const BasicNCElem& o) const {
    check_compatible(o);
    Terms t = t_;
    for (const auto& [e, c] : o.t_) detail::add_term(t, e, c);
    return BasicNCElem(p_, std::move(t));
  }

  BasicNCElem operator-(const BasicNCElem& o) const { return *this + (-o); }

  BasicNCElem operator-() const {
    Terms t;
    for (const auto& [e, c] : t_) t.emplace(e, -c);
    return BasicNCElem(p_, std::move(t));
  }

  BasicNCElem operator*(const BasicNCElem& o) const {
    check_compatible(o);
    Terms t;
    for (const auto& [ea, ca] : t_)
      for (const auto& [eb, cb] : o.t_) detail::mul_mono_terms(*p_, ea, ca * cb, eb, t, 0);
    return BasicNCElem(p_, std::move(t));
  }

  BasicNCElem scaled(const Coeff& s) const {
    Terms t;
    for (const auto& [e, c] : t_) detail::add_term(t, e, c * s);
    return BasicNCElem(p_, std::move(t));
  }

  BasicNCElem pow(unsigned k) const {
    BasicNCElem acc = one(p_);
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
  }

  bool operator==(const BasicNCElem& o) const {
    check_compatible(o);
    return t_ == o.t_;
  }
  bool operator!=(const BasicNCElem& o) const { return !(*this == o); }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")";
      for (size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        os << "*" << p_->generators[i];
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

 private:
  BasicNCElem(Pres p, Terms t) : p_(std::move(p)), t_(std::move(t)) {}

  void check_compatible(const BasicNCElem& o) const {
    if (p_ == o.p_) return;
    if (p_ && o.p_ && p_->structurally_equal(*o.p_)) return;
    throw PresentationMismatchError("elements belong to different presentations");
  }

  Pres p_;
  Terms t_;
};

template <class Coeff>
BasicNCElem<Coeff> commutator(const BasicNCElem<Coeff>& a, const BasicNCElem<Coeff>& b) {
  return a * b - b * a;
}

/// Substitutes generator images (elements of a common target presentation)
/// into e; linear in e. Monomials expand as ordered products of the images.
template <class Coeff>
BasicNCElem<Coeff> apply_endomorphism(const std::vector<BasicNCElem<Coeff>>& images,
                                      const BasicNCElem<Coeff>& e) {
  if (images.size() != e.pres()->num_gens()) throw Error("one image per generator required");
  auto target = images.empty() ? e.pres() : images.front().pres();
  BasicNCElem<Coeff> acc = BasicNCElem<Coeff>::zero(target);
  for (const auto& [exps, c] : e.terms()) {
    BasicNCElem<Coeff> term = BasicNCElem<Coeff>::scalar(target, c);
    for (size_t i = 0; i < exps.size(); ++i)
      for (unsigned r = 0; r < exps[i]; ++r) term = term * images[i];
    acc = acc + term;
  }
  return acc;
}

template <class Coeff>
long filtration_degree(const BasicNCElem<Coeff>& e, const std::vector<unsigned>& weights) {
  long best = 0;
  for (const auto& [exps, c] : e.terms()) {
    long d = 0;
    for (size_t i = 0; i < exps.size(); ++i) d += static_cast<long>(exps[i]) * weights[i];
    best = std::max(best, d);
  }
  return best;
}

template <class Coeff>
long filtration_degree(const BasicNCElem<Coeff>& e) {
  return filtration_degree(e, e.pres()->weights);
}

/// All normal-form exponent vectors with weighted degree <= max_degree.
/// Weight-zero generators must carry a power rule so the slice is finite.
template <class Coeff>
std::vector<ExpVec> monomial_slice(const PresPtr<Coeff>& p, const std::vector<unsigned>& weights,
                                   unsigned max_degree) {
  size_t n = p->num_gens();
  if (weights.size() != n) throw Error("weight vector length mismatch");
  std::vector<unsigned> cap(n);
  for (size_t i = 0; i < n; ++i) {
    auto pr = p->power_rules.find(static_cast<int>(i));
    unsigned trunc = pr == p->power_rules.end() ? 0u : pr->second.exponent;
    if (weights[i] == 0) {
      if (trunc == 0) throw Error("weight-zero generator without truncation makes the slice infinite");
      cap[i] = trunc - 1;
    } else {
      unsigned by_degree = max_degree / weights[i];
      cap[i] = trunc == 0 ? by_degree : std::min(by_degree, trunc - 1);
    }
  }
  std::vector<ExpVec> out;
  ExpVec cur(n, 0u);
  std::function<void(size_t, unsigned)> rec = [&](size_t i, unsigned used) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= cap[i]; ++e) {
      unsigned d = e * weights[i];
      if (used + d > max_degree) break;
      cur[i] = e;
      rec(i + 1, used + d);
    }
    cur[i] = 0;
  };
  rec(0, 0);
  return out;
}

/// Incremental construction with validation of the spec invariants: complete
/// rule set, normal-form right-hand sides, filtration bound on swap rules.
template <class Coeff>
class PresentationBuilder {
 public:
  explicit PresentationBuilder(std::string name, Coeff one) {
    p_.name = std::move(name);
    p_.one = std::move(one);
  }

  PresentationBuilder& generator(const std::string& g, unsigned weight = 1) {
    p_.generators.push_back(g);
    p_.weights.push_back(weight);
    return *this;
  }

  PresentationBuilder& swap(const std::string& later, const std::string& earlier,
                            const std::vector<std::pair<ExpVec, Coeff>>& rhs) {
    int l = p_.gen_index(later), e = p_.gen_index(earlier);
    if (l <= e) throw Error("swap rule must rewrite later*earlier with later > earlier");
    typename BasicPresentation<Coeff>::Terms t;
    for (const auto& [exps, c] : rhs) {
      if (exps.size() != p_.num_gens()) throw Error("rule exponent vector length mismatch");
      detail::add_term(t, exps, c);
    }
    p_.swap_rules[{l, e}] = std::move(t);
    return *this;
  }

  PresentationBuilder& power(const std::string& g, unsigned exponent,
                             const std::vector<std::pair<ExpVec, Coeff>>& rhs) {
    int i = p_.gen_index(g);
    if (exponent < 2) throw Error("power rule exponent must be >= 2");
    typename BasicPresentation<Coeff>::Terms t;
    for (const auto& [exps, c] : rhs) {
      if (exps.size() != p_.num_gens()) throw Error("rule exponent vector length mismatch");
      detail::add_term(t, exps, c);
    }
    p_.power_rules[i] = {exponent, std::move(t)};
    return *this;
  }

  PresPtr<Coeff> build() {
    size_t n = p_.num_gens();
    for (int l = 1; l < static_cast<int>(n); ++l)
      for (int e = 0; e < l; ++e)
        if (!p_.swap_rules.count({l, e}))
          throw Error("presentation '" + p_.name + "' is missing swap rule (" +
                      p_.generators[static_cast<size_t>(l)] + ", " + p_.generators[static_cast<size_t>(e)] + ")");
    for (const auto& [key, rhs] : p_.swap_rules) {
      long bound = static_cast<long>(p_.weights[static_cast<size_t>(key.first)]) +
                   static_cast<long>(p_.weights[static_cast<size_t>(key.second)]);
      for (const auto& [exps, c] : rhs) {
        long d = 0;
        for (size_t i = 0; i < exps.size(); ++i) d += static_cast<long>(exps[i]) * p_.weights[i];
        if (d > bound)
          throw Error("swap rule right-hand side exceeds the filtration bound in '" + p_.name + "'");
      }
    }
    return std::make_shared<const BasicPresentation<Coeff>>(std::move(p_));
  }

 private:
  BasicPresentation<Coeff> p_;
};

}  // namespace taftsmash
