#include "taftsmash/structure.hpp"

#include <algorithm>
#include <map>

namespace taftsmash {

namespace {

// coordinates of elements against the union of their monomials
struct Coordinates {
  std::vector<ExpVec> monomials;  // sorted
  std::map<ExpVec, size_t> index;

  void collect(const CElem& e) {
    for (const auto& [m, c] : e.terms()) {
      if (index.emplace(m, 0).second) monomials.push_back(m);
    }
  }
  void freeze() {
    std::sort(monomials.begin(), monomials.end());
    for (size_t i = 0; i < monomials.size(); ++i) index[monomials[i]] = i;
  }
  CVec row(const CElem& e) const {
    CVec v(monomials.size(), CycloElem::zero(1));
    for (const auto& [m, c] : e.terms()) v[index.at(m)] = c;
    return v;
  }
};

CElem from_coords(const CPres& pres, const Coordinates& coords, const CVec& v) {
  CElem acc = CElem::zero(pres);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    acc = acc + CElem::monomial(pres, coords.monomials[i], v[i]);
  }
  return acc;
}

}  // namespace

GradedSpan make_span(const CPres& pres, unsigned degree_bound, const std::vector<CElem>& gens) {
  Coordinates coords;
  for (const auto& e : gens) coords.collect(e);
  coords.freeze();
  CMat m;
  for (const auto& e : gens) m.push_back(coords.row(e));
  RrefResult rr = rref(std::move(m));
  GradedSpan out;
  out.pres = pres;
  out.degree_bound = degree_bound;
  for (int i = 0; i < rr.rank; ++i) out.basis.push_back(from_coords(pres, coords, rr.mat[static_cast<size_t>(i)]));
  return out;
}

bool span_contains(const GradedSpan& s, const CElem& e) {
  if (e.is_zero()) return true;
  Coordinates coords;
  for (const auto& b : s.basis) coords.collect(b);
  coords.collect(e);
  coords.freeze();
  CMat m;
  for (const auto& b : s.basis) m.push_back(coords.row(b));
  int base_rank = rank(m);
  m.push_back(coords.row(e));
  return rank(m) == base_rank;
}

bool span_equal(const GradedSpan& a, const GradedSpan& b) {
  if (a.basis.size() != b.basis.size()) return false;
  for (const auto& e : b.basis)
    if (!span_contains(a, e)) return false;
  for (const auto& e : a.basis)
    if (!span_contains(b, e)) return false;
  return true;
}

GradedSpan span_intersection(const GradedSpan& a, const GradedSpan& b) {
  // kernel of [A | -B] gives the coefficient pairs with equal combinations
  Coordinates coords;
  for (const auto& e : a.basis) coords.collect(e);
  for (const auto& e : b.basis) coords.collect(e);
  coords.freeze();
  size_t na = a.basis.size(), nb = b.basis.size();
  size_t rows = coords.monomials.size();
  CMat m(rows, CVec(na + nb, CycloElem::zero(1)));
  for (size_t j = 0; j < na; ++j) {
    CVec col = coords.row(a.basis[j]);
    for (size_t i = 0; i < rows; ++i) m[i][j] = col[i];
  }
  for (size_t j = 0; j < nb; ++j) {
    CVec col = coords.row(b.basis[j]);
    for (size_t i = 0; i < rows; ++i) m[i][na + j] = -col[i];
  }
  std::vector<CElem> gens;
  for (const auto& k : kernel_basis(m, na + nb)) {
    CElem e = CElem::zero(a.pres);
    for (size_t j = 0; j < na; ++j)
      if (!k[j].is_zero()) e = e + a.basis[j].scaled(k[j]);
    gens.push_back(e);
  }
  return make_span(a.pres, std::min(a.degree_bound, b.degree_bound), gens);
}

GradedSpan weight_space(const LinearAction& a, long k, unsigned degree_bound) {
  std::vector<unsigned> w(a.algebra->num_gens(), 1u);
  CycloElem want = a.lam.pow(k);
  std::vector<CElem> gens;
  for (const auto& e : monomial_slice(a.algebra, w, degree_bound)) {
    CycloElem eig = CycloElem::one(a.lam.conductor());
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) eig = eig * a.g_eigen[i].pow(static_cast<long>(e[i]));
    if (eig == want) gens.push_back(CElem::monomial(a.algebra, e, CycloElem::one(a.lam.conductor())));
  }
  return make_span(a.algebra, degree_bound, gens);
}

GradedSpan x_invariants(const LinearAction& a, unsigned degree_bound) {
  std::vector<unsigned> w(a.algebra->num_gens(), 1u);
  auto slice = monomial_slice(a.algebra, w, degree_bound);
  Coordinates coords;
  std::vector<CElem> images;
  images.reserve(slice.size());
  const auto one = CycloElem::one(a.lam.conductor());
  for (const auto& e : slice) {
    CElem im = act_x(a, CElem::monomial(a.algebra, e, one));
    coords.collect(im);
    images.push_back(im);
  }
  coords.freeze();
  size_t rows = coords.monomials.size();
  CMat m(rows, CVec(slice.size(), CycloElem::zero(1)));
  for (size_t j = 0; j < slice.size(); ++j) {
    CVec col = coords.row(images[j]);
    for (size_t i = 0; i < rows; ++i) m[i][j] = col[i];
  }
  std::vector<CElem> gens;
  for (const auto& k : kernel_basis(m, slice.size())) {
    CElem e = CElem::zero(a.algebra);
    for (size_t j = 0; j < slice.size(); ++j)
      if (!k[j].is_zero()) e = e + CElem::monomial(a.algebra, slice[j], k[j]);
    gens.push_back(e);
  }
  return make_span(a.algebra, degree_bound, gens);
}

GradedSpan fixed_ring(const LinearAction& a, unsigned degree_bound) {
  return span_intersection(x_invariants(a, degree_bound), weight_space(a, 0, degree_bound));
}

GradedSpan center_truncated(const CPres& pres, unsigned degree_bound,
                            std::optional<std::vector<unsigned>> weights) {
  std::vector<unsigned> w = weights ? *weights : pres->weights;
  auto slice = monomial_slice(pres, w, degree_bound);
  size_t ng = pres->num_gens();
  const CycloElem one = CycloElem::one(1);

  // pre-filter with generators whose commutator is monomial-diagonal:
  // [m, gen] = c(m) * phi(m) with phi injective on the slice
  std::vector<std::vector<CElem>> comms(ng);
  for (size_t g = 0; g < ng; ++g) {
    comms[g].reserve(slice.size());
    CElem gen = CElem::generator(pres, static_cast<int>(g));
    for (const auto& e : slice) comms[g].push_back(commutator(CElem::monomial(pres, e, one), gen));
  }
  std::vector<bool> diagonal(ng, false);
  for (size_t g = 0; g < ng; ++g) {
    bool diag = true;
    std::map<ExpVec, int> seen;
    for (const auto& c : comms[g]) {
      if (c.is_zero()) continue;
      if (c.terms().size() != 1) {
        diag = false;
        break;
      }
      if (++seen[c.terms().begin()->first] > 1) {
        diag = false;
        break;
      }
    }
    diagonal[g] = diag;
  }

  std::vector<size_t> keep;
  for (size_t j = 0; j < slice.size(); ++j) {
    bool ok = true;
    for (size_t g = 0; g < ng && ok; ++g)
      if (diagonal[g] && !comms[g][j].is_zero()) ok = false;
    if (ok) keep.push_back(j);
  }

  // stack the remaining commutator constraints and solve the kernel
  Coordinates coords;
  std::vector<std::vector<CElem>> cols(keep.size());
  for (size_t jj = 0; jj < keep.size(); ++jj) {
    for (size_t g = 0; g < ng; ++g) {
      if (diagonal[g]) continue;
      coords.collect(comms[g][keep[jj]]);
      cols[jj].push_back(comms[g][keep[jj]]);
    }
  }
  coords.freeze();
  size_t nconstraints = 0;
  for (size_t g = 0; g < ng; ++g)
    if (!diagonal[g]) ++nconstraints;
  size_t rows = coords.monomials.size();
  CMat m(rows * std::max<size_t>(nconstraints, 1), CVec(keep.size(), CycloElem::zero(1)));
  for (size_t jj = 0; jj < keep.size(); ++jj) {
    for (size_t kconstraint = 0; kconstraint < cols[jj].size(); ++kconstraint) {
      CVec col = coords.row(cols[jj][kconstraint]);
      for (size_t i = 0; i < rows; ++i) m[kconstraint * rows + i][jj] = col[i];
    }
  }
  std::vector<CElem> gens;
  for (const auto& k : kernel_basis(m, keep.size())) {
    CElem e = CElem::zero(pres);
    for (size_t jj = 0; jj < keep.size(); ++jj)
      if (!k[jj].is_zero()) e = e + CElem::monomial(pres, slice[keep[jj]], k[jj]);
    gens.push_back(e);
  }
  return make_span(pres, degree_bound, gens);
}

Report check_center_relations(const SmashProduct& s, const CElem& z) {
  const LinearAction& a = s.action;
  size_t na = a.algebra->num_gens();
  for (size_t g = 0; g < s.pres->num_gens(); ++g) {
    if (!commutator(z, CElem::generator(s.pres, static_cast<int>(g))).is_zero())
      throw NotCentralError("element does not commute with generator " + s.pres->generators[g]);
  }

  // split z = sum r_{i,j} # g^i x^j
  std::map<std::pair<unsigned, unsigned>, CElem> parts;
  for (const auto& [exps, c] : z.terms()) {
    unsigned gi = exps[na], xj = exps[na + 1];
    ExpVec alg(exps.begin(), exps.begin() + static_cast<long>(na));
    auto key = std::make_pair(gi, xj);
    auto it = parts.find(key);
    CElem mono = CElem::monomial(a.algebra, alg, c);
    if (it == parts.end())
      parts.emplace(key, mono);
    else
      it->second = it->second + mono;
  }

  auto part = [&](unsigned i, unsigned j) {
    auto it = parts.find({i, j});
    return it == parts.end() ? CElem::zero(a.algebra) : it->second;
  };

  Report rep;
  unsigned n = static_cast<unsigned>(a.n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      CElem r = part(i, j);
      CElem rbelow = j > 0 ? part(i, j - 1) : CElem::zero(a.algebra);
      if (r.is_zero() && rbelow.is_zero()) continue;
      std::string label = "r_{" + std::to_string(i) + "," + std::to_string(j) + "}";
      rep.add(label + " lies in the lam^" + std::to_string(j) + " weight space",
              act_g(a, r) == r.scaled(a.lam.pow(static_cast<long>(j))));
      CElem expect = CElem::zero(a.algebra);
      if (j > 0) {
        CycloElem factor = CycloElem::one(a.lam.conductor()) -
                           a.lam.pow(static_cast<long>(i) + static_cast<long>(j) - 1);
        expect = rbelow.scaled(factor);
      }
      rep.add("x(" + label + ") steps down the ladder correctly", act_x(a, r) == expect);
    }
  }
  return rep;
}

}  // namespace taftsmash
