#include "taftsmash/discriminant.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

#include "taftsmash/linalg.hpp"

namespace taftsmash {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TAFTSMASH_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

namespace {

void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn) {
  threads = std::min<int>(threads, static_cast<int>(count));
  if (threads <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

CentralBasisDecomposition CentralBasisDecomposition::make(CPres pres, std::vector<CentralVar> central) {
  CentralBasisDecomposition d;
  d.pres = std::move(pres);
  d.central = std::move(central);
  size_t ng = d.pres->num_gens();
  std::vector<unsigned> cap(ng, 0u);
  std::vector<bool> covered(ng, false);
  for (const auto& cv : d.central) {
    if (cv.gen_index < 0 || cv.gen_index >= static_cast<int>(ng)) throw Error("central variable out of range");
    if (cv.period < 1) throw Error("central variable period must be positive");
    cap[static_cast<size_t>(cv.gen_index)] = cv.period;
    covered[static_cast<size_t>(cv.gen_index)] = true;
    // the named central monomial must commute with every generator
    ExpVec e(ng, 0u);
    e[static_cast<size_t>(cv.gen_index)] = cv.period;
    CElem zc = CElem::monomial(d.pres, e, CycloElem::one(1));
    for (size_t g = 0; g < ng; ++g) {
      if (!commutator(zc, CElem::generator(d.pres, static_cast<int>(g))).is_zero())
        throw Error("central variable " + cv.name + " is not central in " + d.pres->name);
    }
  }
  for (size_t g = 0; g < ng; ++g) {
    if (covered[g]) continue;
    auto pr = d.pres->power_rules.find(static_cast<int>(g));
    if (pr == d.pres->power_rules.end())
      throw Error("generator " + d.pres->generators[g] + " is neither period'd nor truncated");
    cap[g] = pr->second.exponent;
  }
  ExpVec cur(ng, 0u);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == ng) {
      d.module_basis.push_back(cur);
      return;
    }
    for (unsigned e = 0; e < cap[i]; ++e) {
      cur[i] = e;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  return d;
}

CentralBasisDecomposition CentralBasisDecomposition::with_basis(CPres pres, std::vector<CentralVar> central,
                                                                std::vector<ExpVec> basis) {
  CentralBasisDecomposition d;
  d.pres = std::move(pres);
  d.central = std::move(central);
  d.module_basis = std::move(basis);
  return d;
}

std::vector<std::string> CentralBasisDecomposition::var_names() const {
  std::vector<std::string> names;
  for (const auto& cv : central) names.push_back(cv.name);
  return names;
}

std::map<ExpVec, MPoly> decompose_over_center(const CElem& e, const CentralBasisDecomposition& d) {
  auto vars = d.var_names();
  std::map<ExpVec, MPoly> out;
  std::vector<int> which(d.pres->num_gens(), -1);
  for (size_t i = 0; i < d.central.size(); ++i) which[static_cast<size_t>(d.central[i].gen_index)] = static_cast<int>(i);
  for (const auto& [exps, c] : e.terms()) {
    ExpVec mod(exps);
    MPoly::Exp ze(vars.size(), 0u);
    for (size_t g = 0; g < exps.size(); ++g) {
      if (which[g] < 0) continue;
      unsigned period = d.central[static_cast<size_t>(which[g])].period;
      ze[static_cast<size_t>(which[g])] = exps[g] / period;
      mod[g] = exps[g] % period;
    }
    MPoly add = MPoly::monomial(vars, ze, c);
    auto it = out.find(mod);
    if (it == out.end())
      out.emplace(mod, add);
    else
      it->second = it->second + add;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

MPoly regular_trace(const CElem& e, const CentralBasisDecomposition& d) {
  auto vars = d.var_names();
  MPoly acc = MPoly::zero(vars);
  for (const auto& b : d.module_basis) {
    CElem eb = e * CElem::monomial(d.pres, b, CycloElem::one(1));
    auto dec = decompose_over_center(eb, d);
    auto it = dec.find(b);
    if (it != dec.end()) acc = acc + it->second;
  }
  return acc;
}

TraceForm trace_form(const CentralBasisDecomposition& d, int threads) {
  size_t w = d.rank();
  TraceForm tf;
  tf.m.assign(w, std::vector<MPoly>(w, MPoly::zero(d.var_names())));
  std::vector<CElem> basis;
  basis.reserve(w);
  for (const auto& b : d.module_basis) basis.push_back(CElem::monomial(d.pres, b, CycloElem::one(1)));
  parallel_for(w * w, resolve_threads(threads), [&](size_t idx) {
    size_t i = idx / w, j = idx % w;
    tf.m[i][j] = regular_trace(basis[i] * basis[j], d);
  });
  for (size_t i = 0; i < w; ++i)
    for (size_t j = i + 1; j < w; ++j)
      if (tf.m[i][j] != tf.m[j][i]) throw Error("trace form is not symmetric");
  return tf;
}

MPoly det_fraction_free(std::vector<std::vector<MPoly>> m) {
  size_t n = m.size();
  if (n == 0) return MPoly::constant({}, CycloElem::one(1));
  auto vars = m[0][0].vars();
  MPoly prev = MPoly::constant(vars, CycloElem::one(1));
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return MPoly::zero(vars);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = num.divide_exact(prev);
      }
      m[i][k] = MPoly::zero(vars);
    }
    prev = m[k][k];
  }
  MPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

namespace {

MPoly interpolate_rec(const std::vector<std::string>& vars, size_t v,
                      const std::vector<int>& bounds, std::vector<CycloElem>& point,
                      const std::function<CycloElem(const std::vector<CycloElem>&)>& eval) {
  if (v == vars.size()) return MPoly::constant(vars, eval(point));
  int nodes = bounds[v] + 1;
  std::vector<MPoly> values;
  values.reserve(static_cast<size_t>(nodes));
  for (int t = 0; t < nodes; ++t) {
    point[v] = CycloElem::from_int(t);
    values.push_back(interpolate_rec(vars, v + 1, bounds, point, eval));
  }
  // Lagrange in variable v through the integer nodes 0..bounds[v]
  MPoly acc = MPoly::zero(vars);
  MPoly zv = MPoly::var(vars, v);
  for (int i = 0; i < nodes; ++i) {
    MPoly basis = MPoly::constant(vars, CycloElem::one(1));
    CycloElem denom = CycloElem::one(1);
    for (int j = 0; j < nodes; ++j) {
      if (j == i) continue;
      basis = basis * (zv - MPoly::constant(vars, CycloElem::from_int(j)));
      denom = denom * (CycloElem::from_int(i) - CycloElem::from_int(j));
    }
    acc = acc + (values[static_cast<size_t>(i)] * basis).scaled(denom.inverse());
  }
  return acc;
}

}  // namespace

MPoly det_interpolation(const std::vector<std::vector<MPoly>>& m, int threads) {
  size_t n = m.size();
  if (n == 0) return MPoly::constant({}, CycloElem::one(1));
  auto vars = m[0][0].vars();
  size_t nv = vars.size();
  // per-variable degree bound of the determinant from the entry degrees
  std::vector<int> bounds(nv, 0);
  for (size_t v = 0; v < nv; ++v) {
    long by_rows = 0, by_cols = 0;
    for (size_t i = 0; i < n; ++i) {
      int mr = 0, mc = 0;
      for (size_t j = 0; j < n; ++j) {
        mr = std::max(mr, m[i][j].degree(v));
        mc = std::max(mc, m[j][i].degree(v));
      }
      by_rows += std::max(mr, 0);
      by_cols += std::max(mc, 0);
    }
    bounds[v] = static_cast<int>(std::min(by_rows, by_cols));
  }

  // grid of scalar determinants, filled in parallel
  std::vector<size_t> strides(nv, 1);
  size_t total = 1;
  for (size_t v = nv; v-- > 0;) {
    strides[v] = total;
    total *= static_cast<size_t>(bounds[v] + 1);
  }
  std::vector<CycloElem> grid(total, CycloElem::zero(1));
  parallel_for(total, resolve_threads(threads), [&](size_t idx) {
    std::vector<CycloElem> point(nv, CycloElem::zero(1));
    size_t rest = idx;
    for (size_t v = 0; v < nv; ++v) {
      size_t coord = rest / strides[v];
      rest %= strides[v];
      point[v] = CycloElem::from_int(static_cast<long>(coord));
    }
    CMat num(n, CVec(n, CycloElem::zero(1)));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) num[i][j] = m[i][j].eval(point);
    grid[idx] = det_gauss(std::move(num));
  });

  std::vector<CycloElem> point(nv, CycloElem::zero(1));
  auto lookup = [&](const std::vector<CycloElem>& pt) {
    size_t idx = 0;
    for (size_t v = 0; v < nv; ++v) {
      // grid points are the integers 0..bounds[v]
      Rational r = pt[v].as_rational();
      idx += static_cast<size_t>(r.get_num().get_si()) * strides[v];
    }
    return grid[idx];
  };
  return interpolate_rec(vars, 0, bounds, point, lookup);
}

MPoly discriminant(const CentralBasisDecomposition& d, DetMethod method, int threads) {
  TraceForm tf = trace_form(d, threads);
  MPoly det;
  bool interpolate = method == DetMethod::Interpolation || (method == DetMethod::Auto && d.rank() > 16);
  det = interpolate ? det_interpolation(tf.m, threads) : det_fraction_free(tf.m);
  if (det.is_zero()) throw SingularTraceFormError("trace form is singular over " + d.pres->name);
  return det.unit_normalized();
}

bool equal_up_to_unit(const MPoly& p, const MPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  auto [pe, pc] = p.leading_lex();
  auto [qe, qc] = q.leading_lex();
  if (pe != qe) return false;
  return p.scaled(pc.inverse()) == q.scaled(qc.inverse());
}

long degree_census(const CentralBasisDecomposition& d, const std::vector<unsigned>& weights) {
  if (weights.size() != d.pres->num_gens()) throw Error("weight vector length mismatch");
  long total = 0;
  for (const auto& b : d.module_basis)
    for (size_t g = 0; g < b.size(); ++g) total += static_cast<long>(b[g]) * weights[g];
  return total;
}

CentralBasisDecomposition ore_decomposition(int n, long k, Target target) {
  if (target != Target::QPlane && target != Target::Weyl)
    throw Error("ore decomposition covers the plane and Weyl targets");
  CPres p = ore_specialized(n, k, target == Target::Weyl ? 1 : 0);
  unsigned un = static_cast<unsigned>(n);
  return CentralBasisDecomposition::make(
      p, {{"z1", 0, un}, {"z2", 1, un}, {"z3", 2, un}});
}

CentralBasisDecomposition smash_decomposition(const SmashProduct& s) {
  unsigned un = static_cast<unsigned>(s.action.n);
  std::vector<CentralVar> central;
  for (size_t g = 0; g + 2 < s.pres->num_gens(); ++g)
    central.push_back({"z" + std::to_string(g + 1), static_cast<int>(g), un});
  return CentralBasisDecomposition::make(s.pres, central);
}

}  // namespace taftsmash
