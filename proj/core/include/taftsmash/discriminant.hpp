#pragma once

#include "taftsmash/action.hpp"
#include "taftsmash/mpoly.hpp"

namespace taftsmash {

/// Free-module data for an algebra over a central polynomial subalgebra:
/// central variables name powers of generators (z ~ gen^period); the module
/// basis consists of the monomials with period'd exponents below the period
/// and truncated exponents below the truncation. Every normal-form monomial
/// splits uniquely as (central monomial) * (basis monomial).
struct CentralVar {
  std::string name;
  int gen_index = -1;
  unsigned period = 0;
};

struct CentralBasisDecomposition {
  CPres pres;
  std::vector<CentralVar> central;
  std::vector<ExpVec> module_basis;

  /// Validates that every generator is either period'd or truncated, checks
  /// that the central monomials commute with all generators, and enumerates
  /// the basis.
  static CentralBasisDecomposition make(CPres pres, std::vector<CentralVar> central);
  /// Test hook: explicit basis, no enumeration.
  static CentralBasisDecomposition with_basis(CPres pres, std::vector<CentralVar> central,
                                              std::vector<ExpVec> basis);

  size_t rank() const { return module_basis.size(); }
  std::vector<std::string> var_names() const;
};

/// e as a combination sum_b p_b(z) * b over the module basis.
std::map<ExpVec, MPoly> decompose_over_center(const CElem& e, const CentralBasisDecomposition& d);

/// Trace of left multiplication by e on the free module.
MPoly regular_trace(const CElem& e, const CentralBasisDecomposition& d);

struct TraceForm {
  std::vector<std::vector<MPoly>> m;
  size_t size() const { return m.size(); }
};

/// The full matrix tr(b_i b_j); validates symmetry.
TraceForm trace_form(const CentralBasisDecomposition& d, int threads = 0);

enum class DetMethod { Auto, FractionFree, Interpolation };

MPoly det_fraction_free(std::vector<std::vector<MPoly>> m);
MPoly det_interpolation(const std::vector<std::vector<MPoly>>& m, int threads = 0);

/// det(tr(b_i b_j)), normalized by the coefficient of the lex-first monomial
/// (z1 > z2 > ...). Throws SingularTraceFormError when the determinant
/// vanishes. Auto picks fraction-free elimination up to rank 16 and
/// evaluation-interpolation beyond.
MPoly discriminant(const CentralBasisDecomposition& d, DetMethod method = DetMethod::Auto,
                   int threads = 0);

/// p = c q for a nonzero scalar c.
bool equal_up_to_unit(const MPoly& p, const MPoly& q);

/// Sum over the module basis of the weighted monomial degree.
long degree_census(const CentralBasisDecomposition& d, const std::vector<unsigned>& weights);

/// Decompositions for the two families of interest.
CentralBasisDecomposition ore_decomposition(int n, long k, Target target);  // rank n^3 over z1,z2,z3
CentralBasisDecomposition smash_decomposition(const SmashProduct& s);       // rank n^4 over z1,z2

/// Thread count resolution: explicit argument, else TAFTSMASH_THREADS, else 1.
int resolve_threads(int requested);

}  // namespace taftsmash
