#pragma once

#include <vector>

#include "taftsmash/cyclotomic.hpp"

namespace taftsmash {

using CVec = std::vector<CycloElem>;
using CMat = std::vector<CVec>;  // row-major, rectangular

struct RrefResult {
  CMat mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};

/// Reduced row echelon form by exact Gaussian elimination; the pivot in each
/// column is the first row with a nonzero entry, so the result is
/// deterministic.
RrefResult rref(CMat m);

int rank(const CMat& m);

/// Basis of {x : m x = 0}, one vector per free column, with a 1 in the free
/// slot. Canonical given the column order.
std::vector<CVec> kernel_basis(const CMat& m, size_t ncols);

/// Determinant over the field by Gaussian elimination with row pivoting.
CycloElem det_gauss(CMat m);

}  // namespace taftsmash
