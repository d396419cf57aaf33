#include "taftsmash/linalg.hpp"

#include "taftsmash/errors.hpp"

namespace taftsmash {

RrefResult rref(CMat m) {
  RrefResult out;
  if (m.empty()) {
    out.mat = std::move(m);
    return out;
  }
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    CycloElem inv = m[r][c].inverse();
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      CycloElem f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    out.pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  out.rank = static_cast<int>(r);
  out.mat = std::move(m);
  return out;
}

int rank(const CMat& m) {
  return rref(m).rank;
}

std::vector<CVec> kernel_basis(const CMat& m, size_t ncols) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : rr.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<CVec> basis;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    CVec v(ncols, CycloElem::zero(1));
    v[f] = CycloElem::one(1);
    for (size_t pi = 0; pi < rr.pivot_cols.size(); ++pi) {
      size_t pc = static_cast<size_t>(rr.pivot_cols[pi]);
      v[pc] = -rr.mat[pi][f];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

CycloElem det_gauss(CMat m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error("det of non-square matrix");
  CycloElem d = CycloElem::one(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return CycloElem::zero(1);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d = d * m[c][c];
    CycloElem inv = m[c][c].inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      CycloElem f = m[i][c] * inv;
      for (size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
    }
  }
  return d;
}

}  // namespace taftsmash
