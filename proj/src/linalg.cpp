#include "ngr/linalg.hpp"

namespace ngr {

std::vector<int> rref(RatMatrix& m) {
  const int nr = static_cast<int>(m.rows());
  const int nc = static_cast<int>(m.cols());
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < nc && row < nr; ++col) {
    int p = -1;
    for (int i = row; i < nr; ++i) {
      if (!m(i, col).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    Rat inv = Rat(1) / m(row, col);
    for (int j = col; j < nc; ++j) m(row, j) *= inv;
    for (int i = 0; i < nr; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Rat f = m(i, col);
      for (int j = col; j < nc; ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

RatMatrix nullspace(RatMatrix m) {
  const int nc = static_cast<int>(m.cols());
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(nc, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < nc; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMatrix out(nc, static_cast<int>(free_cols.size()));
  out.setConstant(Rat(0));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    out(fc, static_cast<int>(k)) = Rat(1);
    for (size_t i = 0; i < pivots.size(); ++i)
      out(pivots[i], static_cast<int>(k)) = -m(static_cast<int>(i), fc);
  }
  return out;
}

bool RowSpace::add(RatVector v) {
  for (const auto& [piv, row] : rows_) {
    if (v(piv).is_zero()) continue;
    Rat f = v(piv);
    v -= f * row;
  }
  int piv = -1;
  for (int i = 0; i < ncols_; ++i) {
    if (!v(i).is_zero()) {
      piv = i;
      break;
    }
  }
  if (piv < 0) return false;
  Rat inv = Rat(1) / v(piv);
  v *= inv;
  // keep stored rows reduced at the new pivot so one reduction pass suffices
  for (auto& [q, row] : rows_) {
    if (row(piv).is_zero()) continue;
    Rat f = row(piv);
    row -= f * v;
  }
  rows_.emplace_back(piv, std::move(v));
  return true;
}

}  // namespace ngr
