#pragma once

#include <Eigen/Dense>

#include <vector>

#include "ngr/rational.hpp"

namespace ngr {

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// In-place reduced row echelon form with deterministic pivoting (first
/// nonzero entry scanning columns left to right, rows top-down; exact
/// arithmetic needs no magnitude pivoting). Returns the pivot columns.
std::vector<int> rref(RatMatrix& m);

int rank(RatMatrix m);

/// Right kernel: columns form a basis of {v : m v = 0}, produced from the
/// rref free columns in ascending column order.
RatMatrix nullspace(RatMatrix m);

/// Incremental row space for rank bookkeeping and complement picking.
class RowSpace {
 public:
  explicit RowSpace(int ncols) : ncols_(ncols) {}
  /// Reduces v against the current echelon rows; if a nonzero remainder is
  /// left it joins the space and the call returns true.
  bool add(RatVector v);
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return ncols_; }

 private:
  int ncols_;
  std::vector<std::pair<int, RatVector>> rows_;  // (pivot col, unit-pivot row)
};

}  // namespace ngr
