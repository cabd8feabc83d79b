#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "ngr/groebner.hpp"

namespace ngr {

struct InversionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PeriodicityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Square matrix of degree-truncated integer power series: coefficient
/// matrices for degrees 0..trunc. Arithmetic never consults higher degrees.
class MatrixSeries {
 public:
  MatrixSeries(int size, int trunc)
      : size_(size), coeff_(trunc + 1, IntMatrix::Zero(size, size)) {}
  static MatrixSeries identity(int size, int trunc);

  int size() const { return size_; }
  int trunc() const { return static_cast<int>(coeff_.size()) - 1; }
  const IntMatrix& coeff(int deg) const { return coeff_.at(deg); }
  IntMatrix& coeff(int deg) { return coeff_.at(deg); }
  std::int64_t at(int row, int col, int deg) const {
    return coeff_.at(deg)(row, col);
  }

  MatrixSeries transpose() const;
  /// substitute t -> -t
  MatrixSeries alternate() const;

  friend MatrixSeries operator+(const MatrixSeries& a, const MatrixSeries& b);
  friend MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b);
  friend bool operator==(const MatrixSeries& a, const MatrixSeries& b);

  bool is_identity() const;

 private:
  int size_;
  std::vector<IntMatrix> coeff_;
};

/// Per-position allowed-successor sets: allowed[r](a, b) iff the 2-gram of
/// arrow a at residue r followed by arrow b at r+1 is normal.
struct TransferTable {
  int period = 0;
  std::vector<Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>> allowed;
};

TransferTable transfer_table(const GroebnerBasis& gb);  // quadratic only

/// Number of normal words of the given length from residue i (they all end
/// at residue (i + length) mod p). Requires a quadratic interreduced basis;
/// counts by transfer DP.
std::int64_t count_normal(const GroebnerBasis& gb, int i, int length);

/// p x p (or folded 3 x 3) matrix of normal-word counts; entry (i, j)
/// collects lengths congruent to j - i. Folding identifies residues r and
/// r+3 and throws PeriodicityError if their counts disagree.
MatrixSeries hilbert_matrix(const GroebnerBasis& gb, int trunc, bool fold);

/// The explicit 3x3 polynomial matrix of dual components: diagonal 1 + t^3,
/// C(n,2) t at (0,1), n t at (1,2),(2,0), C(n,2) t^2 at (1,0), n t^2 at
/// (0,2),(2,1).
MatrixSeries koszul_dual_hilbert_ngr(int n, int trunc);

/// Inverse of a series with integrally invertible constant term.
MatrixSeries invert(const MatrixSeries& m);

struct KoszulIdentityReport {
  bool h_times_dual = false;  // H(t) * D(-t) == Id
  bool dual_times_h = false;  // D(-t) * H(t) == Id
  bool h_times_dual_transposed = false;
  bool dual_transposed_times_h = false;
  bool any() const {
    return h_times_dual || dual_times_h || h_times_dual_transposed ||
           dual_transposed_times_h;
  }
};

/// Tests all four orientations of the Koszulity identity between the folded
/// Hilbert matrix of gb and the dual matrix for NGr(n-2, n). Throws
/// DomainError if no orientation verifies.
KoszulIdentityReport verify_koszul_identity(const GroebnerBasis& gb, int n,
                                            int trunc);

}  // namespace ngr
