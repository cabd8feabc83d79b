#include "ngr/hilbert.hpp"

#include "ngr/linalg.hpp"

namespace ngr {

MatrixSeries MatrixSeries::identity(int size, int trunc) {
  MatrixSeries m(size, trunc);
  m.coeff_[0] = IntMatrix::Identity(size, size);
  return m;
}

MatrixSeries MatrixSeries::transpose() const {
  MatrixSeries out(size_, trunc());
  for (int d = 0; d <= trunc(); ++d) out.coeff_[d] = coeff_[d].transpose();
  return out;
}

MatrixSeries MatrixSeries::alternate() const {
  MatrixSeries out = *this;
  for (int d = 1; d <= trunc(); d += 2) out.coeff_[d] = -out.coeff_[d];
  return out;
}

MatrixSeries operator+(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.size_ != b.size_ || a.trunc() != b.trunc())
    throw DomainError("MatrixSeries shape mismatch");
  MatrixSeries out = a;
  for (int d = 0; d <= a.trunc(); ++d) out.coeff_[d] += b.coeff_[d];
  return out;
}

MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.size_ != b.size_ || a.trunc() != b.trunc())
    throw DomainError("MatrixSeries shape mismatch");
  MatrixSeries out(a.size_, a.trunc());
  for (int d = 0; d <= a.trunc(); ++d)
    for (int k = 0; k <= d; ++k) out.coeff_[d] += a.coeff_[k] * b.coeff_[d - k];
  return out;
}

bool operator==(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.size_ != b.size_ || a.trunc() != b.trunc()) return false;
  for (int d = 0; d <= a.trunc(); ++d)
    if (a.coeff_[d] != b.coeff_[d]) return false;
  return true;
}

bool MatrixSeries::is_identity() const {
  if (coeff_[0] != IntMatrix::Identity(size_, size_)) return false;
  for (int d = 1; d <= trunc(); ++d)
    if (!coeff_[d].isZero()) return false;
  return true;
}

TransferTable transfer_table(const GroebnerBasis& gb) {
  if (!gb.is_quadratic())
    throw PreconditionError("transfer_table needs a quadratic basis");
  const auto& pres = gb.presentation();
  const int p = pres.period();
  TransferTable t;
  t.period = p;
  t.allowed.resize(p);
  for (int r = 0; r < p; ++r) {
    int na = pres.arrow_count(r);
    int nb = pres.arrow_count((r + 1) % p);
    t.allowed[r].resize(na, nb);
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < nb; ++b)
        t.allowed[r](a, b) =
            gb.is_normal(PathWord(r, {static_cast<std::uint16_t>(a),
                                      static_cast<std::uint16_t>(b)}));
  }
  return t;
}

std::int64_t count_normal(const GroebnerBasis& gb, int i, int length) {
  if (length < 0) throw DomainError("negative length");
  if (length == 0) return 1;
  TransferTable t = transfer_table(gb);
  const auto& pres = gb.presentation();
  const int p = pres.period();
  int r = ((i % p) + p) % p;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> vec(pres.arrow_count(r));
  vec.setOnes();
  for (int step = 1; step < length; ++step) {
    int rr = (r + step - 1) % p;
    int nb = pres.arrow_count((rr + 1) % p);
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> next(nb);
    next.setZero();
    for (int b = 0; b < nb; ++b)
      for (int a = 0; a < pres.arrow_count(rr); ++a)
        if (t.allowed[rr](a, b)) next(b) += vec(a);
    vec = std::move(next);
  }
  return vec.sum();
}

MatrixSeries hilbert_matrix(const GroebnerBasis& gb, int trunc, bool fold) {
  if (gb.completed_through() < trunc)
    throw PreconditionError("basis not completed through trunc");
  const auto& pres = gb.presentation();
  const int p = pres.period();
  // counts[r][len]; transfer DP when quadratic, direct enumeration otherwise
  std::vector<std::vector<std::int64_t>> counts(p);
  for (int r = 0; r < p; ++r) {
    counts[r].resize(trunc + 1);
    for (int len = 0; len <= trunc; ++len)
      counts[r][len] =
          gb.is_quadratic()
              ? count_normal(gb, r, len)
              : static_cast<std::int64_t>(normal_words(gb, r, len).size());
  }
  if (!fold) {
    MatrixSeries m(p, trunc);
    for (int r = 0; r < p; ++r)
      for (int len = 0; len <= trunc; ++len)
        m.coeff(len)(r, (r + len) % p) = counts[r][len];
    return m;
  }
  if (p != 6) throw DomainError("fold expects a period-6 presentation");
  for (int r = 0; r < 3; ++r)
    for (int len = 0; len <= trunc; ++len)
      if (counts[r][len] != counts[r + 3][len])
        throw PeriodicityError(
            "normal-word counts at residues " + std::to_string(r) + " and " +
            std::to_string(r + 3) + " disagree at length " +
            std::to_string(len));
  MatrixSeries m(3, trunc);
  for (int r = 0; r < 3; ++r)
    for (int len = 0; len <= trunc; ++len)
      m.coeff(len)(r, (r + len) % 3) = counts[r][len];
  return m;
}

MatrixSeries koszul_dual_hilbert_ngr(int n, int trunc) {
  if (n < 3) throw DomainError("koszul_dual_hilbert_ngr: n must be >= 3");
  if (trunc < 3) throw DomainError("koszul_dual_hilbert_ngr: trunc must be >= 3");
  const std::int64_t C = static_cast<std::int64_t>(n) * (n - 1) / 2;
  MatrixSeries m(3, trunc);
  for (int i = 0; i < 3; ++i) {
    m.coeff(0)(i, i) = 1;
    m.coeff(3)(i, i) = 1;
  }
  m.coeff(1)(0, 1) = C;
  m.coeff(1)(1, 2) = n;
  m.coeff(1)(2, 0) = n;
  m.coeff(2)(1, 0) = C;
  m.coeff(2)(0, 2) = n;
  m.coeff(2)(2, 1) = n;
  return m;
}

MatrixSeries invert(const MatrixSeries& m) {
  const int q = m.size();
  const int trunc = m.trunc();
  // constant term must be invertible over the integers
  RatMatrix c0(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) c0(i, j) = Rat(m.coeff(0)(i, j));
  RatMatrix aug(q, 2 * q);
  aug.setConstant(Rat(0));
  aug.block(0, 0, q, q) = c0;
  for (int i = 0; i < q; ++i) aug(i, q + i) = Rat(1);
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < q)
    throw InversionError("constant term is singular");
  IntMatrix inv0(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      Rat v = aug(i, q + j);
      mpz_class den = v.raw().get_den();
      if (den != 1)
        throw InversionError("constant term is not invertible over Z");
      mpz_class num = v.raw().get_num();
      if (!num.fits_slong_p())
        throw InversionError("constant-term inverse out of range");
      inv0(i, j) = num.get_si();
    }
  MatrixSeries out(q, trunc);
  out.coeff(0) = inv0;
  for (int d = 1; d <= trunc; ++d) {
    IntMatrix acc = IntMatrix::Zero(q, q);
    for (int k = 1; k <= d; ++k) acc += m.coeff(k) * out.coeff(d - k);
    out.coeff(d) = -inv0 * acc;
  }
  return out;
}

KoszulIdentityReport verify_koszul_identity(const GroebnerBasis& gb, int n,
                                            int trunc) {
  MatrixSeries h = hilbert_matrix(gb, trunc, /*fold=*/true);
  MatrixSeries d = koszul_dual_hilbert_ngr(n, trunc).alternate();  // D(-t)
  MatrixSeries dt = d.transpose();
  KoszulIdentityReport rep;
  rep.h_times_dual = (h * d).is_identity();
  rep.dual_times_h = (d * h).is_identity();
  rep.h_times_dual_transposed = (h * dt).is_identity();
  rep.dual_transposed_times_h = (dt * h).is_identity();
  if (!rep.any())
    throw DomainError("Koszul identity fails in every orientation");
  return rep;
}

}  // namespace ngr
