#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ngr {

/// Exact rational scalar. Thin value wrapper around GMP's mpq_class that
/// always returns plain values from arithmetic (no gmpxx expression
/// templates leaking into Eigen internals).
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}            // NOLINT: implicit by design
  Rat(int n) : v_(n) {}             // NOLINT
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

  /// "p" or "p/q", canonical (q > 0, gcd 1).
  std::string str() const;
  /// Parses "p" or "p/q" with optional sign. Throws std::invalid_argument.
  static Rat parse(const std::string& s);

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace ngr

namespace Eigen {

template <>
struct NumTraits<ngr::Rat> : GenericNumTraits<ngr::Rat> {
  typedef ngr::Rat Real;
  typedef ngr::Rat NonInteger;
  typedef ngr::Rat Nested;
  typedef ngr::Rat Literal;
  static inline Real epsilon() { return ngr::Rat(0); }
  static inline Real dummy_precision() { return ngr::Rat(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
};

}  // namespace Eigen
