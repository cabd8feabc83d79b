#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ngr/rational.hpp"

namespace ngr {

struct CompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OrderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct HomogeneityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arrow of a periodic quiver: starts at position residue, identified by its
/// index in the residue's declaration list (0 = largest in position order).
struct Arrow {
  int residue = 0;
  int index = 0;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// A composable sequence of arrows. letters[k] is the arrow index at residue
/// (start + k) mod p. Empty word = vertex idempotent at start.
class PathWord {
 public:
  PathWord() = default;
  static PathWord idempotent(int start) {
    PathWord w;
    w.start_ = start;
    return w;
  }
  PathWord(int start, std::vector<std::uint16_t> letters)
      : start_(start), letters_(std::move(letters)) {}

  int start() const { return start_; }
  int degree() const { return static_cast<int>(letters_.size()); }
  int end(int period) const {
    return static_cast<int>((start_ + letters_.size()) % period);
  }
  const std::vector<std::uint16_t>& letters() const { return letters_; }
  std::uint16_t letter(int k) const { return letters_.at(k); }
  int letter_residue(int k, int period) const { return (start_ + k) % period; }

  PathWord subword(int pos, int len, int period) const {
    std::vector<std::uint16_t> ls(letters_.begin() + pos,
                                  letters_.begin() + pos + len);
    return PathWord((start_ + pos) % period, std::move(ls));
  }

  /// Structural ordering for use as a container key (not the monomial order).
  friend auto operator<=>(const PathWord& a, const PathWord& b) {
    if (auto c = a.start_ <=> b.start_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const PathWord&, const PathWord&) = default;

 private:
  int start_ = 0;
  std::vector<std::uint16_t> letters_;
};

class NcPolynomial;

/// Finitely presented graded path algebra data over a periodic quiver.
/// Arrows at residue r are declared largest-first: declaration order is the
/// position order, descending.
class QuiverPresentation {
 public:
  QuiverPresentation(int period, std::vector<std::vector<std::string>> labels);

  int period() const { return period_; }
  int arrow_count(int residue) const {
    return static_cast<int>(labels_[norm(residue)].size());
  }
  const std::vector<std::string>& labels(int residue) const {
    return labels_[norm(residue)];
  }
  const std::string& label(int residue, int index) const {
    return labels_[norm(residue)].at(index);
  }
  /// index of label at residue, or -1.
  int index_of(int residue, const std::string& label) const;

  /// Position order: higher rank = larger arrow. Declaration index 0 is the
  /// largest arrow of its residue.
  int order_rank(int residue, int index) const {
    return arrow_count(residue) - index;
  }

  const std::vector<NcPolynomial>& relations() const { return relations_; }
  void add_relation(NcPolynomial rel);

  bool word_fits(const PathWord& w) const;
  std::string format_word(const PathWord& w) const;
  std::string format_poly(const NcPolynomial& p) const;

  friend bool operator==(const QuiverPresentation&, const QuiverPresentation&);

 private:
  int norm(int residue) const {
    int r = residue % period_;
    return r < 0 ? r + period_ : r;
  }
  int period_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<NcPolynomial> relations_;
};

/// Finite rational combination of same-start same-degree paths.
class NcPolynomial {
 public:
  NcPolynomial() = default;
  static NcPolynomial monomial(PathWord w, Rat c);

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  /// start/degree of the homogeneous terms; throws on the zero polynomial.
  int start() const;
  int degree() const;
  const std::map<PathWord, Rat>& terms() const { return terms_; }
  Rat coeff(const PathWord& w) const;

  void add_term(const PathWord& w, const Rat& c);

  friend bool operator==(const NcPolynomial&, const NcPolynomial&) = default;

 private:
  std::map<PathWord, Rat> terms_;
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

/// Reverse lexicographic path order: equal-degree same-start words are
/// compared at the rightmost position where they differ, using the position
/// order of that residue.
class PathOrder {
 public:
  explicit PathOrder(const QuiverPresentation& pres) : pres_(&pres) {}

  Cmp compare(const PathWord& u, const PathWord& v) const;
  bool less(const PathWord& u, const PathWord& v) const {
    return compare(u, v) == Cmp::LT;
  }
  bool greater(const PathWord& u, const PathWord& v) const {
    return compare(u, v) == Cmp::GT;
  }
  const QuiverPresentation& presentation() const { return *pres_; }

 private:
  const QuiverPresentation* pres_;
};

PathWord compose(const PathWord& u, const PathWord& v, int period);
/// start residue shifted by k (same letters; order data is residue-periodic).
PathWord shift(const PathWord& w, int k, int period);

NcPolynomial poly_add(const NcPolynomial& p, const NcPolynomial& q);
NcPolynomial poly_scale(const NcPolynomial& p, const Rat& c);
NcPolynomial poly_mul(const NcPolynomial& p, const NcPolynomial& q, int period);

}  // namespace ngr
