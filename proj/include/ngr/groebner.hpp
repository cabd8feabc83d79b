#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ngr/quiver.hpp"

namespace ngr {

/// One reduction rule ghat -> gbar, encoding the basis element g = ghat - gbar.
/// Every monomial of tail is strictly below lead in the path order.
struct RewriteRule {
  PathWord lead;
  NcPolynomial tail;  // may be zero (monomial rule)
};

enum class ReductionStrategy {
  LeftmostGreatest,  // canonical: largest reducible monomial, leftmost match
  RightmostLeast,    // stress strategy for confluence tests
};

/// Interreduced rewrite system, complete through a recorded degree bound:
/// every overlap ambiguity whose overlap word has degree <= completed_through
/// reduces to zero.
class GroebnerBasis {
 public:
  const QuiverPresentation& presentation() const { return pres_; }
  const PathOrder& order() const { return order_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  int completed_through() const { return completed_through_; }

  bool is_quadratic() const;
  int max_rule_degree() const;
  std::vector<int> rule_count_per_residue() const;

  /// leftmost position in w where some rule lead occurs, with the rule id;
  /// -1 if none. For equal positions the longest lead wins.
  std::pair<int, int> find_occurrence(const PathWord& w) const;
  bool is_normal(const PathWord& w) const {
    return find_occurrence(w).first < 0;
  }

  /// Construction without validation; used by deserialization and by tests
  /// that need deliberately broken systems.
  static GroebnerBasis unchecked(QuiverPresentation pres,
                                 std::vector<RewriteRule> rules,
                                 int completed_through);

  friend GroebnerBasis buchberger_complete(const QuiverPresentation&, int);

 private:
  explicit GroebnerBasis(QuiverPresentation pres)
      : pres_(std::move(pres)), order_(pres_) {}
  void reindex();

  QuiverPresentation pres_;
  PathOrder order_;
  std::vector<RewriteRule> rules_;
  // rule ids by (start residue of lead, first letter), checked longest-first
  std::vector<std::vector<std::vector<int>>> by_first_;
  int completed_through_ = 0;
};

/// Buchberger completion, degree by degree, of the presentation's relations.
/// Homogeneous input only; terminates for max_degree >= max relation degree.
GroebnerBasis buchberger_complete(const QuiverPresentation& pres,
                                  int max_degree);

NcPolynomial normal_form(const NcPolynomial& p, const GroebnerBasis& gb,
                         ReductionStrategy strategy =
                             ReductionStrategy::LeftmostGreatest);

/// Product of two normal words as a combination of normal words.
/// Throws PreconditionError if u or v is not normal.
NcPolynomial star_product(const PathWord& u, const PathWord& v,
                          const GroebnerBasis& gb);

enum class Side { Right, Left };

struct ProcessingReport {
  int r = 0;
  int degree_bound = 0;
  Side side = Side::Right;
  bool verified = false;
  /// (u, w, s): u normal, and ws (right) or sw (left) normal, |w| = r,
  /// witnessing u*(ws) != (u*w)s resp. (sw)*u != s(w*u).
  std::optional<std::array<PathWord, 3>> counterexample;
};

/// Exhaustive r-processing check over normal words u, v with
/// deg(u) + deg(v) <= degree_bound and v factored with |w| = r.
ProcessingReport check_r_processing(const GroebnerBasis& gb, int r,
                                    int degree_bound, Side side);

struct ProofPropertiesReport {
  bool type_preserved = true;        // (1) e/x letter kinds stable under rules
  bool second_letter_monotone = true;  // (2) tails never raise the 2nd letter
  bool xx_downward_closed = true;    // (4) normal x.x grams downward closed
  bool all() const {
    return type_preserved && second_letter_monotone && xx_downward_closed;
  }
  std::vector<std::string> violations;
};

/// Checks properties (1), (2), (4) from the 3-processing argument against a
/// quadratic basis over a period-6 NGr-shaped quiver (arrows at residues
/// 0 mod 3 are "e"-type, the rest "x"-type).
ProofPropertiesReport proof_properties_check(const GroebnerBasis& gb);

/// All normal words with the given start and degree, sorted descending in
/// the path order.
std::vector<PathWord> normal_words(const GroebnerBasis& gb, int start,
                                   int degree);

}  // namespace ngr
