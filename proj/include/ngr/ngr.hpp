#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ngr/quiver.hpp"

namespace ngr {

/// NGr(n-2, n) as a period-6 presentation over the triangle quiver lift.
/// Arrows: e_{ij} (i<j) at residues 0,3; x_1..x_n at residues 1,2,4,5.
/// Relations per start residue t:
///   t = 0 mod 3:  f_i = sum_{j != i} e_{ij} x_j          (e_{ij} := -e_{ji})
///   t = 1 mod 3:  c_{ij} = x_i x_j - x_j x_i  (i < j)
///   t = 2 mod 3:  g_i = sum_{j != i} x_j e_{ji}
struct NgrInstance {
  int n;
  QuiverPresentation presentation;
};

NgrInstance ngr_presentation(int n);

/// Expected quadratic leading monomials per residue 0..5 for the presentation
/// order shipped by ngr_presentation (3-periodic):
///   residues 0,3: e_{in} x_n (i<n) and e_{n-1,n} x_{n-1}
///   residues 1,4: x_i x_j (i<j)
///   residues 2,5: x_1 e_{1i} (i>1) and x_2 e_{12}
std::vector<std::vector<PathWord>> expected_leading_monomials(int n);

/// Closed-form component dimensions. i in 0..5 taken mod 3, j = i + span,
/// span in 0..3.
std::int64_t closed_form_dim(int n, int residue, int span);

struct ClosedFormDims {
  // span 1, 2, 3 from residues 0, 1, 2
  std::array<std::array<std::int64_t, 4>, 3> dim;  // [residue][span]
};
ClosedFormDims closed_form_dims(int n);

/// Cyclic degree-3 element W = sum_{i != j} x_i e_{ij} x_j (slots at residues
/// 2, 3, 4 mod 6, taken cyclically; e_{ij} := -e_{ji} for i > j).
struct SuperpotentialElement {
  struct Term {
    int i;  // x index at the residue-2 slot
    int j;  // x index at the residue-1-mod-3 slot
    Rat coeff;
  };
  int n = 0;
  std::vector<Term> terms;  // one per ordered pair i != j, e-slot = e_(ij)
};

SuperpotentialElement superpotential(int n);

/// Removes each cyclic occurrence of arrow a and returns the sum of the
/// remaining degree-2 words, rooted at residue a.residue + 1.
NcPolynomial cyclic_derivative(const SuperpotentialElement& w,
                               const NgrInstance& inst, Arrow a);

/// Helpers shared with tests: arrow indices of the shipped label layout.
int ngr_e_index(int n, int i, int j);        // i < j
int ngr_x_index(int n, int i);               // 1-based
Arrow ngr_e_arrow(int n, int residue, int i, int j);
Arrow ngr_x_arrow(int n, int residue, int i);

}  // namespace ngr
