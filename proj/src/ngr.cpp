#include "ngr/ngr.hpp"

#include <algorithm>
#include <string>

namespace ngr {

namespace {

std::string e_label(int i, int j) {
  if (j <= 9) return "e" + std::to_string(i) + std::to_string(j);
  return "e" + std::to_string(i) + "-" + std::to_string(j);
}

std::string x_label(int i) { return "x" + std::to_string(i); }

}  // namespace

int ngr_e_index(int n, int i, int j) {
  // pairs declared in pair-lex order: e12, e13, ..., e1n, e23, ...
  return (i - 1) * n - i * (i - 1) / 2 + (j - i - 1);
}

int ngr_x_index(int n, int i) {
  // x_n declared first (largest), so x_i sits at n - i
  return n - i;
}

Arrow ngr_e_arrow(int n, int residue, int i, int j) {
  return Arrow{residue, ngr_e_index(n, i, j)};
}

Arrow ngr_x_arrow(int n, int residue, int i) {
  return Arrow{residue, ngr_x_index(n, i)};
}

NgrInstance ngr_presentation(int n) {
  if (n < 3) throw DomainError("ngr_presentation: n must be at least 3");
  std::vector<std::vector<std::string>> labels(6);
  for (int r : {0, 3})
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) labels[r].push_back(e_label(i, j));
  for (int r : {1, 2, 4, 5})
    for (int i = n; i >= 1; --i) labels[r].push_back(x_label(i));
  QuiverPresentation pres(6, std::move(labels));

  auto e_letter = [&](int i, int j) {
    // signed basis element e_{ij}: for i > j this is -e_{ji}
    int a = std::min(i, j), b = std::max(i, j);
    return std::pair<std::uint16_t, Rat>(
        static_cast<std::uint16_t>(ngr_e_index(n, a, b)), i < j ? Rat(1) : Rat(-1));
  };
  auto x_letter = [&](int i) {
    return static_cast<std::uint16_t>(ngr_x_index(n, i));
  };

  for (int t = 0; t < 6; ++t) {
    if (t % 3 == 0) {
      for (int i = 1; i <= n; ++i) {  // f_i = sum_{j != i} e_{ij} x_j
        NcPolynomial f;
        for (int j = 1; j <= n; ++j) {
          if (j == i) continue;
          auto [e, s] = e_letter(i, j);
          f.add_term(PathWord(t, {e, x_letter(j)}), s);
        }
        pres.add_relation(f);
      }
    } else if (t % 3 == 1) {
      for (int i = 1; i <= n; ++i)  // c_{ij} = x_i x_j - x_j x_i, i < j
        for (int j = i + 1; j <= n; ++j) {
          NcPolynomial c;
          c.add_term(PathWord(t, {x_letter(i), x_letter(j)}), Rat(1));
          c.add_term(PathWord(t, {x_letter(j), x_letter(i)}), Rat(-1));
          pres.add_relation(c);
        }
    } else {
      for (int i = 1; i <= n; ++i) {  // g_i = sum_{j != i} x_j e_{ji}
        NcPolynomial g;
        for (int j = 1; j <= n; ++j) {
          if (j == i) continue;
          auto [e, s] = e_letter(j, i);
          g.add_term(PathWord(t, {x_letter(j), e}), s);
        }
        pres.add_relation(g);
      }
    }
  }
  return NgrInstance{n, std::move(pres)};
}

std::vector<std::vector<PathWord>> expected_leading_monomials(int n) {
  if (n < 3) throw DomainError("expected_leading_monomials: n must be >= 3");
  std::vector<std::vector<PathWord>> rows(6);
  auto e = [&](int i, int j) {
    return static_cast<std::uint16_t>(ngr_e_index(n, i, j));
  };
  auto x = [&](int i) { return static_cast<std::uint16_t>(ngr_x_index(n, i)); };
  for (int t : {0, 3}) {
    for (int i = 1; i <= n; ++i) {
      if (i < n)
        rows[t].push_back(PathWord(t, {e(i, n), x(n)}));
      else
        rows[t].push_back(PathWord(t, {e(n - 1, n), x(n - 1)}));
    }
  }
  for (int t : {1, 4})
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        rows[t].push_back(PathWord(t, {x(i), x(j)}));
  for (int t : {2, 5}) {
    for (int i = 1; i <= n; ++i) {
      if (i == 1)
        rows[t].push_back(PathWord(t, {x(2), e(1, 2)}));
      else
        rows[t].push_back(PathWord(t, {x(1), e(1, i)}));
    }
  }
  return rows;
}

std::int64_t closed_form_dim(int n, int residue, int span) {
  if (n < 3) throw DomainError("closed_form_dim: n must be >= 3");
  std::int64_t N = n;
  int r = ((residue % 3) + 3) % 3;
  switch (span) {
    case 0:
      return 1;
    case 1:
      return r == 0 ? N * (N - 1) / 2 : N;
    case 2:
      return r == 1 ? N * (N + 1) / 2 : N * (N * N - N - 2) / 2;
    case 3:
      return r == 2 ? N * N * N * N / 2 - N * N * N / 2 - 2 * N * N + 1
                    : (N * N * N * N - 5 * N * N + 4) / 4;
    default:
      throw DomainError("closed_form_dim: span must be 0..3");
  }
}

ClosedFormDims closed_form_dims(int n) {
  ClosedFormDims t;
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s <= 3; ++s) t.dim[r][s] = closed_form_dim(n, r, s);
  return t;
}

SuperpotentialElement superpotential(int n) {
  if (n < 3) throw DomainError("superpotential: n must be >= 3");
  SuperpotentialElement w;
  w.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      w.terms.push_back({i, j, i < j ? Rat(1) : Rat(-1)});
    }
  return w;
}

NcPolynomial cyclic_derivative(const SuperpotentialElement& w,
                               const NgrInstance& inst, Arrow a) {
  const int n = w.n;
  const auto& pres = inst.presentation;
  if (a.residue < 0 || a.residue >= 6 || a.index < 0 ||
      a.index >= pres.arrow_count(a.residue))
    throw DomainError("cyclic_derivative: arrow not in quiver");
  const int root = (a.residue + 1) % 6;
  NcPolynomial out;
  for (const auto& term : w.terms) {
    // term: x_i (res 2 slot) e_(ij) (res 0 slot) x_j (res 1 slot), cyclic
    const auto epair = static_cast<std::uint16_t>(ngr_e_index(
        n, std::min(term.i, term.j), std::max(term.i, term.j)));
    Rat c = term.coeff;
    if (a.residue % 3 == 2) {  // match the x_i slot -> e x word
      if (a.index == ngr_x_index(n, term.i)) {
        out.add_term(
            PathWord(root, {epair, static_cast<std::uint16_t>(
                                       ngr_x_index(n, term.j))}),
            c);
      }
    } else if (a.residue % 3 == 0) {  // match the e slot -> x x word
      if (a.index == epair) {
        // c already carries the sign of e_(ij) relative to the basis arrow
        out.add_term(
            PathWord(root, {static_cast<std::uint16_t>(ngr_x_index(n, term.j)),
                            static_cast<std::uint16_t>(ngr_x_index(n, term.i))}),
            c);
      }
    } else {  // residue % 3 == 1: match the x_j slot -> x e word
      if (a.index == ngr_x_index(n, term.j)) {
        out.add_term(
            PathWord(root, {static_cast<std::uint16_t>(ngr_x_index(n, term.i)),
                            epair}),
            c);
      }
    }
  }
  return out;
}

}  // namespace ngr
