#include "ngr/coherence.hpp"

#include <algorithm>

#include "ngr/hilbert.hpp"
#include "ngr/linalg.hpp"

namespace ngr {

ComponentBasis component_basis(const GroebnerBasis& gb, int i, int degree) {
  if (degree > gb.completed_through())
    throw PreconditionError("component degree beyond completion bound");
  if (degree < 0) throw DomainError("negative degree");
  const int p = gb.presentation().period();
  int start = ((i % p) + p) % p;
  ComponentBasis out;
  out.start = start;
  out.degree = degree;
  out.end = (start + degree) % p;
  out.words = normal_words(gb, start, degree);
  return out;
}

namespace {

/// Free right module F = (+)_k P_{res_k}(-shift_k); all summands satisfy
/// res_k - shift_k = const mod p, so elements of a fixed degree have
/// coordinate words of determined lengths.
struct FreeModule {
  struct Summand {
    int residue;
    int shift;
  };
  std::vector<Summand> summands;

  int coord_length(int k, int degree) const {
    return degree - summands[k].shift;
  }
};

/// Per-degree layout of a free module: concatenated normal-word bases.
struct Layout {
  std::vector<ComponentBasis> bases;  // per summand (empty when degree < shift)
  std::vector<int> offsets;
  int total = 0;
  std::vector<std::map<PathWord, int>> index;

  int position(int k, const PathWord& w) const {
    auto it = index[k].find(w);
    return it == index[k].end() ? -1 : offsets[k] + it->second;
  }
};

Layout layout_at(const GroebnerBasis& gb, const FreeModule& f, int degree) {
  Layout lay;
  lay.bases.resize(f.summands.size());
  lay.offsets.resize(f.summands.size());
  lay.index.resize(f.summands.size());
  int off = 0;
  for (size_t k = 0; k < f.summands.size(); ++k) {
    lay.offsets[k] = off;
    int len = f.coord_length(static_cast<int>(k), degree);
    if (len >= 0) {
      lay.bases[k] = component_basis(gb, f.summands[k].residue, len);
      int i = 0;
      for (const auto& w : lay.bases[k].words) lay.index[k][w] = i++;
      off += static_cast<int>(lay.bases[k].words.size());
    }
  }
  lay.total = off;
  return lay;
}

/// Module element: one polynomial per summand (zero = absent).
using ModuleElement = std::vector<NcPolynomial>;

RatVector to_coords(const ModuleElement& v, const Layout& lay) {
  RatVector out(lay.total);
  out.setConstant(Rat(0));
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (const auto& [w, c] : v[k].terms()) {
      int pos = lay.position(static_cast<int>(k), w);
      if (pos < 0) throw PreconditionError("coordinate word is not normal");
      out(pos) = c;
    }
  }
  return out;
}

ModuleElement from_coords(const RatVector& v, const Layout& lay,
                          const FreeModule& f) {
  ModuleElement out(f.summands.size());
  for (size_t k = 0; k < f.summands.size(); ++k) {
    for (size_t i = 0; i < lay.bases[k].words.size(); ++i) {
      Rat c = v(lay.offsets[k] + static_cast<int>(i));
      if (!c.is_zero()) out[k].add_term(lay.bases[k].words[i], c);
    }
  }
  return out;
}

/// Right-multiply a module element by a normal word (usually one arrow).
ModuleElement mul_word(const GroebnerBasis& gb, const ModuleElement& v,
                       const PathWord& w) {
  const int p = gb.presentation().period();
  ModuleElement out(v.size());
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    NcPolynomial prod;
    for (const auto& [t, c] : v[k].terms()) {
      NcPolynomial red = normal_form(
          NcPolynomial::monomial(compose(t, w, p), Rat(1)), gb);
      prod = poly_add(prod, poly_scale(red, c));
    }
    out[k] = std::move(prod);
  }
  return out;
}

struct StageResult {
  std::map<int, int> minimal_degrees;
  std::map<int, int> kernel_dimensions;
  std::vector<SyzygyVector> minimal;           // as elements of the new cover
  std::vector<ModuleElement> minimal_elements;  // same, in cover coordinates
  FreeModule cover;                             // free cover of the generators
};

/// Kernel of (+)_m P(-deg_m) -> F, unit_m -> gens[m], degree by degree.
/// Returns minimal generators of the kernel (syzygies of gens).
StageResult module_syzygies(const GroebnerBasis& gb, const FreeModule& f,
                            const std::vector<ModuleElement>& gens,
                            const std::vector<int>& gen_degrees, int cutoff,
                            std::int64_t max_matrix_entries) {
  const auto& pres = gb.presentation();
  const int p = pres.period();
  StageResult res;

  // the free cover: one summand per generator, rooted at its end residue
  const int base = f.summands.empty()
                       ? 0
                       : (((f.summands[0].residue - f.summands[0].shift) % p) + p) % p;
  for (size_t m = 0; m < gens.size(); ++m) {
    int end = (base + gen_degrees[m]) % p;
    res.cover.summands.push_back({end, gen_degrees[m]});
  }

  if (gens.empty() || cutoff < 1) return res;
  int min_deg = *std::min_element(gen_degrees.begin(), gen_degrees.end());

  std::vector<RatVector> prev_kernel;  // basis of S_{e-1} in cover coords
  Layout prev_cover_layout;

  for (int e = min_deg; e <= cutoff; ++e) {
    Layout cover_lay = layout_at(gb, res.cover, e);
    Layout target_lay = layout_at(gb, f, e);
    if (cover_lay.total == 0) {
      prev_kernel.clear();
      prev_cover_layout = cover_lay;
      continue;
    }
    std::int64_t entries =
        static_cast<std::int64_t>(target_lay.total) * cover_lay.total;
    if (entries > max_matrix_entries)
      throw ResourceLimitError(
          "syzygy matrix at degree " + std::to_string(e) + " needs " +
          std::to_string(target_lay.total) + " x " +
          std::to_string(cover_lay.total) +
          " exact rational entries, beyond the configured budget");

    RatMatrix phi(target_lay.total, cover_lay.total);
    phi.setConstant(Rat(0));
    for (size_t m = 0; m < gens.size(); ++m) {
      int len = res.cover.coord_length(static_cast<int>(m), e);
      if (len < 0) continue;
      const auto& words = cover_lay.bases[m].words;
      for (size_t wi = 0; wi < words.size(); ++wi) {
        ModuleElement img = mul_word(gb, gens[m], words[wi]);
        RatVector col = to_coords(img, target_lay);
        phi.col(cover_lay.offsets[m] + static_cast<int>(wi)) = col;
      }
    }

    RatMatrix ker = nullspace(std::move(phi));
    res.kernel_dimensions[e] = static_cast<int>(ker.cols());

    // quotient by multiples of the lower kernel
    RowSpace space(cover_lay.total);
    for (const auto& v : prev_kernel) {
      ModuleElement elem = from_coords(v, prev_cover_layout, res.cover);
      int r = (base + e - 1) % p;
      for (int a = 0; a < pres.arrow_count(r); ++a) {
        PathWord arrow(r, {static_cast<std::uint16_t>(a)});
        ModuleElement mul = mul_word(gb, elem, arrow);
        space.add(to_coords(mul, cover_lay));
      }
    }
    int new_min = 0;
    for (int c = 0; c < ker.cols(); ++c) {
      RatVector v = ker.col(c);
      if (!space.add(v)) continue;
      ++new_min;
      ModuleElement elem = from_coords(v, cover_lay, res.cover);
      // soundness: the syzygy must expand to zero against the generators
      ModuleElement expanded(f.summands.size());
      for (size_t m = 0; m < gens.size(); ++m) {
        if (elem[m].is_zero()) continue;
        for (const auto& [w, c2] : elem[m].terms()) {
          ModuleElement part = mul_word(gb, gens[m], w);
          for (size_t k = 0; k < expanded.size(); ++k)
            expanded[k] = poly_add(expanded[k], poly_scale(part[k], c2));
        }
      }
      for (const auto& q : expanded)
        if (!q.is_zero())
          throw std::logic_error("syzygy fails to annihilate the generators");
      SyzygyVector sv;
      sv.degree = e;
      sv.coords = elem;
      res.minimal.push_back(std::move(sv));
      res.minimal_elements.push_back(std::move(elem));
    }
    if (new_min) res.minimal_degrees[e] = new_min;

    prev_kernel.clear();
    for (int c = 0; c < ker.cols(); ++c) prev_kernel.push_back(ker.col(c));
    prev_cover_layout = cover_lay;
  }
  return res;
}

}  // namespace

SyzygyReport ideal_syzygies(const GroebnerBasis& gb,
                            const std::vector<NcPolynomial>& gens, int cutoff,
                            std::int64_t max_matrix_entries) {
  SyzygyReport rep;
  rep.cutoff = cutoff;
  if (gens.empty()) return rep;

  int start = -1;
  int max_gen_deg = 0;
  for (const auto& g : gens) {
    if (g.is_zero()) throw DomainError("zero generator");
    if (start < 0) start = g.start();
    if (g.start() != start)
      throw DomainError("generators must share a start residue");
    max_gen_deg = std::max(max_gen_deg, g.degree());
  }
  if (cutoff > gb.completed_through())
    throw PreconditionError("cutoff exceeds completed degree");

  FreeModule target;
  target.summands.push_back({start, 0});
  std::vector<ModuleElement> gvecs;
  std::vector<int> gdegs;
  for (const auto& g : gens) {
    ModuleElement v(1);
    v[0] = normal_form(g, gb);
    if (v[0].is_zero()) throw DomainError("generator reduces to zero");
    gvecs.push_back(std::move(v));
    gdegs.push_back(g.degree());
    rep.generator_degrees.push_back(g.degree());
  }

  StageResult st = module_syzygies(gb, target, gvecs, gdegs, cutoff,
                                   max_matrix_entries);
  rep.minimal_degrees = st.minimal_degrees;
  rep.kernel_dimensions = st.kernel_dimensions;
  rep.minimal_syzygies = st.minimal;
  if (!rep.minimal_degrees.empty()) {
    int last = rep.minimal_degrees.rbegin()->first;
    if (last < cutoff) rep.saturated_at = last;
  }
  return rep;
}

namespace {

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  /// uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  /// uniform integer in [lo, hi]
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

}  // namespace

ProbeReport coherence_probe(const GroebnerBasis& gb, int d, int trials,
                            std::uint64_t seed) {
  if (d < 1) throw DomainError("d must be >= 1");
  if (trials < 0) throw DomainError("negative trial count");
  const int cutoff = d + 8;
  if (gb.completed_through() < cutoff)
    throw PreconditionError("probe needs completion through d + 8");
  const int p = gb.presentation().period();

  ProbeReport rep;
  rep.d = d;
  rep.trials = trials;
  rep.seed = seed;
  rep.bound = d + 6;

  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(p)));
    int count = static_cast<int>(rng.range(1, 4));
    std::vector<NcPolynomial> gens;
    for (int g = 0; g < count; ++g) {
      int deg = static_cast<int>(rng.range(1, d));
      ComponentBasis basis = component_basis(gb, start, deg);
      NcPolynomial poly;
      while (poly.is_zero()) {
        poly = NcPolynomial();
        for (const auto& w : basis.words) {
          long c = rng.range(-3, 3);
          if (c != 0) poly.add_term(w, Rat(c));
        }
      }
      gens.push_back(std::move(poly));
    }
    SyzygyReport sr = ideal_syzygies(gb, gens, cutoff);
    for (const auto& [deg, cnt] : sr.minimal_degrees) {
      rep.degree_histogram[deg] += cnt;
      rep.max_minimal_degree = std::max(rep.max_minimal_degree, deg);
    }
  }
  rep.bound_satisfied = rep.max_minimal_degree <= rep.bound;
  return rep;
}

BettiTable resolve_simple(const GroebnerBasis& gb, int s, int hom_bound,
                          int deg_bound, std::int64_t max_matrix_entries) {
  if (deg_bound > gb.completed_through())
    throw PreconditionError("deg_bound exceeds completed degree");
  if (hom_bound < 1) throw DomainError("hom_bound must be >= 1");
  const auto& pres = gb.presentation();
  const int p = pres.period();
  s = ((s % p) + p) % p;

  BettiTable table;
  table.simple_residue = s;
  table.deg_bound = deg_bound;
  table.rows.resize(hom_bound + 2);
  table.rows[0] = {{0, 1}};

  // ker(P_s -> k_s) is the span of all positive-length normal words; it is
  // generated by the arrows at s (every normal word is prefix . last-arrow
  // with a normal prefix), so homological degree 1 sits entirely in shift 1.
  FreeModule f0;
  f0.summands.push_back({s, 0});
  std::vector<ModuleElement> gens;
  std::vector<int> gdegs;
  for (int a = 0; a < pres.arrow_count(s); ++a) {
    ModuleElement v(1);
    v[0] = NcPolynomial::monomial(
        PathWord(s, {static_cast<std::uint16_t>(a)}), Rat(1));
    gens.push_back(std::move(v));
    gdegs.push_back(1);
  }
  table.rows[1] = {{1, static_cast<int>(gens.size())}};

  FreeModule cur = f0;
  for (int h = 2; h < hom_bound + 2; ++h) {
    StageResult st = module_syzygies(gb, cur, gens, gdegs, deg_bound,
                                     max_matrix_entries);
    table.rows[h] = st.minimal_degrees;
    cur = st.cover;
    gens.clear();
    gdegs.clear();
    for (size_t i = 0; i < st.minimal_elements.size(); ++i) {
      gens.push_back(st.minimal_elements[i]);
      gdegs.push_back(st.minimal[i].degree);
    }
    if (gens.empty()) break;  // resolution already ended
  }
  return table;
}

}  // namespace ngr
