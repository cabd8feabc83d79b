#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ngr/groebner.hpp"

namespace ngr {

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Normal words spanning one graded component, sorted descending in the
/// path order.
struct ComponentBasis {
  int start = 0;
  int degree = 0;
  int end = 0;
  std::vector<PathWord> words;
};

ComponentBasis component_basis(const GroebnerBasis& gb, int i, int degree);

/// A minimal syzygy among module generators: one coefficient polynomial per
/// generator (zero polynomials allowed), of total degree `degree`.
struct SyzygyVector {
  int degree = 0;
  std::vector<NcPolynomial> coords;
};

struct SyzygyReport {
  std::vector<int> generator_degrees;
  std::map<int, int> minimal_degrees;    // degree -> count of minimal syzygies
  std::map<int, int> kernel_dimensions;  // degree -> dim of the full kernel
  int cutoff = 0;
  /// Largest degree with a new minimal syzygy, when the window beyond it up
  /// to the cutoff stayed quiet; absent when syzygies appear at the cutoff
  /// itself (no saturation evidence) or when there are none at all.
  std::optional<int> saturated_at;
  std::vector<SyzygyVector> minimal_syzygies;
};

/// Syzygies of the right ideal generated by gens (homogeneous, common start
/// residue) inside P_start, degree by degree up to cutoff. Each reported
/// minimal syzygy is re-expanded against the generators and must vanish.
SyzygyReport ideal_syzygies(const GroebnerBasis& gb,
                            const std::vector<NcPolynomial>& gens, int cutoff,
                            std::int64_t max_matrix_entries = 8'000'000);

struct ProbeReport {
  int d = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int bound = 0;  // d + 6
  int max_minimal_degree = 0;
  std::map<int, int> degree_histogram;
  bool bound_satisfied = false;
};

/// Seeded random finitely generated right ideals with generators of degree
/// <= d; asserts no minimal syzygy above degree d + 6 (cutoff d + 8).
ProbeReport coherence_probe(const GroebnerBasis& gb, int d, int trials,
                            std::uint64_t seed);

/// rows[h]: shift -> multiplicity of P(-shift) at homological degree h.
/// rows.size() == hom_bound + 2: the last row certifies emptiness one step
/// past hom_bound within the degree window.
struct BettiTable {
  int simple_residue = 0;
  int deg_bound = 0;
  std::vector<std::map<int, int>> rows;
};

/// Minimal graded free resolution of the simple module k_s by exact kernel
/// computation, degree by degree through deg_bound.
BettiTable resolve_simple(const GroebnerBasis& gb, int s, int hom_bound,
                          int deg_bound,
                          std::int64_t max_matrix_entries = 8'000'000);

}  // namespace ngr
