#pragma once

#include <vector>

#include "tilebeta/beta_map.hpp"
#include "tilebeta/substitution.hpp"

namespace tilebeta {

/// Edge substitutions of a fault line: the lower side substitutes by the
/// rule itself, the upper side by the reversed words.
struct EdgeSubstitution {
  Substitution1D lower;  // S_l
  Substitution1D upper;  // S_u, words reversed
};

EdgeSubstitution make_edge_substitution(const Substitution1D& s);

/// A fault-line initial segment: total length plus the partitions induced by
/// the lower and the upper tiles (both from 0 to |L|).
struct InitialSegment {
  AlgebraicNumber length;
  std::vector<AlgebraicNumber> lower;  // a_0 = 0 < ... < a_k = |L|
  std::vector<AlgebraicNumber> upper;  // b_0 = 0 < ... < b_k = |L|
};

struct PrefixSuffixSets {
  std::vector<AlgebraicNumber> prefixes;  // Q_px, sorted
  std::vector<AlgebraicNumber> suffixes;  // Q_sx, sorted
};

/// Prefixes: left endpoints of the tiles of every edge image plus all lower
/// partition points of the segments. Suffixes: right-measured counterparts
/// (image length minus interior/terminal partition points) plus the segment
/// values |L| - b_i. Errors: incommensurate_segment when a partition cell
/// length matches no edge height.
PrefixSuffixSets prefix_suffix_sets(const EdgeSubstitution& e,
                                    const std::vector<InitialSegment>& segments);

struct OffsetBoundResult {
  bool pisot = false;  // false means NonPisotNoBound: no candidate list exists
  PrefixSuffixSets sets;
  std::vector<AlgebraicNumber> difference_set;  // D = {-s - p}, sorted
  mpq_class edge_bound;                         // m_1
  bool edge_bound_from_segment = false;         // m_1 came from a long segment
  std::vector<mpq_class> conjugate_bounds;      // m_j upper bounds, j = 2..d
  mpz_class q;                                  // offsets lie in (1/q) Z[beta]
  std::vector<AlgebraicNumber> candidates;      // finite superset of realizable offsets
};

/// Theorem-2 style enumeration: all lattice points of (1/q)Z^d whose first
/// embedding is within +-m_1 and whose conjugate embeddings are within
/// m_j / (1 - |beta_j|). Superset-safe: borderline points are kept.
OffsetBoundResult offset_bound(const EdgeSubstitution& e,
                               const std::vector<InitialSegment>& segments);

/// The tracked-misfit offsets: x_0, F(x_0), ..., F^n(x_0).
std::vector<AlgebraicNumber> misfit_orbit(const BetaTransform& t, const AlgebraicNumber& x0,
                                          int levels);

}  // namespace tilebeta
