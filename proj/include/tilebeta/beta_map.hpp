#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tilebeta/substitution.hpp"

namespace tilebeta {

/// Piecewise-affine right-continuous map F(x) = beta*x - y_j on [0, B) with
/// breakpoints x_0 = 0 < ... < x_l = B, all data in Q(beta). Maps built from
/// a substitution also carry the symbol intervals E_k = [g_{k-1}, g_k) and
/// per-branch target symbols.
struct BetaTransform {
  FieldPtr field;
  AlgebraicNumber domain_end;                // B
  std::vector<AlgebraicNumber> breakpoints;  // x_0..x_l
  std::vector<AlgebraicNumber> translates;   // y_1..y_l

  // Present for substitution-built maps, empty otherwise.
  std::vector<std::string> symbols;
  std::vector<AlgebraicNumber> symbol_bounds;  // g_0..g_m
  std::vector<int> branch_symbol;              // target symbol per branch (0-based)

  int branches() const { return static_cast<int>(translates.size()); }
  bool has_symbols() const { return !symbols.empty(); }
};

/// The canonical map of the substitution: E is the concatenation of the
/// symbol intervals in alphabet order, each E_j subdivided at the cumulative
/// tile lengths of sigma(j) scaled by 1/beta, every branch mapping onto a
/// whole symbol interval.
BetaTransform beta_map_from_substitution(const Substitution1D& s);

/// Standalone map from explicit data; checks only basic shape (sizes,
/// ordering left to the validate report).
BetaTransform make_beta_map(FieldPtr field, std::vector<AlgebraicNumber> breakpoints,
                            std::vector<AlgebraicNumber> translates);

/// Branch index j (1-based) with x_{j-1} <= x < x_j; out_of_domain otherwise.
int branch_index(const BetaTransform& t, const AlgebraicNumber& x);

/// F(x); out_of_domain when x is outside [0, B).
AlgebraicNumber eval(const BetaTransform& t, const AlgebraicNumber& x);

/// Symbol index k (0-based) with v in E_k; requires symbol intervals.
int symbol_of(const BetaTransform& t, const AlgebraicNumber& v);

/// One central-tile step: the symbol of the image interval and y = F(x).
std::pair<int, AlgebraicNumber> central_tile_step(const BetaTransform& t,
                                                  const AlgebraicNumber& x);

struct MapViolation {
  std::string code;  // e.g. "breakpoints_not_increasing", "branch_escapes_domain"
  int branch = 0;    // 1-based branch index when applicable, 0 otherwise
  std::string message;
};

/// Invariant report; never throws.
std::vector<MapViolation> validate(const BetaTransform& t);

}  // namespace tilebeta
