#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tilebeta/beta_map.hpp"
#include "tilebeta/substitution.hpp"

namespace tilebeta {

/// Rectangular inflate-and-subdivide rule: prototiles with Q(beta) side
/// lengths, each inflated by beta*I and subdivided into translated prototiles.
struct RectRule2D {
  FieldPtr field;
  std::vector<std::string> labels;
  std::vector<std::array<AlgebraicNumber, 2>> sizes;  // (w, h) per label

  struct Placement {
    int tile;
    AlgebraicNumber dx, dy;
  };
  std::vector<std::vector<Placement>> placements;

  int prototiles() const { return static_cast<int>(labels.size()); }
  int index_of(const std::string& label) const;  // -1 when absent
  /// 2D structure matrix: counts of child labels per prototile image.
  std::vector<std::vector<mpz_class>> structure_matrix() const;
};

struct RuleViolation {
  std::string code;  // "overlap", "gap", "out_of_bounds"
  std::string prototile;
  std::string message;  // includes the witness pair / point
};

struct RuleReport {
  std::vector<RuleViolation> violations;
  // Child label sequences along the image boundary, ordered by x.
  std::vector<std::vector<int>> top_words, bottom_words;
  // Induced 1D substitutions on edge-length classes, when consistent.
  std::optional<Substitution1D> top_substitution, bottom_substitution;
  // Width class of each prototile (index into the induced alphabet), or -1.
  std::vector<int> width_class;

  bool ok() const { return violations.empty(); }
};

/// Exact cover check by sweeping distinct x-coordinates; also extracts the
/// boundary edge words and the induced edge substitutions.
RuleReport validate_rule(const RectRule2D& r);

struct Patch2D {
  int root = 0;
  int level = 0;
  struct Tile {
    int label;
    AlgebraicNumber x, y;
  };
  std::vector<Tile> tiles;
};

/// S^n(P) with exact positions. Errors: invalid_rule (cover violations),
/// bad_index (unknown root), out_of_domain (negative level).
Patch2D expand(const RectRule2D& r, int root, int level);

struct AdjacencyClass {
  char orientation;  // 'H': below/above share a horizontal segment, 'V': left/right
  int first_label;   // below (H) or left (V)
  int second_label;  // above (H) or right (V)
  AlgebraicNumber offset;  // second anchor minus first anchor along the shared line
  long multiplicity;
};

/// Every two-tile configuration sharing a boundary segment of positive
/// length, deduplicated by (orientation, labels, exact offset).
std::vector<AdjacencyClass> adjacency_census(const RectRule2D& r, const Patch2D& p);

/// Follow a vertex of S(root) under inflation: for k = 1..levels, the
/// position of beta^{k-1} * vertex inside the top edge of the tile below it,
/// encoded as a point of the induced edge map's domain (so the list equals
/// the F-orbit of the seed). The seed must lie strictly inside a top edge;
/// later levels may ride tile corners (half-open edges).
/// Errors: not_on_edge_interior, invalid_rule.
std::vector<AlgebraicNumber> track_misfit(const RectRule2D& r, const AlgebraicNumber& vx,
                                          const AlgebraicNumber& vy, int root, int levels);

struct SvgStyle {
  std::map<std::string, std::string> fill;  // per-label override
  std::string stroke = "#333333";
  std::string stroke_width = "0.02";
  // Marker circles at patch coordinates.
  std::vector<std::array<AlgebraicNumber, 2>> markers;
  std::string marker_fill = "#d62728";
  std::string marker_radius = "0.08";
};

/// Deterministic SVG 1.1 document, one rect per tile; coordinates are decimal
/// approximations accurate to 1e-9.
std::string render_svg(const RectRule2D& r, const Patch2D& p, const SvgStyle& style = {});

}  // namespace tilebeta
