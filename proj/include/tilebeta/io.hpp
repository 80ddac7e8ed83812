#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tilebeta/lift.hpp"
#include "tilebeta/offsets.hpp"
#include "tilebeta/tiling2d.hpp"

namespace tilebeta {

using Json = nlohmann::ordered_json;

/// Reject unknown keys; every loader below is strict about its schema.
void check_keys(const Json& j, const std::vector<std::string>& allowed,
                const std::string& context);

Json load_json_file(const std::string& path);

// --- exact literals ---------------------------------------------------------

Json algebraic_literal(const AlgebraicNumber& a);                    // ["p/q", ...]
AlgebraicNumber parse_algebraic(const Json& j, const FieldPtr& f, const std::string& ctx);
/// Exact literal plus a labeled 12-digit decimal approximation.
Json algebraic_with_approx(const AlgebraicNumber& a);
/// Deterministic decimal approximation of the value at beta.
std::string approx_string(const AlgebraicNumber& a, int digits);

// --- input files -------------------------------------------------------------

/// {"alphabet": [...], "rules": {...}}
Substitution1D parse_substitution(const Json& j, FieldOptions opt = {});
Substitution1D load_substitution(const std::string& path, FieldOptions opt = {});

/// {"polynomial": [...], "prototiles": {...}, "placements": {...}}
RectRule2D parse_rule(const Json& j, FieldOptions opt = {});
RectRule2D load_rule(const std::string& path, FieldOptions opt = {});

/// [{"length": ..., "lower": [...], "upper": [...]}, ...]
std::vector<InitialSegment> parse_segments(const Json& j, const FieldPtr& f);
std::vector<InitialSegment> load_segments(const std::string& path, const FieldPtr& f);

// --- reports -----------------------------------------------------------------

Json analyze_report(const Substitution1D& s);
Json betamap_report(const BetaTransform& t);
Json orbit_report(const LiftedMap& m, const OrbitOutcome& o);
Json census_report(const RectRule2D& r, const std::vector<AdjacencyClass>& classes);
Json offsets_report(const OffsetBoundResult& res);
Json misfit_report(const BetaTransform& t, const std::vector<AlgebraicNumber>& values);
Json rule_report(const RectRule2D& r, const RuleReport& rep);

}  // namespace tilebeta
