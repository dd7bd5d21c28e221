#pragma once

#include <string>

#include "eqloc/classify.hpp"
#include "eqloc/localization.hpp"
#include "eqloc/polytope.hpp"
#include "eqloc/space.hpp"

namespace eqloc {

// Space files: {"name", "n", "fixed_points": [{"id", "weights"}], "index"?, "eta"?}
// Weights that exceed 64 bits are carried as decimal strings.  Unknown fields
// are rejected.  Emission is canonical: fixed key order, two-space indent,
// trailing newline, so emit(parse(emit(x))) is byte-identical.
S1Space parse_space_file(const std::string& text);
std::string emit_space_file(const S1Space& space);

// Polytope files: {"dim", "vertices", "facets"?} with facets
// {"normal", "offset"} meaning normal.x + offset >= 0.
LatticePolytope parse_polytope_file(const std::string& text);
std::string emit_polytope_file(const LatticePolytope& p);

// Bundle files: {"a": {point id -> integer}}.
BundleRestriction parse_bundle_file(const std::string& text);

std::string report_json(const ValidationReport& rep);
std::string verdict_json(const Verdict& v);

std::string read_file(const std::string& path);

} // namespace eqloc
