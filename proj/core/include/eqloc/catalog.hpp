#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqloc/hilbert.hpp"
#include "eqloc/space.hpp"

namespace eqloc {

// Builtin example spaces and Hilbert-polynomial fixtures with their expected
// invariants, used as an executable test bed.  Entries whose weight data is
// not available (V5, V22, nK) carry only a declared Hilbert polynomial.
struct CatalogEntry {
    std::string key;
    std::string params_help;
    bool is_fixture = false; // Hilbert-polynomial fixture, no weight data
    std::string description;
};

struct CatalogDeclared {
    std::optional<int> k0;
    std::optional<std::vector<long>> N;
    std::optional<Rational> c1n;
    std::optional<Rational> c1cn_minus_1; // c1 c_{n-1}
    std::optional<Poly> hilbert;
    std::optional<Poly> gen_numerator; // U(t)
};

const std::vector<CatalogEntry>& catalog_entries();

// Space-producing recipes: CPn, CP3, Hirzebruch, Flag3, ProductOfSpheres,
// CP1xCP2.  Fixture keys throw input_error here.
S1Space catalog_emit(const std::string& key, const std::vector<Integer>& params);

// Declared values for a recipe instance (what the pipeline must reproduce).
CatalogDeclared catalog_declared(const std::string& key, const std::vector<Integer>& params);

// Hilbert fixtures: V5, V22, nK.
HilbertPoly catalog_fixture(const std::string& key);

struct SelftestResult {
    std::string entry;
    ValidationReport report;
};

// Runs the full pipeline on every entry and diffs against the declared
// values.
std::vector<SelftestResult> catalog_selftest();

} // namespace eqloc
