#pragma once

#include <optional>
#include <vector>

#include "eqloc/poly.hpp"
#include "eqloc/space.hpp"

namespace eqloc {

// Facet inequality a.x + b >= 0 with primitive integer inward normal a.
struct Facet {
    std::vector<long long> normal;
    long long offset = 0;
};

// Full-dimensional lattice polytope with consistent V- and H-descriptions.
// Coordinates are desk scale (|entry| <= 1e3, d <= 4); weights derived from
// polytopes are promoted to arbitrary precision on the space side.
struct LatticePolytope {
    int dim = 0;
    std::vector<std::vector<long long>> vertices;
    std::vector<Facet> facets;
};

struct DelzantData {
    LatticePolytope polytope;
    // Primitive edge directions at each vertex, indexed like vertices.
    std::vector<std::vector<std::vector<long long>>> vertex_edges;
};

// Facets from vertices by exact supporting-hyperplane enumeration (d <= 4).
std::vector<Facet> convex_hull_facets(int dim, const std::vector<std::vector<long long>>& vertices);

// Checks the H- and V-descriptions agree (recomputing facets when absent)
// and returns the polytope with facets filled in.
LatticePolytope canonicalize_polytope(LatticePolytope p);

// Smoothness: at every vertex the primitive edge directions form a lattice
// basis (determinant +-1).  Non-smooth vertex -> input_error naming it.
DelzantData delzant_validate(const LatticePolytope& p);

// One fixed point per vertex with weights edge.xi; xi must be generic
// (no vanishing edge pairing).
S1Space circle_restrict(const DelzantData& d, const std::vector<long long>& xi);

// |k*P  intersect  Z^d| by exact bounding-box enumeration; parallelized over
// slices of the first coordinate (EQLOC_THREADS caps the worker count).
Integer lattice_count(const LatticePolytope& p, long k);

// Interpolated from counts at k = 0..d, verified on k = d+1..2d.
Poly ehrhart_polynomial(const LatticePolytope& p);

struct ReflexiveDilate {
    long k = 0;
    std::vector<long long> translation;
    LatticePolytope dilate;
};

// Searches k = 1..d+1 and integer translations for a reflexive dilate
// (every facet a.x >= -1 with primitive a, a unique interior lattice point at
// the origin); verifies Hibi reciprocity i(z) = (-1)^d i(-1-z) on the dilate.
std::optional<ReflexiveDilate> reflexive_dilate(const LatticePolytope& p);

// Builds the toric space for xi, computes its Hilbert polynomial with
// k0 = the reflexive dilation factor, and compares it coefficientwise with
// the Ehrhart polynomial.
bool ehrhart_vs_hilbert(const DelzantData& d, const std::vector<long long>& xi);

// Scale-and-translate helper: k*P + t.
LatticePolytope dilate_translate(const LatticePolytope& p, long k, const std::vector<long long>& t);

} // namespace eqloc
