#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqloc/rational.hpp"

namespace eqloc {

// One isolated fixed point with its multiset of nonzero isotropy weights.
struct FixedPoint {
    std::string id;
    std::vector<Integer> weights;
};

// Fixed-point model of a compact almost complex S^1-manifold of real
// dimension 2n with isolated fixed points.  index_k0 is a user-declared
// topological datum (never inferred from the weights); eta an optional
// declared restriction of an equivariant class.
struct S1Space {
    std::string name;
    int n = 0;
    std::vector<FixedPoint> points;
    std::optional<int> index_k0;
    std::optional<std::map<std::string, Integer>> eta;
};

// Derived per-point combinatorics.
struct WeightProfile {
    std::map<std::string, int> n_negative;          // lambda_p
    std::vector<long> N;                            // N_0..N_n
    std::map<std::string, Integer> c1_restriction;  // sum of weights
    std::map<std::string, Integer> c1_plus;         // sum of positive weights
    std::map<std::string, Integer> c1_minus;        // -(sum of negative weights)
};

struct Finding {
    std::string check;
    std::string detail;
    bool pass = false;
};

struct ValidationReport {
    std::vector<Finding> findings;
    bool all_pass() const;
    std::string str() const;
};

// Structural (hard) validation: nonzero weights, arity, nonempty points,
// unique ids.  Throws input_error on violation.
void validate_structure(const S1Space& space);

// Full consistency suite: the hard checks, then the soft findings
// (N_j = N_{n-j} symmetry, vanishing of the localization sum of 1,
// equivariant index of the trivial bundle = N_0, and consistency of a
// declared index/eta).  A failing space is flagged as not consistent
// as S^1-space data.
ValidationReport validate(const S1Space& space);

WeightProfile weight_profile(const S1Space& space);

// Product action: fixed points are pairs, weight multisets concatenate.
// The index of the product is taken from the argument, never inferred;
// declared eta data is dropped.
S1Space product_space(const S1Space& a, const S1Space& b, std::optional<int> k0 = std::nullopt);

const FixedPoint& point_by_id(const S1Space& space, const std::string& id);

} // namespace eqloc
