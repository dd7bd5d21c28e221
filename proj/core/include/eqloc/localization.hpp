#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqloc/laurent.hpp"
#include "eqloc/rational_fn.hpp"
#include "eqloc/space.hpp"
#include "eqloc/todd.hpp"

namespace eqloc {

// Partition of n selecting the Chern monomial c_{i1}...c_{ik}.
struct ChernPartition {
    std::vector<int> parts; // decreasing, sums to n

    static ChernPartition of(std::vector<int> parts, int n);
};

// Restriction of an equivariant line bundle to the fixed points:
// L(p) = t^{a_p}.
struct BundleRestriction {
    std::map<std::string, Integer> a;
};

BundleRestriction trivial_bundle(const S1Space& space);
BundleRestriction scale_bundle(const BundleRestriction& b, const Integer& k);
// Determinant dual: a_p = -sum of weights at p.
BundleRestriction canonical_bundle(const S1Space& space);

// sum_p prod_m sigma_{part_m}(w_p) / prod_j w_{p,j}; a theorem forces this to
// be an integer for genuine spaces, so a non-integer sum is an error
// ("localization sum not integral").
Integer chern_number(const S1Space& space, const ChernPartition& part);

// c_1^h * T_{n-h} [M], exact rational.
Rational mixed_chern_todd(const S1Space& space, int h);

// Evaluation of a Chern-monomial combination by the fixed point formula.
Rational localize_chern_poly(const S1Space& space, const ChernPoly& cls, int extra_c1_power = 0);

// sum_p t^{a_p} / prod_j (1 - t^{-w_{p,j}}) as an exact Laurent polynomial;
// throws check_error("not a Laurent polynomial") if the sum fails to be one.
LaurentPoly atiyah_segal_index(const S1Space& space, const BundleRestriction& bundle);

// Equivariant index evaluated at t = 1 (the topological index).
Integer index_at_one(const S1Space& space, const BundleRestriction& bundle);

enum class DominationSide { plus, minus };

// tau dominated by c1^+ : tau(p) <= c1^+(p) everywhere;
// by c1^-          : -tau(p) <= c1^-(p) everywhere.
bool is_dominated(const S1Space& space, const BundleRestriction& tau, DominationSide side);

struct LimitIndexResult {
    Rational analytic;   // limit of the index of e(-tau) at the requested end
    Rational predicted;  // sum_p delta^{+/-}(p) (-1)^{...}
    LaurentPoly index;
};

// For tau dominated by c1^+ (limit at zero) or c1^- (limit at infinity):
// computes the index of e(-tau), takes the limit, and checks it against the
// combinatorial prediction.  Throws check_error("not dominated") when the
// precondition fails and "unbounded limit" when the limit is infinite.
LimitIndexResult limit_index(const S1Space& space, const BundleRestriction& tau, LimitPoint at);

struct VanishingReport {
    Integer constant_c;
    std::vector<std::pair<int, bool>> vanishes; // h -> index of e(-h eta) == 0
    bool all_vanish() const;
};

// Given eta with sum(w_p) = k*eta(p) + c for one integer c, the index of
// e(-h eta) vanishes for h = 1..k-1; evaluates and asserts exactly that.
VanishingReport verify_vanishing_range(const S1Space& space, const BundleRestriction& eta, int k);

} // namespace eqloc
