#pragma once

#include <optional>

#include "eqloc/hilbert.hpp"
#include "eqloc/space.hpp"

namespace eqloc {

enum class VerdictKind { Hamiltonian, NonHamiltonian, Inconsistent, Indeterminate };

struct Verdict {
    VerdictKind kind = VerdictKind::Indeterminate;
    std::vector<std::string> reasons;
    std::string str() const;
};

// Hamiltonian vs non-Hamiltonian classification of a symplectic circle action
// from (n, k0) and the Chern numbers c1^n, c1^{n-2}c2:
//   k0 = 0 or k0 > n+1     -> non-Hamiltonian, both numbers must vanish;
//   k0 = n+1, k0 = n       -> two-element value sets, Hamiltonian iff nonzero;
//   k0 = n-1, k0 = n-2     -> a linear combination lies in a two-element set;
//   1 <= k0 < n-2          -> indeterminate (a one-sided vanishing test can
//                             still force non-Hamiltonian when H is known).
// Values outside the allowed sets -> Inconsistent.
Verdict classify_action(int n, int k0, const Rational& c1n,
                        std::optional<Rational> c1n2c2 = std::nullopt,
                        std::optional<Integer> N0 = std::nullopt);

// Same, with the full Hilbert polynomial available (enables the one-sided
// vanishing detector for small k0 and cross-checks the Chern numbers).
Verdict classify_action(const HilbertPoly& H, std::optional<Integer> N0 = std::nullopt);

// All Chern numbers of a low-dimensional space (n = 2,3,4) against their
// N_j-linear expressions, plus the k0-specific identities when an index is
// supplied.
ValidationReport lowdim_report(const S1Space& space, std::optional<int> k0 = std::nullopt);

} // namespace eqloc
