#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "eqloc/hilbert.hpp"

namespace eqloc {

struct ApproxRoot {
    std::complex<double> value;
    bool exact = false;   // position certified by exact arithmetic
    std::string note;     // e.g. "real pair -k0/2 +- sqrt(u)", "numeric"
};

// Root locus of a Hilbert polynomial relative to the cross C_{k0}
// (real axis union Re z = -k0/2), the open strip -k0 < Re z < 0, and the
// family T_{k0} = prod_{j=1}^{k0-1}(z+j) * (factor with roots on Re = -k0/2).
struct RootReport {
    std::map<Integer, int> integer_roots;       // value -> multiplicity
    std::map<Rational, int> rational_roots;     // non-integer rational roots
    int half_root_mult = 0;                     // multiplicity of -k0/2 in H
    std::vector<ApproxRoot> residual_roots;     // remaining roots, with conjugates
    bool on_cross = false;
    bool in_strip = false;
    bool in_T_family = false;
    bool cassini_checked = false;

    int total_roots() const;
    std::string str() const;
};

// Exact deflation of the mandated roots (-1..-k0+1 and -k0/2 when the parity
// forces it), exact classification of symmetric residuals of degree <= 4 via
// u = (z + k0/2)^2, numeric fallback beyond that.  A missing mandated root is
// a rigidity violation and throws check_error.
RootReport root_analysis(const HilbertPoly& H);

} // namespace eqloc
