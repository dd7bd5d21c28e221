#pragma once

#include <optional>

#include "eqloc/localization.hpp"
#include "eqloc/poly.hpp"
#include "eqloc/space.hpp"

namespace eqloc {

enum class HilbertSource { via_index, via_chern, closed_form, declared };

// Degree <= n polynomial whose integer values are the topological indices of
// the tensor powers of the line bundle with Chern class c1/k0, together with
// its context.
struct HilbertPoly {
    Poly coeffs;
    int n = 0;
    int k0 = 1;
    Integer N0;
    HilbertSource source = HilbertSource::declared;

    Rational operator()(const Rational& z) const { return coeffs(z); }
    int degree() const { return coeffs.degree(); }
    // c_1^h T_{n-h} [M] recovered from the coefficient of z^h.
    Rational chern_todd(int h) const;
    Rational c1n() const { return chern_todd(n); }
    Rational c1n2c2() const; // c_1^{n-2} c_2 [M]
};

// Numerator U and degree m of the generating function U(t)/(1-t)^{m+1}
// of the sequence H(0), H(1), ...
struct GenFnData {
    Poly U;
    int m = 0;
    int k0 = 1;
    Integer N0;
    bool identically_zero = false;
    ValidationReport checks;
};

struct EtaSolution {
    Integer c; // uniform residue of the c1 restrictions mod k0
    BundleRestriction eta;
};

// Finds the unique c in 0..k0-1 with sum(w_p) == c (mod k0) at every fixed
// point and sets eta(p) = (sum(w_p) - c)/k0.  No uniform residue ->
// check_error("no consistent residue"): the claimed k0 is incompatible with
// the weight data.
EtaSolution solve_eta(const S1Space& space, int k0);

// H(k) = topological index of e(k eta), interpolated from k = 0..n and
// verified against further index evaluations on -n..-1 and n+1..2n.
HilbertPoly hilbert_via_index(const S1Space& space, int k0);

// Coefficients a_h = c1^h T_{n-h}[M] / (k0^h h!) straight from localization.
HilbertPoly hilbert_via_chern(const S1Space& space, int k0);

// Runs both constructions and checks they agree coefficientwise.
HilbertPoly hilbert_both(const S1Space& space, int k0);

// Zeros at -1..-k0+1, reciprocity, parity, the -k0/2 root (and its
// multiplicity in the even/even case), the degree bounds, H(0) = N0 and
// integrality on -2n..2n.  Violations are reported, not thrown.
ValidationReport check_rigidity(const HilbertPoly& H);

GenFnData generating_function(const HilbertPoly& H);

struct ClosedForm {
    HilbertPoly H;
    Rational c1n;
    Rational c1n2c2;
    std::optional<Rational> b; // generating-function parameter, when meaningful
    std::optional<Rational> a; // root-position parameter, when recoverable
};

// Closed forms for k0 in {n-2, n-1, n, n+1}.  For k0 in {n-1, n-2} with
// N0 != 0 the parameter is b (with b*N0 integral); with N0 == 0 it is the
// leading-coefficient parameter gamma.  Other k0 -> input_error("no closed form").
ClosedForm closed_form(int n, int k0, const Integer& N0,
                       std::optional<Rational> param = std::nullopt);

// Linear relation tying c1^{n-2}c2 to c1^n for k0 = n-1 (n >= 2) and
// k0 = n-2 (n >= 3).
bool chern_relation_check(int n, int k0, const Rational& c1n, const Rational& c1n2c2,
                          const Integer& N0);

// Hilbert polynomial of CP^n: prod_{j=1..n}(z+j)/n!.
Poly hilbert_cpn(int n);

} // namespace eqloc
