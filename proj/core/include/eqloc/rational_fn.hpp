#pragma once

#include <vector>

#include "eqloc/laurent.hpp"

namespace eqloc {

enum class LimitPoint { zero, infinity };

// Quotient of Laurent polynomials in normal form:
//
//   f = t^shift * N(t) / D(t)
//
// with D monic, D(0) != 0, N zero or N(0) != 0, gcd(N, D) = 1.
// This is the value domain of the Atiyah-Segal fixed point formula.
class RationalFn {
public:
    RationalFn() : shift_(0), num_(), den_(Poly::constant(Rational(1))) {}
    RationalFn(const LaurentPoly& num, const LaurentPoly& den);
    static RationalFn from_laurent(const LaurentPoly& f);

    bool is_zero() const { return num_.is_zero(); }
    long shift() const { return shift_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-() const;
    RationalFn operator*(const RationalFn& o) const;
    bool operator==(const RationalFn& o) const = default;

    bool is_laurent() const { return den_.degree() == 0; }
    // Exact Laurent polynomial; throws check_error("not a Laurent polynomial")
    // if the normalized denominator is not a unit monomial.
    LaurentPoly to_laurent() const;

    // Exact evaluation away from poles.
    Rational eval(const Rational& t) const;

    // Limit as t -> 0 or t -> infinity; throws check_error("unbounded limit")
    // if infinite.
    Rational limit_at(LimitPoint at) const;

private:
    long shift_;
    Poly num_, den_;
    void normalize();
};

// Exact common-denominator sum in normal form.
RationalFn rfn_sum_normalize(const std::vector<RationalFn>& parts);

} // namespace eqloc
