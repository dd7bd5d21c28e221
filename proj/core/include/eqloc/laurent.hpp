#pragma once

#include <map>
#include <string>

#include "eqloc/poly.hpp"
#include "eqloc/rational.hpp"

namespace eqloc {

// Sparse Laurent polynomial in t: exponent (possibly negative) -> coefficient.
// Invariant: no stored zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly term(const Rational& c, long exponent);
    static LaurentPoly constant(const Rational& c) { return term(c, 0); }
    static LaurentPoly from_poly(const Poly& p, long shift = 0);

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Rational>& terms() const { return terms_; }
    Rational coeff(long e) const;
    long min_exp() const; // throws on zero
    long max_exp() const;

    void add_term(long e, const Rational& c);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rational& s) const;
    LaurentPoly shifted(long e) const; // multiply by t^e
    bool operator==(const LaurentPoly& o) const = default;

    // Sum of coefficients = evaluation at t = 1.
    Rational at_one() const;

    // f = t^shift * P(t) with P(0) != 0 (or P = 0, shift = 0).
    std::pair<long, Poly> split() const;

    // Exact division by (1 - t^w), w > 0; nullopt if not divisible.
    // Used to cancel Atiyah-Segal denominators factor by factor.
    std::pair<bool, LaurentPoly> divide_one_minus_tw(long w) const;

    std::string str(const std::string& var = "t") const;

private:
    std::map<long, Rational> terms_;
};

} // namespace eqloc
