#pragma once

#include <utility>
#include <vector>

#include "eqloc/rational.hpp"

namespace eqloc {

// Dense univariate polynomial over the exact rationals, indexed by degree.
// Invariant: the coefficient vector is empty (the zero polynomial) or its
// last entry is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& leading() const;

    Rational operator()(const Rational& z) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    bool operator==(const Poly& o) const = default;

    Poly derivative() const;

    // Field division with remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    // Exact quotient; throws check_error if the division leaves a remainder.
    Poly divide_exact(const Poly& divisor) const;
    bool divisible_by(const Poly& divisor) const;

    // P(-z - s): reflection through -s/2.
    Poly reflect(const Rational& s) const;
    // P(z + s)
    Poly shift(const Rational& s) const;

    Poly monic() const;

    std::string str(const std::string& var = "z") const;

private:
    std::vector<Rational> c_;
    void trim();
};

// gcd over Q, computed on the primitive integer parts (primitive-part
// Euclidean algorithm); result is monic, gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// Unique polynomial of degree < #points through the given nodes.
// Duplicate abscissae -> input_error("duplicate node").
Poly poly_interpolate(const std::vector<std::pair<Integer, Rational>>& points);

} // namespace eqloc
