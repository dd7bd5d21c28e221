#include "eqloc/rational_fn.hpp"

#include "eqloc/error.hpp"

namespace eqloc {

RationalFn::RationalFn(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw input_error("zero denominator");
    auto [sn, pn] = num.split();
    auto [sd, pd] = den.split();
    shift_ = num.is_zero() ? 0 : sn - sd;
    num_ = pn;
    den_ = pd;
    normalize();
}

RationalFn RationalFn::from_laurent(const LaurentPoly& f) {
    return RationalFn(f, LaurentPoly::constant(Rational(1)));
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        shift_ = 0;
        den_ = Poly::constant(Rational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    // strip powers of t reintroduced by cancellation
    auto strip = [](Poly& p, long& sh, int sign) {
        int k = 0;
        while (p.coeff(k) == 0) ++k;
        if (k > 0) {
            std::vector<Rational> v(p.coeffs().begin() + k, p.coeffs().end());
            p = Poly(std::move(v));
            sh += sign * k;
        }
    };
    strip(num_, shift_, +1);
    strip(den_, shift_, -1);
    Rational lead = den_.leading();
    if (lead != 1) {
        num_ = num_ * (Rational(1) / lead);
        den_ = den_ * (Rational(1) / lead);
    }
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long s = std::min(shift_, o.shift_);
    Poly a = num_ * Poly::monomial(Rational(1), static_cast<int>(shift_ - s)) * o.den_;
    Poly b = o.num_ * Poly::monomial(Rational(1), static_cast<int>(o.shift_ - s)) * den_;
    RationalFn r;
    r.shift_ = s;
    r.num_ = a + b;
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    RationalFn r;
    r.shift_ = shift_ + o.shift_;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

LaurentPoly RationalFn::to_laurent() const {
    if (!is_laurent()) throw check_error("not a Laurent polynomial");
    return LaurentPoly::from_poly(num_, shift_);
}

Rational RationalFn::eval(const Rational& t) const {
    Rational d = den_(t);
    if (d == 0) throw input_error("evaluation at a pole");
    if (t == 0 && shift_ != 0) {
        if (shift_ > 0) return Rational(0);
        throw input_error("evaluation at a pole");
    }
    Rational v = num_(t) / d;
    return (t == 0) ? v : v * pow_rational(t, shift_);
}

Rational RationalFn::limit_at(LimitPoint at) const {
    if (is_zero()) return Rational(0);
    if (at == LimitPoint::zero) {
        // t^shift * N/D with N(0), D(0) nonzero
        if (shift_ > 0) return Rational(0);
        if (shift_ == 0) return num_.coeff(0) / den_.coeff(0);
        throw check_error("unbounded limit");
    }
    long top = shift_ + num_.degree() - den_.degree();
    if (top < 0) return Rational(0);
    if (top == 0) return num_.leading() / den_.leading();
    throw check_error("unbounded limit");
}

RationalFn rfn_sum_normalize(const std::vector<RationalFn>& parts) {
    RationalFn acc;
    for (const auto& p : parts) acc = acc + p;
    return acc;
}

} // namespace eqloc
