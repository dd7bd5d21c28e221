#include "eqloc/poly.hpp"

#include <sstream>

#include "eqloc/error.hpp"

namespace eqloc {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
    static const Rational zero(0);
    return c_.empty() ? zero : c_.back();
}

Rational Poly::operator()(const Rational& z) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& s) const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x *= s;
    return Poly(std::move(v));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw input_error("division by zero polynomial");
    std::vector<Rational> rem(c_);
    int dd = divisor.degree();
    int dn = degree();
    if (dn < dd) return {Poly(), *this};
    std::vector<Rational> quot(static_cast<size_t>(dn - dd) + 1, Rational(0));
    for (int i = dn; i >= dd; --i) {
        Rational q = rem[static_cast<size_t>(i)] / divisor.leading();
        if (q == 0) continue;
        quot[static_cast<size_t>(i - dd)] = q;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(i - dd + j)] -= q * divisor.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::divide_exact(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw check_error("inexact polynomial division");
    return q;
}

bool Poly::divisible_by(const Poly& divisor) const {
    return divmod(divisor).second.is_zero();
}

Poly Poly::reflect(const Rational& s) const {
    // P(-z-s) via repeated binomial expansion of (-z-s)^k.
    Poly acc;
    Poly base({-s, Rational(-1)}); // -s - z
    Poly power = Poly::constant(Rational(1));
    for (size_t k = 0; k < c_.size(); ++k) {
        acc = acc + power * c_[k];
        power = power * base;
    }
    return acc;
}

Poly Poly::shift(const Rational& s) const {
    Poly acc;
    Poly base({s, Rational(1)}); // z + s
    Poly power = Poly::constant(Rational(1));
    for (size_t k = 0; k < c_.size(); ++k) {
        acc = acc + power * c_[k];
        power = power * base;
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        Rational a = abs(c);
        bool unit = (a == 1);
        if (i == 0 || !unit) out << to_string(a);
        if (i > 0) {
            if (!unit) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

namespace {

// Primitive integer image of a rational polynomial (content removed,
// positive leading coefficient).
std::vector<Integer> primitive_part(const Poly& p) {
    Integer den_lcm(1);
    for (const auto& c : p.coeffs()) {
        Integer d = c.get_den();
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    std::vector<Integer> v;
    v.reserve(p.coeffs().size());
    Integer content(0);
    for (const auto& c : p.coeffs()) {
        Integer z = c.get_num() * (den_lcm / c.get_den());
        content = gcd(content, z);
        v.push_back(z);
    }
    if (content == 0) return v;
    if (v.back() < 0) content = -content;
    for (auto& z : v) z /= content;
    return v;
}

void ztrim(std::vector<Integer>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void zprimitive(std::vector<Integer>& v) {
    Integer content(0);
    for (const auto& z : v) content = gcd(content, z);
    if (content == 0) return;
    if (v.back() < 0) content = -content;
    for (auto& z : v) z /= content;
}

// Pseudo-remainder of primitive integer polynomials.
std::vector<Integer> pseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Integer lead = a.back();
        Integer blead = b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < a.size(); ++i) a[i] *= blead;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= lead * b[i];
        ztrim(a);
    }
    return a;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    std::vector<Integer> x = primitive_part(a);
    std::vector<Integer> y = primitive_part(b);
    ztrim(x);
    ztrim(y);
    while (!y.empty()) {
        std::vector<Integer> r = pseudo_rem(x, y);
        zprimitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> v;
    v.reserve(x.size());
    for (const auto& z : x) v.emplace_back(z);
    return Poly(std::move(v)).monic();
}

Poly poly_interpolate(const std::vector<std::pair<Integer, Rational>>& points) {
    if (points.empty()) throw input_error("interpolation needs at least one point");
    const size_t m = points.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (points[i].first == points[j].first) throw input_error("duplicate node");

    // Newton divided differences.
    std::vector<Rational> dd(m);
    for (size_t i = 0; i < m; ++i) dd[i] = points[i].second;
    for (size_t level = 1; level < m; ++level)
        for (size_t i = m - 1; i >= level; --i) {
            Rational dx(points[i].first - points[i - level].first);
            dd[i] = (dd[i] - dd[i - 1]) / dx;
            if (i == level) break;
        }

    Poly result;
    Poly basis = Poly::constant(Rational(1));
    for (size_t i = 0; i < m; ++i) {
        result = result + basis * dd[i];
        basis = basis * Poly({Rational(-points[i].first), Rational(1)});
    }
    return result;
}

} // namespace eqloc
