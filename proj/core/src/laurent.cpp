#include "eqloc/laurent.hpp"

#include <sstream>

#include "eqloc/error.hpp"

namespace eqloc {

LaurentPoly LaurentPoly::term(const Rational& c, long exponent) {
    LaurentPoly f;
    f.add_term(exponent, c);
    return f;
}

LaurentPoly LaurentPoly::from_poly(const Poly& p, long shift) {
    LaurentPoly f;
    for (int i = 0; i <= p.degree(); ++i) f.add_term(shift + i, p.coeff(i));
    return f;
}

Rational LaurentPoly::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw input_error("min_exp of zero Laurent polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw input_error("max_exp of zero Laurent polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(long e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly f = *this;
    for (const auto& [e, c] : o.terms_) f.add_term(e, c);
    return f;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly f;
    for (const auto& [e, c] : terms_) f.terms_.emplace(e, -c);
    return f;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly f;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) f.add_term(e1 + e2, c1 * c2);
    return f;
}

LaurentPoly LaurentPoly::operator*(const Rational& s) const {
    if (s == 0) return {};
    LaurentPoly f;
    for (const auto& [e, c] : terms_) f.terms_.emplace(e, c * s);
    return f;
}

LaurentPoly LaurentPoly::shifted(long e) const {
    LaurentPoly f;
    for (const auto& [e0, c] : terms_) f.terms_.emplace(e0 + e, c);
    return f;
}

Rational LaurentPoly::at_one() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::pair<long, Poly> LaurentPoly::split() const {
    if (is_zero()) return {0, Poly()};
    long lo = min_exp();
    std::vector<Rational> v(static_cast<size_t>(max_exp() - lo) + 1, Rational(0));
    for (const auto& [e, c] : terms_) v[static_cast<size_t>(e - lo)] = c;
    return {lo, Poly(std::move(v))};
}

std::pair<bool, LaurentPoly> LaurentPoly::divide_one_minus_tw(long w) const {
    if (w <= 0) throw input_error("divisor exponent must be positive");
    if (is_zero()) return {true, LaurentPoly()};
    auto [lo, p] = split();
    int d = p.degree();
    if (d < w) return {false, LaurentPoly()};
    // (1 - t^w) * q = p gives q_i = p_i + q_{i-w}; the top w coefficients of p
    // must then satisfy p_i = -q_{i-w}.
    std::vector<Rational> q(static_cast<size_t>(d - w) + 1, Rational(0));
    for (int i = 0; i <= d - w; ++i) {
        Rational prev = (i >= w) ? q[static_cast<size_t>(i - w)] : Rational(0);
        q[static_cast<size_t>(i)] = p.coeff(i) + prev;
    }
    for (int i = d - w + 1; i <= d; ++i) {
        Rational prev = (i >= w) ? q[static_cast<size_t>(i - w)] : Rational(0);
        if (p.coeff(i) != -prev) return {false, LaurentPoly()};
    }
    return {true, from_poly(Poly(std::move(q)), lo)};
}

std::string LaurentPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        Rational a = abs(c);
        bool unit = (a == 1);
        if (e == 0 || !unit) out << to_string(a);
        if (e != 0) {
            if (!unit) out << "*";
            out << var;
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

} // namespace eqloc
