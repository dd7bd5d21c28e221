#include "eqloc/rational.hpp"

#include "eqloc/error.hpp"

namespace eqloc {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw input_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer as_integer(const Rational& q, const char* what) {
    if (!is_integer(q))
        throw check_error(std::string(what) + " is not an integer: " + to_string(q));
    return q.get_num();
}

Integer pow_integer(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (exp < 0) {
        if (base == 0) throw input_error("zero to a negative power");
        Rational inv = Rational(1) / base;
        return pow_rational(inv, -exp);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
    return r; // powers of a canonical fraction stay canonical
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational binomial_rational(const Rational& n, unsigned long k) {
    Rational r(1);
    for (unsigned long i = 0; i < k; ++i) r *= (n - Rational(static_cast<long>(i)));
    return r / Rational(factorial(k));
}

Integer binomial(const Integer& n, unsigned long k) {
    return as_integer(binomial_rational(Rational(n), k), "binomial");
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer parse_integer(const std::string& s) {
    try {
        return Integer(s);
    } catch (const std::invalid_argument&) {
        throw input_error("not an integer: '" + s + "'");
    }
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    return make_rational(num, den);
}

} // namespace eqloc
