#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace eqloc {

// All core computations run over exact arbitrary-precision rationals.
// Values are kept canonical at all times: lowest terms, positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;

// Canonicalized rational num/den.  Throws input_error on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Exact integer value of q; throws check_error if q is not an integer.
Integer as_integer(const Rational& q, const char* what = "value");

Integer pow_integer(const Integer& base, unsigned long exp);
Rational pow_rational(const Rational& base, long exp);

Integer factorial(unsigned long n);
// binomial(n, k) for arbitrary integer n and k >= 0: n(n-1)...(n-k+1)/k!
Rational binomial_rational(const Rational& n, unsigned long k);
Integer binomial(const Integer& n, unsigned long k);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

Integer parse_integer(const std::string& s);
Rational parse_rational(const std::string& s); // accepts "a" or "a/b"

} // namespace eqloc
