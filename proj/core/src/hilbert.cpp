#include "eqloc/hilbert.hpp"

#include <sstream>

#include "eqloc/error.hpp"
#include "eqloc/symmetric.hpp"

namespace eqloc {

Rational HilbertPoly::chern_todd(int h) const {
    if (h < 0 || h > n) throw input_error("h out of range");
    return coeffs.coeff(h) * Rational(pow_integer(Integer(k0), static_cast<unsigned long>(h))) *
           Rational(factorial(static_cast<unsigned long>(h)));
}

Rational HilbertPoly::c1n2c2() const {
    if (n < 2) throw input_error("c1^{n-2}c2 needs n >= 2");
    // a_{n-2} = (c1^n + c1^{n-2}c2)/(12 k0^{n-2} (n-2)!)
    return chern_todd(n - 2) * Rational(12) - c1n();
}

EtaSolution solve_eta(const S1Space& space, int k0) {
    if (k0 < 1) throw input_error("k0 must be positive");
    WeightProfile wp = weight_profile(space);
    Integer modulus(k0);
    bool have = false;
    Integer c;
    EtaSolution sol;
    for (const auto& p : space.points) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), wp.c1_restriction.at(p.id).get_mpz_t(), modulus.get_mpz_t());
        if (!have) {
            c = r;
            have = true;
        } else if (r != c) {
            throw check_error("no consistent residue");
        }
    }
    sol.c = c;
    for (const auto& p : space.points)
        sol.eta.a[p.id] = (wp.c1_restriction.at(p.id) - c) / modulus;
    return sol;
}

HilbertPoly hilbert_via_index(const S1Space& space, int k0) {
    EtaSolution sol = solve_eta(space, k0);
    const int n = space.n;

    auto H_at = [&](long k) {
        return index_at_one(space, scale_bundle(sol.eta, Integer(k)));
    };

    std::vector<std::pair<Integer, Rational>> nodes;
    for (long k = 0; k <= n; ++k) nodes.emplace_back(Integer(k), Rational(H_at(k)));
    Poly H = poly_interpolate(nodes);

    for (long k = -n; k <= 2 * n; ++k) {
        if (k >= 0 && k <= n) continue;
        if (H(Rational(k)) != Rational(H_at(k)))
            throw check_error("index values not polynomial");
    }

    WeightProfile wp = weight_profile(space);
    return HilbertPoly{H, n, k0, Integer(wp.N[0]), HilbertSource::via_index};
}

HilbertPoly hilbert_via_chern(const S1Space& space, int k0) {
    if (k0 < 1) throw input_error("k0 must be positive");
    const int n = space.n;
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
    for (int h = 0; h <= n; ++h)
        coeffs[static_cast<size_t>(h)] =
            mixed_chern_todd(space, h) /
            (Rational(pow_integer(Integer(k0), static_cast<unsigned long>(h))) *
             Rational(factorial(static_cast<unsigned long>(h))));
    WeightProfile wp = weight_profile(space);
    return HilbertPoly{Poly(std::move(coeffs)), n, k0, Integer(wp.N[0]),
                       HilbertSource::via_chern};
}

HilbertPoly hilbert_both(const S1Space& space, int k0) {
    HilbertPoly a = hilbert_via_index(space, k0);
    HilbertPoly b = hilbert_via_chern(space, k0);
    if (!(a.coeffs == b.coeffs))
        throw check_error("Hilbert polynomial mismatch between index and Chern routes: " +
                          a.coeffs.str() + " vs " + b.coeffs.str());
    return a;
}

namespace {

// Multiplicity of the root r in P.
int root_multiplicity(const Poly& P, const Rational& r) {
    Poly factor({-r, Rational(1)});
    Poly q = P;
    int m = 0;
    while (!q.is_zero() && q(r) == 0) {
        q = q.divide_exact(factor);
        ++m;
    }
    return m;
}

} // namespace

ValidationReport check_rigidity(const HilbertPoly& H) {
    if (H.k0 < 1) throw input_error("k0 must be positive");
    ValidationReport rep;
    const Poly& P = H.coeffs;
    const bool zero = P.is_zero();
    const int n = H.n;
    const int k0 = H.k0;

    rep.findings.push_back({"H(0) = N_0",
                            "H(0) = " + to_string(P(Rational(0))) + ", N_0 = " + to_string(H.N0),
                            P(Rational(0)) == Rational(H.N0)});

    for (int j = 1; j <= k0 - 1; ++j) {
        Rational v = P(Rational(-j));
        rep.findings.push_back({"index rigidity zero at k = -" + std::to_string(j),
                                "H(-" + std::to_string(j) + ") = " + to_string(v), v == 0});
    }

    {
        Poly reflected = (n % 2 == 0) ? P.reflect(Rational(k0)) : -P.reflect(Rational(k0));
        rep.findings.push_back({"reciprocity H(z) = (-1)^n H(-k0-z)",
                                zero ? "H = 0" : "reflected = " + reflected.str(),
                                P == reflected});
    }

    {
        bool ok = zero || ((P.degree() % 2) == (n % 2));
        rep.findings.push_back({"parity deg(H) = n mod 2",
                                "deg(H) = " + std::to_string(P.degree()), ok});
    }

    if ((n - k0) % 2 == 0) {
        Rational half = Rational(-k0) / Rational(2);
        Rational v = P(half);
        rep.findings.push_back({"zero at -k0/2", "H(-k0/2) = " + to_string(v), v == 0});
        if (!zero && n % 2 == 0 && k0 % 2 == 0) {
            int mult = root_multiplicity(P, half);
            rep.findings.push_back({"root -k0/2 has multiplicity >= 2",
                                    "multiplicity = " + std::to_string(mult), mult >= 2});
        }
    }

    if (!zero) {
        rep.findings.push_back({"index bound k0 <= deg(H) + 1",
                                "k0 = " + std::to_string(k0) +
                                    ", deg(H) = " + std::to_string(P.degree()),
                                k0 <= P.degree() + 1});
        if (H.N0 == 0)
            rep.findings.push_back({"index bound k0 <= deg(H) - 1 (N_0 = 0)",
                                    "k0 = " + std::to_string(k0) +
                                        ", deg(H) = " + std::to_string(P.degree()),
                                    k0 <= P.degree() - 1});
    }

    {
        bool ok = true;
        std::string bad;
        for (int k = -2 * n; k <= 2 * n; ++k) {
            if (!is_integer(P(Rational(k)))) {
                ok = false;
                bad = "H(" + std::to_string(k) + ") = " + to_string(P(Rational(k)));
                break;
            }
        }
        rep.findings.push_back({"integer values on -2n..2n", ok ? "all integral" : bad, ok});
    }

    return rep;
}

GenFnData generating_function(const HilbertPoly& H) {
    GenFnData g;
    g.k0 = H.k0;
    g.N0 = H.N0;
    if (H.coeffs.is_zero()) {
        g.identically_zero = true;
        g.m = 0;
        g.U = Poly();
        g.checks.findings.push_back({"U(0) = N_0", "U = 0, N_0 = " + to_string(H.N0),
                                     H.N0 == 0});
        return g;
    }
    const int m = H.coeffs.degree();
    g.m = m;
    const int e_max = m + 1 - H.k0; // provable degree bound for U

    // u_i = sum_{j<=i} (-1)^j C(m+1, j) H(i-j); coefficients beyond e_max
    // must vanish, verified up to i = m+2.
    std::vector<Rational> u;
    bool tail_ok = true;
    for (int i = 0; i <= std::max(m + 2, e_max); ++i) {
        Rational acc(0);
        for (int j = 0; j <= std::min(i, m + 1); ++j) {
            Rational term = Rational(binomial(Integer(m + 1), static_cast<unsigned long>(j))) *
                            H.coeffs(Rational(i - j));
            acc += (j % 2 == 0) ? term : -term;
        }
        if (i <= e_max) {
            u.push_back(acc);
        } else if (acc != 0) {
            tail_ok = false;
        }
    }
    if (e_max < 0) u.clear();
    g.U = Poly(u);
    g.checks.findings.push_back(
        {"generating function numerator terminates", tail_ok ? "coefficients vanish beyond m+1-k0" : "nonzero coefficient past m+1-k0",
         tail_ok});

    g.checks.findings.push_back({"U(0) = N_0",
                                 "U(0) = " + to_string(g.U(Rational(0))) +
                                     ", N_0 = " + to_string(H.N0),
                                 g.U(Rational(0)) == Rational(H.N0)});

    { // palindrome law U(t^{-1}) = t^{k0-m-1} U(t): u_i = u_{m+1-k0-i}
        bool ok = e_max >= 0;
        for (int i = 0; ok && i <= e_max; ++i)
            if (g.U.coeff(i) != g.U.coeff(e_max - i)) ok = false;
        g.checks.findings.push_back(
            {"palindromic numerator", "U = " + g.U.str("t"), ok});
    }

    { // degree window and the N0 criterion for attaining the top
        int e = g.U.degree();
        bool window = !g.U.is_zero() && 2 * e >= e_max && e <= e_max;
        g.checks.findings.push_back(
            {"degree window (m+1-k0)/2 <= deg U <= m+1-k0",
             "deg U = " + std::to_string(e) + ", m+1-k0 = " + std::to_string(e_max), window});
        bool top = (e == e_max) == (H.N0 != 0);
        g.checks.findings.push_back(
            {"deg U = m+1-k0 exactly when N_0 != 0",
             "deg U = " + std::to_string(e) + ", N_0 = " + to_string(H.N0), top});
    }

    return g;
}

Poly hilbert_cpn(int n) {
    Poly H = Poly::constant(Rational(1));
    for (int j = 1; j <= n; ++j) H = H * Poly({Rational(j), Rational(1)});
    return H * (Rational(1) / Rational(factorial(static_cast<unsigned long>(n))));
}

namespace {

// C(z+n, n) as a polynomial in z.
Poly binomial_poly(int n) {
    return hilbert_cpn(n);
}

HilbertPoly make_H(Poly P, int n, int k0, const Integer& N0) {
    return HilbertPoly{std::move(P), n, k0, N0, HilbertSource::closed_form};
}

} // namespace

ClosedForm closed_form(int n, int k0, const Integer& N0, std::optional<Rational> param) {
    if (n < 1) throw input_error("n must be positive");
    ClosedForm out;
    const Rational N0q(N0);

    if (k0 == n + 1) {
        Poly H = hilbert_cpn(n) * N0q;
        out.H = make_H(H, n, k0, N0);
        out.c1n = N0q * Rational(pow_integer(Integer(n + 1), static_cast<unsigned long>(n)));
        out.c1n2c2 = N0q * Rational(n) *
                     Rational(pow_integer(Integer(n + 1), static_cast<unsigned long>(n - 1))) /
                     Rational(2);
        return out;
    }

    if (k0 == n && n >= 2) {
        Poly H = Poly({Rational(n) / Rational(2), Rational(1)});
        for (int j = 1; j <= n - 1; ++j) H = H * Poly({Rational(j), Rational(1)});
        H = H * (Rational(2) * N0q / Rational(factorial(static_cast<unsigned long>(n))));
        out.H = make_H(H, n, k0, N0);
        out.c1n = N0q * 2 * Rational(pow_integer(Integer(n), static_cast<unsigned long>(n)));
        out.c1n2c2 = N0q *
                     Rational(pow_integer(Integer(n), static_cast<unsigned long>(n - 2))) *
                     Rational(n * n - n + 2);
        return out;
    }

    if ((k0 == n - 1 && n >= 2) || (k0 == n - 2 && n >= 3)) {
        if (!param) throw input_error("parameter required (b for N0 != 0, gamma for N0 = 0)");
        if (N0 != 0) {
            const Rational b = *param;
            if (!is_integer(b * N0q)) throw input_error("b*N0 must be an integer");
            Poly B = binomial_poly(n);
            Poly H;
            if (k0 == n - 1) {
                H = (B.shift(Rational(-2)) + B.shift(Rational(-1)) * b + B) * N0q;
                out.c1n = N0q * (b + 2) *
                          Rational(pow_integer(Integer(n - 1), static_cast<unsigned long>(n)));
                out.c1n2c2 =
                    N0q *
                    Rational(pow_integer(Integer(n - 1), static_cast<unsigned long>(n - 2))) *
                    (Rational(12) + (b + 2) * Rational(n) * Rational(n - 3) / Rational(2));
            } else {
                H = (B.shift(Rational(-3)) + B.shift(Rational(-2)) * b +
                     B.shift(Rational(-1)) * b + B) *
                    N0q;
                out.c1n = N0q * 2 * (b + 1) *
                          Rational(pow_integer(Integer(n - 2), static_cast<unsigned long>(n)));
                out.c1n2c2 =
                    N0q *
                    Rational(pow_integer(Integer(n - 2), static_cast<unsigned long>(n - 2))) *
                    (Rational(24) + (b + 1) * Rational(n - 2) * Rational(n - 3));
            }
            out.H = make_H(H, n, k0, N0);
            out.b = b;
            if (out.c1n != 0) {
                // c1^n = 4 N0 n (n-1)^{n+1} / ((n-1)^2 - 4a), and the n-2 analogue
                Rational k(k0);
                Rational top;
                if (k0 == n - 1)
                    top = Rational(4) * N0q * Rational(n) *
                          Rational(pow_integer(Integer(n - 1), static_cast<unsigned long>(n + 1)));
                else
                    top = Rational(8) * N0q * Rational(n) * Rational(n - 1) *
                          Rational(pow_integer(Integer(n - 2), static_cast<unsigned long>(n)));
                out.a = Rational((k * k - top / out.c1n) / Rational(4));
            }
            return out;
        }
        // N0 = 0: parameter is the leading coefficient gamma
        const Rational gamma = *param;
        if (!is_integer(gamma * Rational(factorial(static_cast<unsigned long>(n)))))
            throw input_error("gamma*n! must be an integer");
        Poly H = Poly::constant(gamma);
        if (k0 == n - 1) {
            for (int j = 0; j <= n - 1; ++j) H = H * Poly({Rational(j), Rational(1)});
            out.c1n = gamma * Rational(pow_integer(Integer(n - 1), static_cast<unsigned long>(n))) *
                      Rational(factorial(static_cast<unsigned long>(n)));
            out.c1n2c2 = Rational(n) * Rational(n - 3) / (Rational(2) * Rational(n - 1) * Rational(n - 1)) *
                         out.c1n;
        } else {
            H = H * Poly({Rational(n - 2) / Rational(2), Rational(1)});
            for (int j = 0; j <= n - 2; ++j) H = H * Poly({Rational(j), Rational(1)});
            out.c1n = gamma * Rational(pow_integer(Integer(n - 2), static_cast<unsigned long>(n))) *
                      Rational(factorial(static_cast<unsigned long>(n)));
            out.c1n2c2 = Rational(n - 3) / (Rational(2) * Rational(n - 2)) * out.c1n;
        }
        out.H = make_H(H, n, k0, N0);
        return out;
    }

    throw input_error("no closed form");
}

bool chern_relation_check(int n, int k0, const Rational& c1n, const Rational& c1n2c2,
                          const Integer& N0) {
    if (k0 == n - 1) {
        if (n < 2) throw input_error("k0 = n-1 relation needs n >= 2");
        Rational lhs = c1n2c2 - Rational(n) * Rational(n - 3) /
                                    (Rational(2) * Rational(n - 1) * Rational(n - 1)) * c1n;
        return lhs == Rational(N0) * 12 *
                          Rational(pow_integer(Integer(n - 1), static_cast<unsigned long>(n - 2)));
    }
    if (k0 == n - 2) {
        if (n < 3) throw input_error("k0 = n-2 relation needs n >= 3");
        Rational lhs = c1n2c2 - Rational(n - 3) / (Rational(2) * Rational(n - 2)) * c1n;
        return lhs == Rational(N0) * 24 *
                          Rational(pow_integer(Integer(n - 2), static_cast<unsigned long>(n - 2)));
    }
    throw input_error("relation defined only for k0 = n-1 or n-2");
}

} // namespace eqloc
