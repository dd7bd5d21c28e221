#include "eqloc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eqloc/error.hpp"

namespace eqloc {

namespace {

constexpr double kTol = 1e-9;

int root_mult_deflate(Poly& P, const Rational& r) {
    Poly factor({-r, Rational(1)});
    int m = 0;
    while (!P.is_zero() && P(r) == 0) {
        P = P.divide_exact(factor);
        ++m;
    }
    return m;
}

bool rational_sqrt(const Rational& q, Rational& out) {
    if (q < 0) return false;
    Integer num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    out = make_rational(sn, sd);
    return true;
}

std::complex<double> eval_complex(const Poly& P, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (int i = P.degree(); i >= 0; --i) acc = acc * z + P.coeff(i).get_d();
    return acc;
}

// Durand-Kerner on a monic polynomial.
std::vector<std::complex<double>> durand_kerner(const Poly& P) {
    int d = P.degree();
    std::vector<std::complex<double>> z(static_cast<size_t>(d));
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    for (int i = 0; i < d; ++i) {
        acc *= seed;
        z[static_cast<size_t>(i)] = acc;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (int i = 0; i < d; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (int j = 0; j < d; ++j)
                if (j != i) denom *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            std::complex<double> delta = eval_complex(P, z[static_cast<size_t>(i)]) / denom;
            z[static_cast<size_t>(i)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-13) break;
    }
    return z;
}

} // namespace

int RootReport::total_roots() const {
    int t = 0;
    for (const auto& [r, m] : integer_roots) t += m;
    for (const auto& [r, m] : rational_roots) t += m;
    t += static_cast<int>(residual_roots.size());
    return t;
}

std::string RootReport::str() const {
    std::ostringstream out;
    out << "roots:";
    for (const auto& [r, m] : integer_roots)
        for (int i = 0; i < m; ++i) out << " " << to_string(r);
    for (const auto& [r, m] : rational_roots)
        for (int i = 0; i < m; ++i) out << " " << to_string(r);
    for (const auto& a : residual_roots) {
        out << " (" << a.value.real();
        if (a.value.imag() != 0) out << (a.value.imag() > 0 ? "+" : "-") << std::abs(a.value.imag()) << "i";
        out << (a.exact ? ")" : ")~");
    }
    out << "\n  multiplicity of -k0/2: " << half_root_mult;
    out << "\n  on cross: " << (on_cross ? "yes" : "no")
        << ", in strip: " << (in_strip ? "yes" : "no")
        << ", in T family: " << (in_T_family ? "yes" : "no");
    if (cassini_checked) out << ", Cassini relation verified";
    out << "\n";
    return out.str();
}

RootReport root_analysis(const HilbertPoly& H) {
    if (H.coeffs.is_zero()) throw input_error("root analysis of the zero polynomial");
    const int n = H.n;
    const int k0 = H.k0;
    RootReport rep;

    Poly R = H.coeffs.monic();
    const Rational half = Rational(-k0) / Rational(2);

    // exact deflation of all integer roots within the Cauchy bound
    {
        Rational bound(1);
        for (int i = 0; i < R.degree(); ++i) bound = std::max(bound, Rational(abs(R.coeff(i))));
        bound += 1;
        if (bound <= 100000) {
            long b = static_cast<long>(bound.get_d()) + 1;
            for (long r = -b; r <= b; ++r) {
                if (R.is_zero() || R.degree() == 0) break;
                int m = root_mult_deflate(R, Rational(r));
                if (m > 0) rep.integer_roots[Integer(r)] = m;
            }
        } else {
            for (long r = 0; r >= -static_cast<long>(k0); --r) {
                int m = root_mult_deflate(R, Rational(r));
                if (m > 0) rep.integer_roots[Integer(r)] = m;
            }
        }
    }
    { // -k0/2 when half-integral
        if (k0 % 2 == 1) {
            int m = root_mult_deflate(R, half);
            if (m > 0) rep.rational_roots[half] = m;
        }
    }

    auto mult_of = [&](const Rational& r) {
        if (is_integer(r)) {
            auto it = rep.integer_roots.find(r.get_num());
            return it == rep.integer_roots.end() ? 0 : it->second;
        }
        auto it = rep.rational_roots.find(r);
        return it == rep.rational_roots.end() ? 0 : it->second;
    };

    // mandated zeros
    for (int j = 1; j <= k0 - 1; ++j)
        if (mult_of(Rational(-j)) < 1)
            throw check_error("rigidity violation: missing root at z = -" + std::to_string(j));
    if ((n - k0) % 2 == 0) {
        rep.half_root_mult = mult_of(half);
        int needed = (n % 2 == 0 && k0 % 2 == 0) ? 2 : 1;
        if (rep.half_root_mult < needed)
            throw check_error("rigidity violation: root at z = -k0/2 has multiplicity " +
                              std::to_string(rep.half_root_mult) + ", needs >= " +
                              std::to_string(needed));
    } else {
        rep.half_root_mult = mult_of(half);
    }

    // classify what exact deflation already found
    bool cross = true, strip = true, t_line = true; // t_line: non-mandated roots on Re=-k0/2
    auto classify_rational = [&](const Rational& r, int mult, bool integer_root) {
        if (!(Rational(-k0) < r && r < 0)) strip = false;
        int extra = mult;
        if (integer_root && r < 0 && r > Rational(-k0)) {
            // one copy of each mandated integer root belongs to the T-family prefix
            Integer ri = r.get_num();
            if (is_integer(r) && ri >= Integer(-(k0 - 1)) && ri <= Integer(-1)) extra -= 1;
        }
        if (extra > 0 && r != half) t_line = false;
    };
    for (const auto& [r, m] : rep.integer_roots) classify_rational(Rational(r), m, true);
    for (const auto& [r, m] : rep.rational_roots) classify_rational(r, m, false);

    // residual factor: no rational roots remain
    if (R.degree() > 0) {
        Poly reflected = (R.degree() % 2 == 0) ? R.reflect(Rational(k0)) : -R.reflect(Rational(k0));
        bool symmetric = (R == reflected);

        bool handled = false;
        if (symmetric && R.degree() % 2 == 0 && R.degree() <= 4) {
            // T(z) = R(z - k0/2) is even; write R = S(u), u = (z + k0/2)^2.
            Poly T = R.shift(half);
            std::vector<Rational> s(static_cast<size_t>(R.degree() / 2) + 1);
            bool even = true;
            for (int i = 0; i <= T.degree(); ++i) {
                if (i % 2 == 0) s[static_cast<size_t>(i / 2)] = T.coeff(i);
                else if (T.coeff(i) != 0) even = false;
            }
            if (even) {
                Poly S{std::vector<Rational>(s)};
                std::vector<std::pair<Rational, bool>> u_exact; // (value, is_exact)
                if (S.degree() == 1) {
                    u_exact.emplace_back(-S.coeff(0) / S.coeff(1), true);
                } else { // degree 2
                    Rational A = S.coeff(2), B = S.coeff(1), C = S.coeff(0);
                    Rational disc = B * B - 4 * A * C;
                    Rational sq;
                    if (rational_sqrt(disc, sq)) {
                        u_exact.emplace_back((-B + sq) / (2 * A), true);
                        u_exact.emplace_back((-B - sq) / (2 * A), true);
                    } else if (disc > 0) {
                        // real irrational u-roots: the roots of R are on the cross,
                        // and the strip condition is decided by exact sign data
                        double sd = std::sqrt(disc.get_d());
                        double a2 = 2 * A.get_d();
                        double hc = -k0 / 2.0;
                        for (double u : {(-B.get_d() + sd) / a2, (-B.get_d() - sd) / a2}) {
                            if (u >= 0) {
                                double r0 = std::sqrt(u);
                                rep.residual_roots.push_back({{hc + r0, 0.0}, true, "real, on cross"});
                                rep.residual_roots.push_back({{hc - r0, 0.0}, true, "real, on cross"});
                                t_line = false;
                            } else {
                                double y = std::sqrt(-u);
                                rep.residual_roots.push_back({{hc, y}, true, "on Re = -k0/2"});
                                rep.residual_roots.push_back({{hc, -y}, true, "on Re = -k0/2"});
                            }
                        }
                        // strip holds iff every nonnegative u-root is < k0^2/4:
                        // equivalently S keeps its leading sign at k0^2/4 and the
                        // vertex sits left of it, or both roots are negative.
                        {
                            Rational q = Rational(k0) * Rational(k0) / Rational(4);
                            Rational vertex = -B / (2 * A);
                            bool all_below = (S(q) * A > 0 && vertex < q);
                            if (!all_below) strip = false;
                        }
                        handled = true;
                    } else { // disc < 0: u = p +- i q, quadruple off the cross
                        Rational p = -B / (2 * A);
                        Rational q2 = -disc / (4 * A * A); // (im part)^2
                        double pq = p.get_d(), qq = std::sqrt(q2.get_d());
                        // z = -k0/2 +- sqrt(u)
                        std::complex<double> u(pq, qq);
                        std::complex<double> s0 = std::sqrt(u);
                        double hc = -k0 / 2.0;
                        rep.residual_roots.push_back({{hc + s0.real(), s0.imag()}, true, "off cross"});
                        rep.residual_roots.push_back({{hc + s0.real(), -s0.imag()}, true, "off cross"});
                        rep.residual_roots.push_back({{hc - s0.real(), s0.imag()}, true, "off cross"});
                        rep.residual_roots.push_back({{hc - s0.real(), -s0.imag()}, true, "off cross"});
                        cross = false;
                        t_line = false;
                        // in strip iff |Re sqrt(u)| < k0/2 iff |u| < (k0^2/2 - p),
                        // squared to stay rational
                        Rational rhs = Rational(k0) * Rational(k0) / Rational(2) - p;
                        bool inside = rhs > 0 && (p * p + q2 < rhs * rhs);
                        if (!inside) strip = false;
                        // Cassini relation for k0 = n-3: product of the four roots
                        // equals N0 n! (n-3)^n / ((n-4)! c1^n)
                        if (k0 == n - 3 && n >= 4 && R.degree() == 4) {
                            Rational c1n = H.c1n();
                            if (c1n != 0) {
                                Rational expected = Rational(H.N0) *
                                                    Rational(factorial(static_cast<unsigned long>(n))) *
                                                    Rational(pow_integer(Integer(n - 3),
                                                                         static_cast<unsigned long>(n))) /
                                                    (Rational(factorial(static_cast<unsigned long>(n - 4))) * c1n);
                                if (R.coeff(0) == expected) rep.cassini_checked = true;
                            }
                        }
                        handled = true;
                    }
                }
                if (!handled) {
                    for (auto& [u, exact] : u_exact) {
                        double hc = -k0 / 2.0;
                        if (u >= 0) {
                            Rational sq;
                            if (rational_sqrt(u, sq)) {
                                // rational roots that slipped past deflation
                                Rational r1 = half + sq, r2 = half - sq;
                                for (const Rational& r : {r1, r2}) {
                                    if (is_integer(r)) rep.integer_roots[r.get_num()] += 1;
                                    else rep.rational_roots[r] += 1;
                                    classify_rational(r, 1, is_integer(r));
                                }
                            } else {
                                double r0 = std::sqrt(u.get_d());
                                rep.residual_roots.push_back({{hc + r0, 0.0}, true, "real, on cross"});
                                rep.residual_roots.push_back({{hc - r0, 0.0}, true, "real, on cross"});
                                if (!(u < Rational(k0) * Rational(k0) / Rational(4))) strip = false;
                                t_line = false;
                            }
                        } else {
                            Rational sq;
                            double y = rational_sqrt(-u, sq) ? sq.get_d() : std::sqrt(-u.get_d());
                            rep.residual_roots.push_back({{hc, y}, true, "on Re = -k0/2"});
                            rep.residual_roots.push_back({{hc, -y}, true, "on Re = -k0/2"});
                        }
                    }
                    handled = true;
                }
            }
        }

        if (!handled) {
            // numeric fallback, tolerance 1e-9 against the cross/strip
            auto roots = durand_kerner(R.monic());
            double hc = -k0 / 2.0;
            for (const auto& z : roots) {
                bool on = std::abs(z.imag()) < kTol || std::abs(z.real() - hc) < kTol;
                if (!on) cross = false;
                if (!(z.real() > -k0 + kTol && z.real() < -kTol)) strip = false;
                if (std::abs(z.real() - hc) >= kTol) t_line = false;
                rep.residual_roots.push_back({z, false, "numeric"});
            }
        }
    }

    rep.on_cross = cross;
    rep.in_strip = strip;
    rep.in_T_family = t_line; // mandated prefix already verified above
    return rep;
}

} // namespace eqloc
