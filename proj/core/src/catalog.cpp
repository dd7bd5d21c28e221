#include "eqloc/catalog.hpp"

#include <algorithm>

#include "eqloc/error.hpp"
#include "eqloc/localization.hpp"
#include "eqloc/polytope.hpp"

namespace eqloc {

namespace {

S1Space projective_space(const std::string& name, const std::vector<Integer>& exponents) {
    // linear action on CP^n with pairwise distinct exponent list; the weights
    // at the i-th coordinate point are a_j - a_i.
    const size_t m = exponents.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (exponents[i] == exponents[j])
                throw input_error("exponents must be pairwise distinct");
    S1Space s;
    s.name = name;
    s.n = static_cast<int>(m) - 1;
    s.index_k0 = static_cast<int>(m);
    for (size_t i = 0; i < m; ++i) {
        FixedPoint p;
        p.id = "p" + std::to_string(i);
        for (size_t j = 0; j < m; ++j)
            if (j != i) p.weights.push_back(exponents[j] - exponents[i]);
        s.points.push_back(std::move(p));
    }
    return s;
}

S1Space sphere() {
    S1Space s;
    s.name = "S2";
    s.n = 1;
    s.index_k0 = 2;
    s.points = {{"n", {Integer(1)}}, {"s", {Integer(-1)}}};
    return s;
}

LatticePolytope hirzebruch_trapezoid(long k) {
    LatticePolytope p;
    p.dim = 2;
    p.vertices = {{0, 0}, {1 + k, 0}, {1, 1}, {0, 1}};
    return p;
}

// Full flag manifold of C^3: six fixed points indexed by permutations of the
// exponent triple (0,1,3); weights are the pairwise differences in the
// permuted order.  Gated by the localization checks in the test suite
// (c1^3 = 48, c1 c2 = 24, Todd genus 1).
S1Space flag3() {
    S1Space s;
    s.name = "Flag3";
    s.n = 3;
    s.index_k0 = 2;
    const long a[3] = {0, 1, 3};
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& q : perms) {
        FixedPoint p;
        p.id = std::to_string(q[0] + 1) + std::to_string(q[1] + 1) + std::to_string(q[2] + 1);
        p.weights = {Integer(a[q[1]] - a[q[0]]), Integer(a[q[2]] - a[q[1]]),
                     Integer(a[q[2]] - a[q[0]])};
        s.points.push_back(std::move(p));
    }
    return s;
}

long to_long(const Integer& z, const char* what) {
    if (!z.fits_slong_p()) throw input_error(std::string(what) + " out of range");
    return z.get_si();
}

Poly poly_from_roots_scaled(const std::vector<Rational>& roots, const Rational& scale) {
    Poly P = Poly::constant(scale);
    for (const auto& r : roots) P = P * Poly({-r, Rational(1)});
    return P;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"CPn", "n [a1..an]", false, "projective space with a linear circle action"},
        {"CP3", "[a b c] pairwise coprime", false, "CP^3 with the standard subtorus action"},
        {"Hirzebruch", "k [l m]", false, "Hirzebruch surface H_k, toric circle restriction"},
        {"Flag3", "", false, "full flag manifold of C^3"},
        {"ProductOfSpheres", "r", false, "(S^2)^r with the diagonal-type action"},
        {"CP1xCP2", "", false, "product CP^1 x CP^2"},
        {"V5", "", true, "Fano threefold V_5 (Hilbert polynomial fixture)"},
        {"V22", "", true, "Fano threefold V_22 (Hilbert polynomial fixture)"},
        {"nK", "", true, "non-Kaehler Hamiltonian example (Hilbert polynomial fixture)"},
    };
    return entries;
}

S1Space catalog_emit(const std::string& key, const std::vector<Integer>& params) {
    if (key == "CPn") {
        if (params.empty()) throw input_error("CPn needs n");
        long n = to_long(params[0], "n");
        if (n < 1) throw input_error("CPn needs n >= 1");
        std::vector<Integer> exps = {Integer(0)};
        if (params.size() == 1) {
            for (long i = 1; i <= n; ++i) exps.emplace_back(i);
        } else if (static_cast<long>(params.size()) == n + 1) {
            for (size_t i = 1; i < params.size(); ++i) exps.push_back(params[i]);
        } else {
            throw input_error("CPn takes n alone or n followed by n exponents");
        }
        return projective_space("CP" + std::to_string(n), exps);
    }
    if (key == "CP3") {
        Integer a(1), b(2), c(3);
        if (params.size() == 3) {
            a = params[0];
            b = params[1];
            c = params[2];
        } else if (!params.empty()) {
            throw input_error("CP3 takes exactly a b c");
        }
        if (a <= 0 || b <= 0 || c <= 0) throw input_error("a, b, c must be positive");
        if (gcd(a, b) != 1 || gcd(b, c) != 1 || gcd(a, c) != 1)
            throw input_error("a, b, c must be pairwise coprime");
        return projective_space("CP3", {Integer(0), a, a + b, a + b + c});
    }
    if (key == "Hirzebruch") {
        if (params.empty()) throw input_error("Hirzebruch needs k");
        long k = std::llabs(to_long(params[0], "k"));
        Integer l(1), m(2 * k + 1);
        if (params.size() == 3) {
            l = params[1];
            m = params[2];
        } else if (params.size() != 1) {
            throw input_error("Hirzebruch takes k alone or k l m");
        }
        if (l == 0 || m == 0) throw input_error("l, m must be nonzero");
        if (gcd(l, m) != 1) throw input_error("l, m must be coprime");
        if (m == l * Integer(k)) throw input_error("need m != k*l for an isolated fixed point set");
        DelzantData d = delzant_validate(hirzebruch_trapezoid(k));
        S1Space s = circle_restrict(d, {to_long(l, "l"), to_long(m, "m")});
        s.name = "Hirzebruch" + std::to_string(k);
        s.index_k0 = (k % 2 == 0) ? 2 : 1;
        return s;
    }
    if (key == "Flag3") {
        if (!params.empty()) throw input_error("Flag3 takes no parameters");
        return flag3();
    }
    if (key == "ProductOfSpheres") {
        if (params.size() != 1) throw input_error("ProductOfSpheres needs r");
        long r = to_long(params[0], "r");
        if (r < 1) throw input_error("r must be >= 1");
        S1Space s = sphere();
        for (long i = 1; i < r; ++i) s = product_space(s, sphere(), 2);
        s.name = "S2^" + std::to_string(r);
        s.index_k0 = 2;
        return s;
    }
    if (key == "CP1xCP2") {
        if (!params.empty()) throw input_error("CP1xCP2 takes no parameters");
        S1Space cp1 = projective_space("CP1", {Integer(0), Integer(1)});
        S1Space cp2 = projective_space("CP2", {Integer(0), Integer(1), Integer(2)});
        S1Space s = product_space(cp1, cp2, 1);
        s.name = "CP1xCP2";
        return s;
    }
    if (key == "V5" || key == "V22" || key == "nK")
        throw input_error(key + " is a Hilbert-polynomial fixture, it has no weight data");
    throw input_error("unknown catalog key '" + key + "'");
}

CatalogDeclared catalog_declared(const std::string& key, const std::vector<Integer>& params) {
    CatalogDeclared d;
    if (key == "CPn" || key == "CP3") {
        long n = (key == "CP3") ? 3 : to_long(params.at(0), "n");
        d.k0 = static_cast<int>(n + 1);
        d.N = std::vector<long>(static_cast<size_t>(n) + 1, 1);
        d.c1n = Rational(pow_integer(Integer(n + 1), static_cast<unsigned long>(n)));
        d.hilbert = hilbert_cpn(static_cast<int>(n));
        d.gen_numerator = Poly::constant(Rational(1));
        return d;
    }
    if (key == "Hirzebruch") {
        long k = std::llabs(to_long(params.at(0), "k"));
        d.k0 = (k % 2 == 0) ? 2 : 1;
        d.N = {1, 2, 1};
        d.c1n = Rational(8);
        d.hilbert = (k % 2 == 0) ? Poly({Rational(1), Rational(2), Rational(1)})
                                 : Poly({Rational(1), Rational(4), Rational(4)});
        d.gen_numerator = (k % 2 == 0) ? Poly({Rational(1), Rational(1)})
                                       : Poly({Rational(1), Rational(6), Rational(1)});
        return d;
    }
    if (key == "Flag3") {
        d.k0 = 2;
        d.N = {1, 2, 2, 1};
        d.c1n = Rational(48);
        d.c1cn_minus_1 = Rational(24);
        d.hilbert = poly_from_roots_scaled({Rational(-1), Rational(-1), Rational(-1)}, Rational(1));
        d.gen_numerator = Poly({Rational(1), Rational(4), Rational(1)});
        return d;
    }
    if (key == "ProductOfSpheres") {
        long r = to_long(params.at(0), "r");
        d.k0 = 2;
        std::vector<long> N;
        for (long j = 0; j <= r; ++j)
            N.push_back(static_cast<long>(binomial(Integer(r), static_cast<unsigned long>(j)).get_si()));
        d.N = N;
        d.c1n = Rational(pow_integer(Integer(2), static_cast<unsigned long>(r))) *
                Rational(factorial(static_cast<unsigned long>(r)));
        d.hilbert = poly_from_roots_scaled(std::vector<Rational>(static_cast<size_t>(r), Rational(-1)),
                                           Rational(1));
        return d;
    }
    if (key == "CP1xCP2") {
        d.k0 = 1;
        d.N = {1, 2, 2, 1};
        d.c1n = Rational(54);
        // (1/2)(9z^2+9z+2)(2z+1)
        d.hilbert = Poly({Rational(2), Rational(13), Rational(27), Rational(18)}) *
                    Rational(make_rational(1, 2));
        return d;
    }
    if (key == "V5") {
        d.k0 = 2;
        d.c1n = Rational(40);
        d.hilbert = Poly({Rational(6), Rational(16), Rational(15), Rational(5)}) *
                    Rational(make_rational(1, 6));
        d.gen_numerator = Poly({Rational(1), Rational(3), Rational(1)});
        return d;
    }
    if (key == "V22") {
        d.k0 = 1;
        d.c1n = Rational(22);
        d.hilbert = Poly({Rational(6), Rational(23), Rational(33), Rational(22)}) *
                    Rational(make_rational(1, 6));
        d.gen_numerator = Poly({Rational(1), Rational(10), Rational(10), Rational(1)});
        return d;
    }
    if (key == "nK") {
        d.k0 = 2;
        d.c1n = Rational(64);
        d.hilbert = Poly({Rational(3), Rational(11), Rational(12), Rational(4)}) *
                    Rational(make_rational(1, 3));
        d.gen_numerator = Poly({Rational(1), Rational(6), Rational(1)});
        return d;
    }
    throw input_error("unknown catalog key '" + key + "'");
}

HilbertPoly catalog_fixture(const std::string& key) {
    if (key != "V5" && key != "V22" && key != "nK")
        throw input_error("'" + key + "' is not a fixture entry");
    CatalogDeclared d = catalog_declared(key, {});
    return HilbertPoly{*d.hilbert, 3, *d.k0, Integer(1), HilbertSource::declared};
}

namespace {

void merge(ValidationReport& into, const ValidationReport& from) {
    into.findings.insert(into.findings.end(), from.findings.begin(), from.findings.end());
}

void check(ValidationReport& rep, const std::string& name, bool pass, const std::string& detail) {
    rep.findings.push_back({name, detail, pass});
}

void selftest_space(ValidationReport& rep, const std::string& key,
                    const std::vector<Integer>& params) {
    S1Space s = catalog_emit(key, params);
    CatalogDeclared d = catalog_declared(key, params);
    merge(rep, validate(s));
    WeightProfile wp = weight_profile(s);
    if (d.N) check(rep, key + ": N_j profile", wp.N == *d.N, "fixed point count profile");

    HilbertPoly H = hilbert_both(s, *d.k0);
    if (d.hilbert)
        check(rep, key + ": Hilbert polynomial", H.coeffs == *d.hilbert,
              "computed " + H.coeffs.str());
    if (d.c1n) {
        std::vector<int> ones(static_cast<size_t>(s.n), 1);
        Rational c1n(chern_number(s, ChernPartition::of(ones, s.n)));
        check(rep, key + ": c1^n", c1n == *d.c1n,
              "computed " + to_string(c1n) + ", expected " + to_string(*d.c1n));
    }
    if (d.c1cn_minus_1 && s.n >= 2) {
        std::vector<int> p{s.n - 1, 1};
        Rational v(chern_number(s, ChernPartition::of(p, s.n)));
        check(rep, key + ": c1 c_{n-1}", v == *d.c1cn_minus_1, "computed " + to_string(v));
    }
    merge(rep, check_rigidity(H));
    GenFnData g = generating_function(H);
    merge(rep, g.checks);
    if (d.gen_numerator)
        check(rep, key + ": generating numerator U", g.U == *d.gen_numerator,
              "computed " + g.U.str("t"));
}

void selftest_fixture(ValidationReport& rep, const std::string& key) {
    HilbertPoly H = catalog_fixture(key);
    CatalogDeclared d = catalog_declared(key, {});
    merge(rep, check_rigidity(H));
    GenFnData g = generating_function(H);
    merge(rep, g.checks);
    if (d.gen_numerator)
        check(rep, key + ": generating numerator U", g.U == *d.gen_numerator,
              "computed " + g.U.str("t"));
    if (d.c1n)
        check(rep, key + ": c1^n from coefficients", H.c1n() == *d.c1n,
              "computed " + to_string(H.c1n()));
}

} // namespace

std::vector<SelftestResult> catalog_selftest() {
    std::vector<SelftestResult> out;
    auto run = [&](const std::string& entry, auto&& fn) {
        SelftestResult r;
        r.entry = entry;
        try {
            fn(r.report);
        } catch (const std::exception& e) {
            r.report.findings.push_back({entry, e.what(), false});
        }
        out.push_back(std::move(r));
    };

    run("CPn(2)", [](ValidationReport& rep) { selftest_space(rep, "CPn", {Integer(2)}); });
    run("CPn(4)", [](ValidationReport& rep) { selftest_space(rep, "CPn", {Integer(4)}); });
    run("CP3(1,2,3)", [](ValidationReport& rep) {
        selftest_space(rep, "CP3", {Integer(1), Integer(2), Integer(3)});
        // the dual of the equivariant structure class has vanishing index
        S1Space s = catalog_emit("CP3", {Integer(1), Integer(2), Integer(3)});
        BundleRestriction b;
        b.a = {{"p0", Integer(0)}, {"p1", Integer(1)}, {"p2", Integer(3)}, {"p3", Integer(6)}};
        LaurentPoly ind = atiyah_segal_index(s, b);
        check(rep, "CP3: ind of e(-tau) vanishes", ind.is_zero(), ind.str());
    });
    run("Hirzebruch(2;1,1)", [](ValidationReport& rep) {
        selftest_space(rep, "Hirzebruch", {Integer(2), Integer(1), Integer(1)});
    });
    run("Hirzebruch(1;1,3)", [](ValidationReport& rep) {
        selftest_space(rep, "Hirzebruch", {Integer(1), Integer(1), Integer(3)});
    });
    run("Flag3", [](ValidationReport& rep) { selftest_space(rep, "Flag3", {}); });
    run("ProductOfSpheres(3)", [](ValidationReport& rep) {
        selftest_space(rep, "ProductOfSpheres", {Integer(3)});
    });
    run("CP1xCP2", [](ValidationReport& rep) { selftest_space(rep, "CP1xCP2", {}); });
    run("V5", [](ValidationReport& rep) { selftest_fixture(rep, "V5"); });
    run("V22", [](ValidationReport& rep) { selftest_fixture(rep, "V22"); });
    run("nK", [](ValidationReport& rep) { selftest_fixture(rep, "nK"); });
    return out;
}

} // namespace eqloc
