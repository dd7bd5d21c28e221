#include "eqloc/classify.hpp"

#include <algorithm>
#include <sstream>

#include "eqloc/error.hpp"
#include "eqloc/symmetric.hpp"

namespace eqloc {

std::string Verdict::str() const {
    std::ostringstream out;
    switch (kind) {
        case VerdictKind::Hamiltonian: out << "Hamiltonian"; break;
        case VerdictKind::NonHamiltonian: out << "NonHamiltonian"; break;
        case VerdictKind::Inconsistent: out << "Inconsistent"; break;
        case VerdictKind::Indeterminate: out << "Indeterminate"; break;
    }
    for (const auto& r : reasons) out << "\n  - " << r;
    return out.str();
}

namespace {

Verdict check_against_n0(Verdict v, const std::optional<Integer>& N0) {
    if (!N0) return v;
    if (*N0 == 0 && v.kind == VerdictKind::Hamiltonian) {
        v.kind = VerdictKind::Inconsistent;
        v.reasons.push_back("N_0 = 0 forces a non-Hamiltonian action, but the Chern values are the Hamiltonian ones");
    } else if (*N0 == 1 && v.kind == VerdictKind::NonHamiltonian) {
        v.kind = VerdictKind::Inconsistent;
        v.reasons.push_back("N_0 = 1 forces a Hamiltonian action, but the Chern values vanish");
    }
    return v;
}

Verdict two_element_set(const Rational& c1n, const std::optional<Rational>& c1n2c2,
                        const Rational& c1n_ham, const Rational& c1c2_ham,
                        const std::string& label) {
    Verdict v;
    bool c1_ham = (c1n == c1n_ham), c1_zero = (c1n == 0);
    if (!c1_ham && !c1_zero) {
        v.kind = VerdictKind::Inconsistent;
        v.reasons.push_back("c1^n = " + to_string(c1n) + " outside the allowed set {" +
                            to_string(c1n_ham) + ", 0} for " + label);
        return v;
    }
    if (c1n2c2) {
        bool c2_ham = (*c1n2c2 == c1c2_ham), c2_zero = (*c1n2c2 == 0);
        if ((c1_ham && !c2_ham) || (c1_zero && !c2_zero)) {
            v.kind = VerdictKind::Inconsistent;
            v.reasons.push_back("c1^{n-2}c2 = " + to_string(*c1n2c2) +
                                " incompatible with c1^n = " + to_string(c1n) + " for " + label);
            return v;
        }
    }
    if (c1_ham && c1n_ham != 0) {
        v.kind = VerdictKind::Hamiltonian;
        v.reasons.push_back(label + ": Chern values match the unique Hamiltonian pair");
        v.reasons.push_back("for a Hamiltonian action the index is the minimal Chern number");
    } else {
        v.kind = VerdictKind::NonHamiltonian;
        v.reasons.push_back(label + ": Chern values vanish");
    }
    return v;
}

} // namespace

Verdict classify_action(int n, int k0, const Rational& c1n, std::optional<Rational> c1n2c2,
                        std::optional<Integer> N0) {
    if (n < 1) throw input_error("n must be positive");
    if (k0 < 0) throw input_error("k0 must be nonnegative");
    Verdict v;

    if (k0 == 0 || k0 > n + 1) {
        if (c1n != 0 || (c1n2c2 && *c1n2c2 != 0)) {
            v.kind = VerdictKind::Inconsistent;
            v.reasons.push_back("k0 = " + std::to_string(k0) +
                                " forces c1^n = c1^{n-2}c2 = 0, got c1^n = " + to_string(c1n));
            return v;
        }
        v.kind = VerdictKind::NonHamiltonian;
        v.reasons.push_back(k0 == 0 ? "torsion first Chern class (k0 = 0)"
                                    : "k0 > n+1 exceeds the Hamiltonian bound");
        return check_against_n0(v, N0);
    }

    if (k0 == n + 1) {
        Rational c1 = Rational(pow_integer(Integer(n + 1), static_cast<unsigned long>(n)));
        Rational c2 = Rational(n) *
                      Rational(pow_integer(Integer(n + 1), static_cast<unsigned long>(n - 1))) /
                      Rational(2);
        return check_against_n0(two_element_set(c1n, c1n2c2, c1, c2, "k0 = n+1"), N0);
    }
    if (k0 == n && n >= 2) {
        Rational c1 = Rational(2) * Rational(pow_integer(Integer(n), static_cast<unsigned long>(n)));
        Rational c2 = Rational(pow_integer(Integer(n), static_cast<unsigned long>(n - 2))) *
                      Rational(n * n - n + 2);
        return check_against_n0(two_element_set(c1n, c1n2c2, c1, c2, "k0 = n"), N0);
    }

    if ((k0 == n - 1 && n >= 2) || (k0 == n - 2 && n >= 3)) {
        if (!c1n2c2) throw input_error("c1^{n-2}c2 required for k0 = n-1 or n-2");
        Rational comb, ham_value;
        std::string label;
        if (k0 == n - 1) {
            comb = *c1n2c2 - Rational(n) * Rational(n - 3) /
                                 (Rational(2) * Rational(n - 1) * Rational(n - 1)) * c1n;
            ham_value = Rational(12) *
                        Rational(pow_integer(Integer(n - 1), static_cast<unsigned long>(n - 2)));
            label = "k0 = n-1";
        } else {
            comb = *c1n2c2 - Rational(n - 3) / (Rational(2) * Rational(n - 2)) * c1n;
            ham_value = Rational(24) *
                        Rational(pow_integer(Integer(n - 2), static_cast<unsigned long>(n - 2)));
            label = "k0 = n-2";
        }
        if (comb == ham_value) {
            v.kind = VerdictKind::Hamiltonian;
            v.reasons.push_back(label + ": Chern combination equals " + to_string(ham_value));
            v.reasons.push_back("for a Hamiltonian action the index is the minimal Chern number");
        } else if (comb == 0) {
            v.kind = VerdictKind::NonHamiltonian;
            v.reasons.push_back(label + ": Chern combination vanishes");
        } else {
            v.kind = VerdictKind::Inconsistent;
            v.reasons.push_back(label + ": combination " + to_string(comb) +
                                " outside the allowed set {0, " + to_string(ham_value) + "}");
        }
        return check_against_n0(v, N0);
    }

    v.kind = VerdictKind::Indeterminate;
    v.reasons.push_back("k0 = " + std::to_string(k0) +
                        " below n-2: the Chern pair does not decide the question");
    return v;
}

Verdict classify_action(const HilbertPoly& H, std::optional<Integer> N0) {
    std::optional<Rational> c2 = (H.n >= 2) ? std::optional<Rational>(H.c1n2c2()) : std::nullopt;
    if (!N0 && (H.N0 == 0 || H.N0 == 1)) N0 = H.N0;
    Verdict v = classify_action(H.n, H.k0, H.c1n(), c2, N0);
    if (v.kind == VerdictKind::Indeterminate && H.k0 >= 1) {
        // one-sided detector: if c1^h T_{n-h}[M] = 0 for all
        // h >= 2k0 - n + 2 floor((n-k0)/2), the action cannot be Hamiltonian
        int h0 = 2 * H.k0 - H.n + 2 * ((H.n - H.k0) / 2);
        bool all_zero = true;
        for (int h = std::max(h0, 0); h <= H.n; ++h)
            if (H.chern_todd(h) != 0) all_zero = false;
        if (all_zero) {
            v.kind = VerdictKind::NonHamiltonian;
            v.reasons.push_back("c1^h T_{n-h} vanishes for all h >= " + std::to_string(h0) +
                                ": no Hamiltonian action is possible");
        }
    }
    return v;
}

namespace {

std::string part_name(const std::vector<int>& part) {
    std::string s = "c_";
    for (size_t i = 0; i < part.size(); ++i) s += (i ? "." : "") + std::to_string(part[i]);
    return s;
}

void expect(ValidationReport& rep, const std::string& check, const Rational& got,
            const Rational& want) {
    rep.findings.push_back(
        {check, "computed " + to_string(got) + ", expected " + to_string(want), got == want});
}

} // namespace

ValidationReport lowdim_report(const S1Space& space, std::optional<int> k0) {
    const int n = space.n;
    if (n < 2 || n > 4) throw input_error("low-dimension report covers n = 2, 3, 4");
    ValidationReport rep;
    WeightProfile wp = weight_profile(space);
    Rational N0(wp.N[0]), N1(wp.N[1]), N2(n >= 2 ? wp.N[2] : 0);

    std::map<std::string, Rational> cn;
    for (const auto& part : partitions_of(n)) {
        Rational v(chern_number(space, ChernPartition::of(part, n)));
        cn[part_name(part)] = v;
    }

    // c_n counts the fixed points; c_1 c_{n-1} is N_j-linear in every dimension
    Rational pts(static_cast<long>(space.points.size()));
    expect(rep, "c_n = #fixed points", cn[part_name(std::vector<int>{n})], pts);
    {
        std::vector<int> p{n - 1, 1};
        std::sort(p.begin(), p.end(), std::greater<int>());
        Rational lhs = cn[part_name(p)];
        Rational rhs(0);
        for (int j = 0; j <= n; ++j)
            rhs += Rational(wp.N[static_cast<size_t>(j)]) *
                   (Rational(6 * j * (j - 1)) + Rational(5 * n - 3 * n * n) / Rational(2));
        expect(rep, "c_1 c_{n-1} = sum N_j [6j(j-1) + (5n-3n^2)/2]", lhs, rhs);
    }

    if (n == 2) {
        expect(rep, "c_2 = 2N_0 + N_1", cn["c_2"], 2 * N0 + N1);
        expect(rep, "c_1^2 = 10N_0 - N_1", cn["c_1.1"], 10 * N0 - N1);
        if (k0 == 3) {
            rep.findings.push_back({"k0 = 3 forces N_0 = N_1 = N_2",
                                    "N = (" + to_string(N0) + "," + to_string(N1) + "," +
                                        to_string(N2) + ")",
                                    N0 == N1 && N1 == N2});
            expect(rep, "c_1^2 = 9N_0 (k0 = 3)", cn["c_1.1"], 9 * N0);
        } else if (k0 == 2) {
            rep.findings.push_back({"k0 = 2 forces 2N_0 = N_1 = 2N_2",
                                    "N = (" + to_string(N0) + "," + to_string(N1) + "," +
                                        to_string(N2) + ")",
                                    2 * N0 == N1 && N1 == 2 * N2});
            expect(rep, "c_1^2 = 8N_0 (k0 = 2)", cn["c_1.1"], 8 * N0);
        }
    } else if (n == 3) {
        expect(rep, "c_3 = 2(N_0 + N_1)", cn["c_3"], 2 * (N0 + N1));
        expect(rep, "c_1 c_2 = 24N_0", cn["c_2.1"], 24 * N0);
        if (k0 == 4) expect(rep, "c_1^3 = 64N_0 (k0 = 4)", cn["c_1.1.1"], 64 * N0);
        if (k0 == 3) expect(rep, "c_1^3 = 54N_0 (k0 = 3)", cn["c_1.1.1"], 54 * N0);
    } else {
        expect(rep, "c_4 = 2N_0 + 2N_1 + N_2", cn["c_4"], 2 * N0 + 2 * N1 + N2);
        expect(rep, "c_1 c_3 = 44N_0 + 8N_1 - 2N_2", cn["c_3.1"], 44 * N0 + 8 * N1 - 2 * N2);
        Rational c14 = cn["c_1.1.1.1"], c12c2 = cn["c_2.1.1"], c22 = cn["c_2.2"];
        if (k0 == 5) {
            expect(rep, "c_1^4 = 625N_0 (k0 = 5)", c14, 625 * N0);
            expect(rep, "c_1^2 c_2 = 250N_0 (k0 = 5)", c12c2, 250 * N0);
            expect(rep, "c_2^2 = 101N_0 - 2N_1 + N_2 (k0 = 5)", c22, 101 * N0 - 2 * N1 + N2);
        } else if (k0 == 4) {
            expect(rep, "c_1^4 = 512N_0 (k0 = 4)", c14, 512 * N0);
            expect(rep, "c_1^2 c_2 = 224N_0 (k0 = 4)", c12c2, 224 * N0);
            expect(rep, "c_2^2 = 98N_0 - 2N_1 + N_2 (k0 = 4)", c22, 98 * N0 - 2 * N1 + N2);
        } else if (k0 == 3) {
            expect(rep, "c_1^2 c_2 = 108N_0 + (2/9)c_1^4 (k0 = 3)", c12c2,
                   108 * N0 + Rational(2) / Rational(9) * c14);
            expect(rep, "c_2^2 = 82N_0 - 2N_1 + N_2 + (1/27)c_1^4 (k0 = 3)", c22,
                   82 * N0 - 2 * N1 + N2 + Rational(1) / Rational(27) * c14);
        } else if (k0 == 2) {
            expect(rep, "c_1^2 c_2 = 96N_0 + (1/4)c_1^4 (k0 = 2)", c12c2,
                   96 * N0 + Rational(1) / Rational(4) * c14);
            expect(rep, "c_2^2 = 98N_0 - 2N_1 + N_2 (k0 = 2)", c22, 98 * N0 - 2 * N1 + N2);
        }
    }
    return rep;
}

} // namespace eqloc
