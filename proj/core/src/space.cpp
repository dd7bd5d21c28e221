#include "eqloc/space.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "eqloc/error.hpp"
#include "eqloc/hilbert.hpp"
#include "eqloc/localization.hpp"

namespace eqloc {

bool ValidationReport::all_pass() const {
    return std::all_of(findings.begin(), findings.end(),
                       [](const Finding& f) { return f.pass; });
}

std::string ValidationReport::str() const {
    std::ostringstream out;
    for (const auto& f : findings)
        out << (f.pass ? "[ ok ] " : "[FAIL] ") << f.check << ": " << f.detail << "\n";
    if (!all_pass()) out << "=> data is not consistent as S^1-space data\n";
    return out.str();
}

void validate_structure(const S1Space& space) {
    if (space.n < 1) throw input_error("n must be positive");
    if (space.points.empty()) throw input_error("empty fixed point set");
    std::set<std::string> ids;
    for (const auto& p : space.points) {
        if (!ids.insert(p.id).second) throw input_error("duplicate fixed point id '" + p.id + "'");
        if (static_cast<int>(p.weights.size()) != space.n)
            throw input_error("fixed point '" + p.id + "' has " +
                              std::to_string(p.weights.size()) + " weights, expected " +
                              std::to_string(space.n));
        for (const auto& w : p.weights)
            if (w == 0) throw input_error("zero weight at fixed point '" + p.id + "'");
    }
    if (space.eta) {
        for (const auto& p : space.points)
            if (!space.eta->count(p.id))
                throw input_error("eta missing value at fixed point '" + p.id + "'");
    }
}

WeightProfile weight_profile(const S1Space& space) {
    validate_structure(space);
    WeightProfile wp;
    wp.N.assign(static_cast<size_t>(space.n) + 1, 0);
    for (const auto& p : space.points) {
        int lambda = 0;
        Integer sum(0), plus(0), minus(0);
        for (const auto& w : p.weights) {
            sum += w;
            if (w < 0) {
                ++lambda;
                minus -= w;
            } else {
                plus += w;
            }
        }
        wp.n_negative[p.id] = lambda;
        wp.N[static_cast<size_t>(lambda)] += 1;
        wp.c1_restriction[p.id] = sum;
        wp.c1_plus[p.id] = plus;
        wp.c1_minus[p.id] = minus;
    }
    return wp;
}

ValidationReport validate(const S1Space& space) {
    validate_structure(space);
    ValidationReport rep;
    WeightProfile wp = weight_profile(space);

    { // N_j = N_{n-j}
        bool ok = true;
        for (int j = 0; j <= space.n; ++j)
            if (wp.N[static_cast<size_t>(j)] != wp.N[static_cast<size_t>(space.n - j)]) ok = false;
        std::ostringstream d;
        d << "N = (";
        for (int j = 0; j <= space.n; ++j) d << (j ? "," : "") << wp.N[static_cast<size_t>(j)];
        d << ")";
        rep.findings.push_back({"fixed-point symmetry N_j = N_{n-j}", d.str(), ok});
    }

    { // localization sum of the constant class 1 vanishes
        Rational sum(0);
        for (const auto& p : space.points) {
            Integer prod(1);
            for (const auto& w : p.weights) prod *= w;
            sum += make_rational(1, prod);
        }
        rep.findings.push_back({"localization sum of 1 vanishes",
                                "sum_p 1/prod(w_p) = " + to_string(sum), sum == 0});
    }

    { // equivariant index of the trivial bundle is the integer N_0
        std::string detail;
        bool ok = false;
        try {
            BundleRestriction trivial = trivial_bundle(space);
            LaurentPoly ind = atiyah_segal_index(space, trivial);
            detail = "ind(1) = " + ind.str();
            ok = (ind == LaurentPoly::constant(Rational(wp.N[0])));
            if (!ok) detail += ", expected " + std::to_string(wp.N[0]);
        } catch (const check_error& e) {
            detail = e.what();
        }
        rep.findings.push_back({"index of trivial bundle equals N_0", detail, ok});
    }

    { // a constant c1 restriction forces N_0 = N_n = 0 (vanishing Todd genus)
        bool constant = true;
        const Integer& first = wp.c1_restriction.at(space.points.front().id);
        for (const auto& p : space.points)
            if (wp.c1_restriction.at(p.id) != first) constant = false;
        bool ok = !constant || wp.N[0] == 0;
        rep.findings.push_back({"constant c1 restriction forces N_0 = 0",
                                constant ? ("restriction constant = " + to_string(first) +
                                            ", N_0 = " + std::to_string(wp.N[0]))
                                         : "restriction not constant (vacuous)",
                                ok});
    }

    if (space.index_k0) { // declared index must divide the c1 restrictions uniformly
        int k0 = *space.index_k0;
        std::string detail;
        bool ok = false;
        if (k0 < 1) {
            detail = "declared index must be positive";
        } else {
            try {
                auto [c, eta] = solve_eta(space, k0);
                detail = "k0 = " + std::to_string(k0) + ", residue c = " + to_string(c);
                ok = true;
                if (space.eta) {
                    for (const auto& p : space.points)
                        if (space.eta->at(p.id) != eta.a.at(p.id)) ok = false;
                    detail += ok ? ", declared eta matches" : ", declared eta differs";
                }
            } catch (const check_error& e) {
                detail = e.what();
            }
        }
        rep.findings.push_back({"declared index divides c1 restrictions", detail, ok});
    }

    return rep;
}

S1Space product_space(const S1Space& a, const S1Space& b, std::optional<int> k0) {
    validate_structure(a);
    validate_structure(b);
    S1Space prod;
    prod.name = a.name + "x" + b.name;
    prod.n = a.n + b.n;
    prod.index_k0 = k0;
    for (const auto& pa : a.points)
        for (const auto& pb : b.points) {
            FixedPoint p;
            p.id = pa.id + "*" + pb.id;
            p.weights = pa.weights;
            p.weights.insert(p.weights.end(), pb.weights.begin(), pb.weights.end());
            prod.points.push_back(std::move(p));
        }
    return prod;
}

const FixedPoint& point_by_id(const S1Space& space, const std::string& id) {
    for (const auto& p : space.points)
        if (p.id == id) return p;
    throw input_error("unknown fixed point id '" + id + "'");
}

} // namespace eqloc
