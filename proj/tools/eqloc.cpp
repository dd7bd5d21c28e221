#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eqloc/catalog.hpp"
#include "eqloc/classify.hpp"
#include "eqloc/error.hpp"
#include "eqloc/hilbert.hpp"
#include "eqloc/io.hpp"
#include "eqloc/localization.hpp"
#include "eqloc/polytope.hpp"
#include "eqloc/roots.hpp"
#include "eqloc/symmetric.hpp"

using namespace eqloc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) throw input_error("empty entry in list '" + s + "'");
            out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) throw input_error("empty entry in list '" + s + "'");
            out.push_back(parse_rational(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

int report_exit(const ValidationReport& rep, bool as_json) {
    if (as_json) std::cout << report_json(rep);
    else std::cout << rep.str();
    return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

// validate: structural checks, the consistency findings, and integrality of
// every Chern number of the given dimension.
int cmd_validate(const std::string& path, bool as_json) {
    S1Space s = parse_space_file(read_file(path));
    ValidationReport rep = validate(s);
    for (const auto& part : partitions_of(s.n)) {
        std::string name = "chern number c_";
        for (size_t i = 0; i < part.size(); ++i) name += (i ? "." : "") + std::to_string(part[i]);
        try {
            Integer v = chern_number(s, ChernPartition::of(part, s.n));
            rep.findings.push_back({name + " integral", to_string(v), true});
        } catch (const check_error& e) {
            rep.findings.push_back({name + " integral", e.what(), false});
        }
    }
    return report_exit(rep, as_json);
}

int cmd_chern(const std::string& path, const std::string& partition) {
    S1Space s = parse_space_file(read_file(path));
    auto parts = parse_int_list(partition);
    Integer v = chern_number(s, ChernPartition::of(parts, s.n));
    std::cout << to_string(v) << "\n";
    return kExitOk;
}

int cmd_index(const std::string& path, const std::string& bundle_path, std::optional<int> eta_mult,
              std::optional<int> k0_flag) {
    S1Space s = parse_space_file(read_file(path));
    BundleRestriction bundle;
    if (!bundle_path.empty() && eta_mult)
        throw input_error("--bundle and --eta-multiple are mutually exclusive");
    if (!bundle_path.empty()) {
        bundle = parse_bundle_file(read_file(bundle_path));
    } else if (eta_mult) {
        if (s.eta) {
            for (const auto& [id, v] : *s.eta) bundle.a[id] = v * Integer(*eta_mult);
        } else {
            std::optional<int> k0 = k0_flag ? k0_flag : s.index_k0;
            if (!k0) throw input_error("--eta-multiple needs an eta map or an index (--k0 or file)");
            EtaSolution sol = solve_eta(s, *k0);
            bundle = scale_bundle(sol.eta, Integer(*eta_mult));
        }
    } else {
        bundle = trivial_bundle(s);
    }
    LaurentPoly ind = atiyah_segal_index(s, bundle);
    std::cout << ind.str() << "\n";
    return kExitOk;
}

int cmd_hilbert(const std::string& path, std::optional<int> k0_flag, const std::string& method,
                bool as_json) {
    S1Space s = parse_space_file(read_file(path));
    std::optional<int> k0 = k0_flag ? k0_flag : s.index_k0;
    if (!k0) throw input_error("no index available: pass --k0 or set 'index' in the file");

    HilbertPoly H;
    if (method == "index") H = hilbert_via_index(s, *k0);
    else if (method == "chern") H = hilbert_via_chern(s, *k0);
    else if (method == "both") H = hilbert_both(s, *k0);
    else throw input_error("--method must be index, chern or both");

    ValidationReport rep = check_rigidity(H);
    GenFnData g = generating_function(H);
    rep.findings.insert(rep.findings.end(), g.checks.findings.begin(), g.checks.findings.end());

    // root locus, only meaningful once the rigidity zeros hold; approximate
    // coordinates are marked with "~", everything else is exact
    std::string roots;
    if (rep.all_pass() && !H.coeffs.is_zero()) {
        try {
            roots = root_analysis(H).str();
        } catch (const check_error& e) {
            roots = std::string("root analysis: ") + e.what() + "\n";
        }
    }

    if (as_json) {
        std::cout << "{\n  \"hilbert\": \"" << H.coeffs.str() << "\",\n  \"U\": \""
                  << g.U.str("t") << "\",\n  \"report\": " << report_json(rep) << "}\n";
    } else {
        std::cout << "H(z) = " << H.coeffs.str() << "\n";
        std::cout << "U(t) = " << g.U.str("t") << " over (1-t)^" << (g.m + 1) << "\n";
        std::cout << roots;
        std::cout << rep.str();
    }
    return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_classify(int n, int k0, std::optional<std::string> c1n, std::optional<std::string> c1n2c2,
                 std::optional<long> N0, std::optional<std::string> hilbert_coeffs, bool as_json) {
    Verdict v;
    std::optional<Integer> N0i;
    if (N0) N0i = Integer(*N0);
    if (hilbert_coeffs) {
        HilbertPoly H{Poly(parse_rational_list(*hilbert_coeffs)), n, k0,
                      N0 ? Integer(*N0) : Integer(0), HilbertSource::declared};
        if (!N0 && !H.coeffs.is_zero()) H.N0 = as_integer(H.coeffs(Rational(0)), "H(0)");
        ValidationReport rig = check_rigidity(H);
        if (!rig.all_pass()) {
            std::cout << rig.str();
            return kExitCheckFailed;
        }
        v = classify_action(H, N0i);
    } else {
        if (!c1n) throw input_error("classify needs --c1n or --hilbert");
        std::optional<Rational> c2;
        if (c1n2c2) c2 = parse_rational(*c1n2c2);
        v = classify_action(n, k0, parse_rational(*c1n), c2, N0i);
    }
    if (as_json) std::cout << verdict_json(v);
    else std::cout << v.str() << "\n";
    return kExitOk;
}

int cmd_ehrhart(const std::string& path, std::optional<std::string> xi_flag, bool compare_hilbert,
                bool as_json) {
    LatticePolytope p = parse_polytope_file(read_file(path));
    ValidationReport rep;
    Poly E = ehrhart_polynomial(p);
    rep.findings.push_back({"Ehrhart polynomial", E.str(), true});

    auto rd = reflexive_dilate(p);
    if (rd) {
        std::string t = "(";
        for (size_t i = 0; i < rd->translation.size(); ++i)
            t += (i ? "," : "") + std::to_string(rd->translation[i]);
        t += ")";
        rep.findings.push_back({"reflexive dilate",
                                "k = " + std::to_string(rd->k) + ", translation " + t +
                                    ", Hibi reciprocity verified",
                                true});
    } else {
        rep.findings.push_back({"reflexive dilate", "none found (not of monotone type)", true});
    }

    if (xi_flag || compare_hilbert) {
        if (!xi_flag) throw input_error("--compare-hilbert needs --xi");
        DelzantData d = delzant_validate(p);
        std::vector<long long> xi;
        for (int x : parse_int_list(*xi_flag)) xi.push_back(x);
        S1Space s = circle_restrict(d, xi);
        rep.findings.push_back(
            {"toric circle restriction", std::to_string(s.points.size()) + " fixed points", true});
        if (compare_hilbert) {
            bool ok = ehrhart_vs_hilbert(d, xi);
            rep.findings.push_back(
                {"Ehrhart polynomial = Hilbert polynomial", ok ? "equal" : "MISMATCH", ok});
        }
    }
    return report_exit(rep, as_json);
}

int cmd_catalog(const std::string& action, const std::vector<std::string>& args) {
    if (action == "list") {
        for (const auto& e : catalog_entries()) {
            std::cout << e.key;
            if (!e.params_help.empty()) std::cout << " " << e.params_help;
            std::cout << (e.is_fixture ? "  [fixture] " : "  ") << "- " << e.description << "\n";
        }
        return kExitOk;
    }
    if (action == "emit") {
        if (args.empty()) throw input_error("catalog emit needs a KEY");
        std::vector<Integer> params;
        for (size_t i = 1; i < args.size(); ++i) params.push_back(parse_integer(args[i]));
        std::cout << emit_space_file(catalog_emit(args[0], params));
        return kExitOk;
    }
    if (action == "selftest") {
        bool all = true;
        for (const auto& r : catalog_selftest()) {
            bool pass = r.report.all_pass();
            all = all && pass;
            std::cout << (pass ? "[ ok ] " : "[FAIL] ") << r.entry << "\n";
            if (!pass)
                for (const auto& f : r.report.findings)
                    if (!f.pass) std::cout << "       " << f.check << ": " << f.detail << "\n";
        }
        return all ? kExitOk : kExitCheckFailed;
    }
    throw input_error("catalog action must be list, emit or selftest");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant localization toolkit for circle actions with isolated fixed points"};
    app.require_subcommand(1);
    app.footer("Environment: EQLOC_THREADS caps internal parallelism.");

    std::string path, partition, bundle_path, method = "both", action;
    std::optional<int> k0_flag, eta_mult;
    std::optional<std::string> xi_flag, c1n, c1n2c2, hilbert_coeffs;
    std::optional<long> N0;
    int n = 0, k0 = 0;
    bool as_json = false, compare_hilbert = false;
    std::vector<std::string> catalog_args;

    auto* validate_cmd = app.add_subcommand("validate", "consistency checks on a space file");
    validate_cmd->add_option("path", path)->required();
    validate_cmd->add_flag("--json", as_json);

    auto* chern_cmd = app.add_subcommand("chern", "Chern number by fixed point localization");
    chern_cmd->add_option("path", path)->required();
    chern_cmd->add_option("--partition", partition, "comma list, must sum to n")->required();

    auto* index_cmd = app.add_subcommand("index", "equivariant index of a line bundle");
    index_cmd->add_option("path", path)->required();
    index_cmd->add_option("--bundle", bundle_path, "bundle restriction file");
    index_cmd->add_option("--eta-multiple", eta_mult, "use the h-th power of eta");
    index_cmd->add_option("--k0", k0_flag, "index used to solve for eta");

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert polynomial with rigidity report");
    hilbert_cmd->add_option("path", path)->required();
    hilbert_cmd->add_option("--k0", k0_flag);
    hilbert_cmd->add_option("--method", method, "index|chern|both (default both)");
    hilbert_cmd->add_flag("--json", as_json);

    auto* classify_cmd = app.add_subcommand("classify", "Hamiltonian vs non-Hamiltonian verdict");
    classify_cmd->add_option("--n", n)->required();
    classify_cmd->add_option("--k0", k0)->required();
    classify_cmd->add_option("--c1n", c1n, "c1^n[M]");
    classify_cmd->add_option("--c1n2c2", c1n2c2, "c1^{n-2}c2[M]");
    classify_cmd->add_option("--N0", N0);
    classify_cmd->add_option("--hilbert", hilbert_coeffs, "comma list a0,a1,... of H coefficients");
    classify_cmd->add_flag("--json", as_json);

    auto* ehrhart_cmd = app.add_subcommand("ehrhart", "Ehrhart polynomial and reflexive dilate");
    ehrhart_cmd->add_option("path", path)->required();
    ehrhart_cmd->add_option("--xi", xi_flag, "circle direction, comma list");
    ehrhart_cmd->add_flag("--compare-hilbert", compare_hilbert);
    ehrhart_cmd->add_flag("--json", as_json);

    auto* catalog_cmd = app.add_subcommand("catalog", "builtin example spaces");
    catalog_cmd->add_option("action", action, "list | emit KEY [params] | selftest")->required();
    catalog_cmd->add_option("args", catalog_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(path, as_json);
        if (chern_cmd->parsed()) return cmd_chern(path, partition);
        if (index_cmd->parsed()) return cmd_index(path, bundle_path, eta_mult, k0_flag);
        if (hilbert_cmd->parsed()) return cmd_hilbert(path, k0_flag, method, as_json);
        if (classify_cmd->parsed())
            return cmd_classify(n, k0, c1n, c1n2c2, N0, hilbert_coeffs, as_json);
        if (ehrhart_cmd->parsed()) return cmd_ehrhart(path, xi_flag, compare_hilbert, as_json);
        if (catalog_cmd->parsed()) return cmd_catalog(action, catalog_args);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const check_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
