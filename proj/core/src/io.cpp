#include "eqloc/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "eqloc/error.hpp"

namespace eqloc {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_document(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("malformed file: ") + e.what());
    }
}

void reject_unknown(const ordered_json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw input_error("unknown field '" + it.key() + "' in " + where);
}

Integer integer_from(const ordered_json& v, const std::string& where) {
    if (v.is_number_integer()) return Integer(static_cast<long>(v.get<int64_t>()));
    if (v.is_string()) return parse_integer(v.get<std::string>());
    throw input_error("expected an integer (or decimal string) in " + where);
}

ordered_json integer_to(const Integer& z) {
    if (z.fits_slong_p()) return ordered_json(static_cast<int64_t>(z.get_si()));
    return ordered_json(to_string(z));
}

} // namespace

S1Space parse_space_file(const std::string& text) {
    ordered_json doc = parse_document(text);
    if (!doc.is_object()) throw input_error("space file must be a JSON object");
    reject_unknown(doc, {"name", "n", "fixed_points", "index", "eta"}, "space file");
    S1Space s;
    if (!doc.contains("name") || !doc["name"].is_string())
        throw input_error("space file needs a string 'name'");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw input_error("space file needs an integer 'n'");
    if (!doc.contains("fixed_points") || !doc["fixed_points"].is_array())
        throw input_error("space file needs a 'fixed_points' array");
    s.name = doc["name"].get<std::string>();
    s.n = doc["n"].get<int>();
    for (const auto& fp : doc["fixed_points"]) {
        if (!fp.is_object()) throw input_error("fixed point entries must be objects");
        reject_unknown(fp, {"id", "weights"}, "fixed point");
        if (!fp.contains("id") || !fp["id"].is_string())
            throw input_error("fixed point needs a string 'id'");
        if (!fp.contains("weights") || !fp["weights"].is_array())
            throw input_error("fixed point needs a 'weights' array");
        FixedPoint p;
        p.id = fp["id"].get<std::string>();
        for (const auto& w : fp["weights"]) p.weights.push_back(integer_from(w, "weights"));
        s.points.push_back(std::move(p));
    }
    if (doc.contains("index")) {
        if (!doc["index"].is_number_integer()) throw input_error("'index' must be an integer");
        s.index_k0 = doc["index"].get<int>();
    }
    if (doc.contains("eta")) {
        if (!doc["eta"].is_object()) throw input_error("'eta' must map point ids to integers");
        std::map<std::string, Integer> eta;
        for (auto it = doc["eta"].begin(); it != doc["eta"].end(); ++it)
            eta[it.key()] = integer_from(it.value(), "eta");
        s.eta = std::move(eta);
    }
    validate_structure(s);
    return s;
}

std::string emit_space_file(const S1Space& space) {
    ordered_json doc;
    doc["name"] = space.name;
    doc["n"] = space.n;
    doc["fixed_points"] = ordered_json::array();
    for (const auto& p : space.points) {
        ordered_json fp;
        fp["id"] = p.id;
        fp["weights"] = ordered_json::array();
        for (const auto& w : p.weights) fp["weights"].push_back(integer_to(w));
        doc["fixed_points"].push_back(std::move(fp));
    }
    if (space.index_k0) doc["index"] = *space.index_k0;
    if (space.eta) {
        ordered_json eta;
        for (const auto& [id, v] : *space.eta) eta[id] = integer_to(v);
        doc["eta"] = std::move(eta);
    }
    return doc.dump(2) + "\n";
}

LatticePolytope parse_polytope_file(const std::string& text) {
    ordered_json doc = parse_document(text);
    if (!doc.is_object()) throw input_error("polytope file must be a JSON object");
    reject_unknown(doc, {"dim", "vertices", "facets"}, "polytope file");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        throw input_error("polytope file needs an integer 'dim'");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw input_error("polytope file needs a 'vertices' array");
    LatticePolytope p;
    p.dim = doc["dim"].get<int>();
    for (const auto& v : doc["vertices"]) {
        if (!v.is_array()) throw input_error("vertices must be integer vectors");
        std::vector<long long> row;
        for (const auto& x : v) {
            if (!x.is_number_integer()) throw input_error("vertex entries must be integers");
            row.push_back(x.get<int64_t>());
        }
        p.vertices.push_back(std::move(row));
    }
    if (doc.contains("facets")) {
        if (!doc["facets"].is_array()) throw input_error("'facets' must be an array");
        for (const auto& f : doc["facets"]) {
            reject_unknown(f, {"normal", "offset"}, "facet");
            if (!f.contains("normal") || !f["normal"].is_array() || !f.contains("offset"))
                throw input_error("facet needs 'normal' and 'offset'");
            Facet g;
            for (const auto& x : f["normal"]) {
                if (!x.is_number_integer()) throw input_error("facet normal entries must be integers");
                g.normal.push_back(x.get<int64_t>());
            }
            if (!f["offset"].is_number_integer()) throw input_error("facet offset must be an integer");
            g.offset = f["offset"].get<int64_t>();
            p.facets.push_back(std::move(g));
        }
    }
    return canonicalize_polytope(std::move(p));
}

std::string emit_polytope_file(const LatticePolytope& p) {
    ordered_json doc;
    doc["dim"] = p.dim;
    doc["vertices"] = ordered_json::array();
    for (const auto& v : p.vertices) doc["vertices"].push_back(v);
    doc["facets"] = ordered_json::array();
    for (const auto& f : p.facets) {
        ordered_json g;
        g["normal"] = f.normal;
        g["offset"] = f.offset;
        doc["facets"].push_back(std::move(g));
    }
    return doc.dump(2) + "\n";
}

BundleRestriction parse_bundle_file(const std::string& text) {
    ordered_json doc = parse_document(text);
    if (!doc.is_object()) throw input_error("bundle file must be a JSON object");
    reject_unknown(doc, {"a"}, "bundle file");
    if (!doc.contains("a") || !doc["a"].is_object())
        throw input_error("bundle file needs an 'a' map of point ids to integers");
    BundleRestriction b;
    for (auto it = doc["a"].begin(); it != doc["a"].end(); ++it)
        b.a[it.key()] = integer_from(it.value(), "bundle");
    return b;
}

std::string report_json(const ValidationReport& rep) {
    ordered_json doc;
    doc["pass"] = rep.all_pass();
    doc["checks"] = ordered_json::array();
    for (const auto& f : rep.findings) {
        ordered_json c;
        c["check"] = f.check;
        c["detail"] = f.detail;
        c["pass"] = f.pass;
        doc["checks"].push_back(std::move(c));
    }
    return doc.dump(2) + "\n";
}

std::string verdict_json(const Verdict& v) {
    ordered_json doc;
    switch (v.kind) {
        case VerdictKind::Hamiltonian: doc["verdict"] = "Hamiltonian"; break;
        case VerdictKind::NonHamiltonian: doc["verdict"] = "NonHamiltonian"; break;
        case VerdictKind::Inconsistent: doc["verdict"] = "Inconsistent"; break;
        case VerdictKind::Indeterminate: doc["verdict"] = "Indeterminate"; break;
    }
    doc["reasons"] = v.reasons;
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace eqloc
