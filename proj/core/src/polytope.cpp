#include "eqloc/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <thread>

#include "eqloc/error.hpp"
#include "eqloc/hilbert.hpp"

namespace eqloc {

namespace {

using Vec = std::vector<long long>;

long long llgcd(long long a, long long b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long dot(const Vec& a, const Vec& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

void make_primitive(Vec& a, long long* offset = nullptr) {
    long long g = 0;
    for (long long x : a) g = llgcd(g, x);
    if (g > 1) {
        for (auto& x : a) x /= g;
        if (offset) *offset /= g;
    }
}

// Exact determinant by fraction-free elimination (d <= 4 here).
Integer det_int(std::vector<std::vector<Integer>> m) {
    const size_t d = m.size();
    if (d == 0) return Integer(1);
    Integer sign(1), prev(1);
    for (size_t k = 0; k + 1 < d; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < d && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == d) return Integer(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < d; ++i)
            for (size_t j = k + 1; j < d; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[d - 1][d - 1];
}

int rank_int(std::vector<std::vector<Integer>> m) {
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Integer a = m[r][c], b = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * a - m[r][j] * b;
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<std::vector<Integer>> to_int_rows(const std::vector<Vec>& rows) {
    std::vector<std::vector<Integer>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Integer> row;
        row.reserve(r.size());
        for (long long x : r) row.emplace_back(static_cast<long>(x));
        m.push_back(std::move(row));
    }
    return m;
}

// Generalized cross product of d-1 vectors in Z^d via cofactor expansion.
Vec normal_of(const std::vector<Vec>& edges, int dim) {
    Vec normal(static_cast<size_t>(dim), 0);
    for (int j = 0; j < dim; ++j) {
        std::vector<std::vector<Integer>> minor;
        for (const auto& e : edges) {
            std::vector<Integer> row;
            for (int c = 0; c < dim; ++c)
                if (c != j) row.emplace_back(static_cast<long>(e[static_cast<size_t>(c)]));
            minor.push_back(std::move(row));
        }
        Integer d = det_int(std::move(minor));
        if (!d.fits_slong_p()) throw input_error("polytope coordinates too large");
        normal[static_cast<size_t>(j)] = ((j % 2 == 0) ? 1 : -1) * d.get_si();
    }
    return normal;
}

bool facet_less(const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
}

std::vector<Vec> active_normals(const LatticePolytope& p, const Vec& v) {
    std::vector<Vec> out;
    for (const auto& f : p.facets)
        if (dot(f.normal, v) + f.offset == 0) out.push_back(f.normal);
    return out;
}

unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("EQLOC_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

} // namespace

std::vector<Facet> convex_hull_facets(int dim, const std::vector<Vec>& vertices) {
    if (dim < 1 || dim > 4) throw input_error("dimension must be 1..4");
    const size_t nv = vertices.size();
    if (nv < static_cast<size_t>(dim) + 1) throw input_error("too few vertices");
    std::set<std::pair<Vec, long long>> seen;
    std::vector<Facet> facets;

    // iterate all d-subsets of vertices
    std::vector<size_t> comb;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (comb.size() == static_cast<size_t>(dim)) {
            std::vector<Vec> edges;
            for (size_t i = 1; i < comb.size(); ++i)
                edges.push_back(sub(vertices[comb[i]], vertices[comb[0]]));
            Vec a = normal_of(edges, dim);
            bool zero = std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
            if (zero) return;
            long long base = dot(a, vertices[comb[0]]);
            bool all_ge = true, all_le = true;
            for (const auto& v : vertices) {
                long long s = dot(a, v) - base;
                if (s < 0) all_ge = false;
                if (s > 0) all_le = false;
            }
            if (!all_ge && !all_le) return;
            if (all_le) {
                for (auto& x : a) x = -x;
                base = -base;
            }
            long long offset = -base; // a.x + offset >= 0
            make_primitive(a, &offset);
            if (seen.insert({a, offset}).second) facets.push_back({a, offset});
            return;
        }
        for (size_t i = start; i < nv; ++i) {
            comb.push_back(i);
            rec(i + 1);
            comb.pop_back();
        }
    };
    rec(0);
    if (facets.size() < static_cast<size_t>(dim) + 1)
        throw input_error("vertex set is not full-dimensional");
    std::sort(facets.begin(), facets.end(), facet_less);
    return facets;
}

LatticePolytope canonicalize_polytope(LatticePolytope p) {
    if (p.dim < 1 || p.dim > 4) throw input_error("dimension must be 1..4");
    std::set<Vec> vset;
    for (const auto& v : p.vertices) {
        if (static_cast<int>(v.size()) != p.dim) throw input_error("vertex arity mismatch");
        if (!vset.insert(v).second) throw input_error("duplicate vertex");
    }
    { // full-dimensionality
        std::vector<Vec> edges;
        for (size_t i = 1; i < p.vertices.size(); ++i)
            edges.push_back(sub(p.vertices[i], p.vertices[0]));
        if (rank_int(to_int_rows(edges)) != p.dim)
            throw input_error("vertex set is not full-dimensional");
    }
    std::vector<Facet> hull = convex_hull_facets(p.dim, p.vertices);
    if (p.facets.empty()) {
        p.facets = hull;
    } else {
        std::vector<Facet> given = p.facets;
        for (auto& f : given) {
            if (static_cast<int>(f.normal.size()) != p.dim)
                throw input_error("facet arity mismatch");
            make_primitive(f.normal, &f.offset);
        }
        std::sort(given.begin(), given.end(), facet_less);
        auto eq = [](const Facet& a, const Facet& b) {
            return a.normal == b.normal && a.offset == b.offset;
        };
        if (given.size() != hull.size() ||
            !std::equal(given.begin(), given.end(), hull.begin(), eq))
            throw input_error("facet description does not match the convex hull of the vertices");
        p.facets = std::move(given);
    }
    for (const auto& v : p.vertices)
        if (rank_int(to_int_rows(active_normals(p, v))) != p.dim)
            throw input_error("listed point is not a vertex of the facet region");
    return p;
}

DelzantData delzant_validate(const LatticePolytope& poly) {
    LatticePolytope p = canonicalize_polytope(poly);
    DelzantData d;
    d.vertex_edges.resize(p.vertices.size());
    for (size_t i = 0; i < p.vertices.size(); ++i) {
        const Vec& v = p.vertices[i];
        for (size_t j = 0; j < p.vertices.size(); ++j) {
            if (j == i) continue;
            // v and u span an edge iff their common active facets cut out a line
            std::vector<Vec> common;
            for (const auto& f : p.facets)
                if (dot(f.normal, v) + f.offset == 0 && dot(f.normal, p.vertices[j]) + f.offset == 0)
                    common.push_back(f.normal);
            if (rank_int(to_int_rows(common)) != p.dim - 1) continue;
            Vec e = sub(p.vertices[j], v);
            make_primitive(e);
            auto& edges = d.vertex_edges[i];
            if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
        }
        if (static_cast<int>(d.vertex_edges[i].size()) != p.dim)
            throw input_error("vertex " + std::to_string(i) + " has " +
                              std::to_string(d.vertex_edges[i].size()) + " edges, expected " +
                              std::to_string(p.dim));
        Integer det = det_int(to_int_rows(d.vertex_edges[i]));
        if (det != 1 && det != -1)
            throw input_error("polytope is not smooth at vertex " + std::to_string(i) +
                              " (edge determinant " + to_string(det) + ")");
    }
    d.polytope = std::move(p);
    return d;
}

S1Space circle_restrict(const DelzantData& d, const Vec& xi) {
    if (static_cast<int>(xi.size()) != d.polytope.dim)
        throw input_error("xi arity mismatch");
    S1Space s;
    s.name = "toric";
    s.n = d.polytope.dim;
    for (size_t i = 0; i < d.polytope.vertices.size(); ++i) {
        FixedPoint fp;
        fp.id = "v" + std::to_string(i);
        for (const auto& e : d.vertex_edges[i]) {
            long long w = dot(e, xi);
            if (w == 0) {
                std::string edir;
                for (size_t c = 0; c < e.size(); ++c)
                    edir += (c ? "," : "(") + std::to_string(e[c]);
                throw input_error("xi is not generic: edge " + edir + ") at vertex " +
                                  std::to_string(i) + " pairs to zero");
            }
            fp.weights.emplace_back(static_cast<long>(w));
        }
        s.points.push_back(std::move(fp));
    }
    return s;
}

Integer lattice_count(const LatticePolytope& p, long k) {
    if (k < 0) throw input_error("dilation factor must be nonnegative");
    if (k == 0) return Integer(1); // 0*P is the origin
    const int d = p.dim;
    std::vector<long long> lo(static_cast<size_t>(d)), hi(static_cast<size_t>(d));
    for (int c = 0; c < d; ++c) {
        long long mn = p.vertices[0][static_cast<size_t>(c)], mx = mn;
        for (const auto& v : p.vertices) {
            mn = std::min(mn, v[static_cast<size_t>(c)]);
            mx = std::max(mx, v[static_cast<size_t>(c)]);
        }
        lo[static_cast<size_t>(c)] = mn * k;
        hi[static_cast<size_t>(c)] = mx * k;
    }

    auto count_slice = [&](long long x0_lo, long long x0_hi) -> long long {
        long long count = 0;
        std::vector<long long> x(static_cast<size_t>(d));
        std::function<void(int)> rec = [&](int axis) {
            if (axis == d) {
                for (const auto& f : p.facets)
                    if (dot(f.normal, x) + f.offset * k < 0) return;
                ++count;
                return;
            }
            long long a = (axis == 0) ? x0_lo : lo[static_cast<size_t>(axis)];
            long long b = (axis == 0) ? x0_hi : hi[static_cast<size_t>(axis)];
            for (long long t = a; t <= b; ++t) {
                x[static_cast<size_t>(axis)] = t;
                rec(axis + 1);
            }
        };
        rec(0);
        return count;
    };

    long long span = hi[0] - lo[0] + 1;
    unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(span));
    if (workers <= 1 || span < 8) return Integer(static_cast<long>(count_slice(lo[0], hi[0])));

    std::vector<long long> partial(workers, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        long long a = lo[0] + span * w / workers;
        long long b = lo[0] + span * (w + 1) / workers - 1;
        pool.emplace_back([&, a, b, w] { partial[w] = count_slice(a, b); });
    }
    for (auto& t : pool) t.join();
    Integer total(0);
    for (long long c : partial) total += static_cast<long>(c);
    return total;
}

Poly ehrhart_polynomial(const LatticePolytope& p) {
    std::vector<std::pair<Integer, Rational>> nodes;
    for (long k = 0; k <= p.dim; ++k)
        nodes.emplace_back(Integer(k), Rational(lattice_count(p, k)));
    Poly E = poly_interpolate(nodes);
    for (long k = p.dim + 1; k <= 2 * p.dim; ++k)
        if (E(Rational(k)) != Rational(lattice_count(p, k)))
            throw check_error("Ehrhart interpolation mismatch (internal counting bug)");
    return E;
}

LatticePolytope dilate_translate(const LatticePolytope& p, long k, const Vec& t) {
    LatticePolytope q;
    q.dim = p.dim;
    for (const auto& v : p.vertices) {
        Vec w(v.size());
        for (size_t c = 0; c < v.size(); ++c) w[c] = v[c] * k + t[c];
        q.vertices.push_back(std::move(w));
    }
    for (const auto& f : p.facets) {
        // a.x + kb >= 0 becomes a.(x - t) + kb >= 0 after the shift
        Facet g;
        g.normal = f.normal;
        g.offset = f.offset * k - dot(f.normal, t);
        q.facets.push_back(std::move(g));
    }
    return q;
}

std::optional<ReflexiveDilate> reflexive_dilate(const LatticePolytope& poly) {
    LatticePolytope p = canonicalize_polytope(poly);
    const int d = p.dim;
    for (long k = 1; k <= d + 1; ++k) {
        // interior lattice points of k*P: strict inequalities, i.e. >= 1
        std::vector<Vec> interior;
        std::vector<long long> lo(static_cast<size_t>(d)), hi(static_cast<size_t>(d));
        for (int c = 0; c < d; ++c) {
            long long mn = p.vertices[0][static_cast<size_t>(c)], mx = mn;
            for (const auto& v : p.vertices) {
                mn = std::min(mn, v[static_cast<size_t>(c)]);
                mx = std::max(mx, v[static_cast<size_t>(c)]);
            }
            lo[static_cast<size_t>(c)] = mn * k;
            hi[static_cast<size_t>(c)] = mx * k;
        }
        std::vector<long long> x(static_cast<size_t>(d));
        std::function<void(int)> rec = [&](int axis) {
            if (axis == d) {
                for (const auto& f : p.facets)
                    if (dot(f.normal, x) + f.offset * k < 1) return;
                interior.push_back(x);
                return;
            }
            for (long long t = lo[static_cast<size_t>(axis)]; t <= hi[static_cast<size_t>(axis)]; ++t) {
                x[static_cast<size_t>(axis)] = t;
                rec(axis + 1);
            }
        };
        rec(0);
        if (interior.size() != 1) continue; // reflexivity needs a unique interior point
        const Vec& q = interior[0];
        bool reflexive = true;
        for (const auto& f : p.facets)
            if (f.offset * k + dot(f.normal, q) != 1) reflexive = false;
        if (!reflexive) continue;

        Vec t(q.size());
        for (size_t c = 0; c < q.size(); ++c) t[c] = -q[c];
        ReflexiveDilate out{k, t, dilate_translate(p, k, t)};
        // secondary certificate: Hibi reciprocity on the dilate
        Poly E = ehrhart_polynomial(out.dilate);
        Poly reflected = (d % 2 == 0) ? E.reflect(Rational(1)) : -E.reflect(Rational(1));
        if (!(E == reflected))
            throw check_error("reflexive dilate violates Hibi reciprocity (internal)");
        return out;
    }
    return std::nullopt;
}

bool ehrhart_vs_hilbert(const DelzantData& d, const Vec& xi) {
    auto rd = reflexive_dilate(d.polytope);
    if (!rd) throw input_error("polytope has no reflexive dilate (not of monotone type)");
    S1Space space = circle_restrict(d, xi);
    HilbertPoly H = hilbert_via_index(space, static_cast<int>(rd->k));
    Poly E = ehrhart_polynomial(d.polytope);
    return H.coeffs == E;
}

} // namespace eqloc
