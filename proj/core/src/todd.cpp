#include "eqloc/todd.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "eqloc/error.hpp"

namespace eqloc {

int chern_weight(const ChernMonomial& m) {
    int w = 0;
    for (int p : m) w += p;
    return w;
}

namespace {

ChernMonomial merge_monomials(const ChernMonomial& a, const ChernMonomial& b) {
    ChernMonomial m;
    m.reserve(a.size() + b.size());
    m.insert(m.end(), a.begin(), a.end());
    m.insert(m.end(), b.begin(), b.end());
    std::sort(m.begin(), m.end(), std::greater<int>());
    return m;
}

void add_to(ChernPoly& p, const ChernMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = p.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

} // namespace

ChernPoly chern_mul(const ChernPoly& a, const ChernPoly& b, int max_weight, int max_part) {
    ChernPoly out;
    for (const auto& [ma, ca] : a) {
        int wa = chern_weight(ma);
        for (const auto& [mb, cb] : b) {
            if (wa + chern_weight(mb) > max_weight) continue;
            ChernMonomial m = merge_monomials(ma, mb);
            if (!m.empty() && m.front() > max_part) continue; // e_j = 0 beyond rank
            add_to(out, m, ca * cb);
        }
    }
    return out;
}

namespace {

// Power sums p_k written in the elementary symmetric basis via Newton's
// identity p_k = (-1)^{k-1} k e_k + sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i}.
std::vector<ChernPoly> power_sums_in_e(int n) {
    std::vector<ChernPoly> p(static_cast<size_t>(n) + 1);
    p[0] = {}; // unused
    for (int k = 1; k <= n; ++k) {
        ChernPoly pk;
        if (k <= n) add_to(pk, {k}, Rational((k % 2 == 1) ? k : -k));
        for (int i = 1; i < k; ++i) {
            ChernPoly ei = {{ChernMonomial{i}, Rational((i % 2 == 1) ? 1 : -1)}};
            ChernPoly term = chern_mul(ei, p[static_cast<size_t>(k - i)], n, n);
            for (const auto& [m, c] : term) add_to(pk, m, c);
        }
        p[static_cast<size_t>(k)] = std::move(pk);
    }
    return p;
}

std::vector<ChernPoly> compute_todd(int n) {
    // Series of (1-e^{-x})/x is sum_j (-1)^j x^j/(j+1)!; take -log of it to
    // get log(x/(1-e^{-x})) = sum_k gamma_k x^k, then
    // prod_i x_i/(1-e^{-x_i}) = exp(sum_k gamma_k p_k).
    std::vector<Rational> g(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        g[static_cast<size_t>(j)] =
            Rational((j % 2 == 0) ? 1 : -1) / Rational(factorial(static_cast<unsigned long>(j) + 1));
    std::vector<Rational> logg(static_cast<size_t>(n) + 1, Rational(0));
    for (int m = 1; m <= n; ++m) {
        Rational acc = g[static_cast<size_t>(m)];
        for (int k = 1; k < m; ++k)
            acc -= logg[static_cast<size_t>(k)] * g[static_cast<size_t>(m - k)] *
                   Rational(k) / Rational(m);
        logg[static_cast<size_t>(m)] = acc;
    }

    // exp(sum_m gamma_m p_m) in the power-sum basis, truncated at weight n
    // (monomials in p are again encoded as partitions).
    ChernPoly expo = {{ChernMonomial{}, Rational(1)}};
    for (int m = 1; m <= n; ++m) {
        Rational gamma = -logg[static_cast<size_t>(m)];
        if (gamma == 0) continue;
        ChernPoly factor = {{ChernMonomial{}, Rational(1)}};
        Rational power(1);
        ChernMonomial mono;
        for (int i = 1; i * m <= n; ++i) {
            power *= gamma / Rational(i);
            mono.push_back(m);
            ChernMonomial key = mono;
            std::sort(key.begin(), key.end(), std::greater<int>());
            add_to(factor, key, power);
        }
        expo = chern_mul(expo, factor, n, n);
    }

    // convert the p-basis expansion to the e-basis
    auto p_in_e = power_sums_in_e(n);
    ChernPoly total = {};
    for (const auto& [pmono, coef] : expo) {
        ChernPoly prod = {{ChernMonomial{}, coef}};
        for (int part : pmono) prod = chern_mul(prod, p_in_e[static_cast<size_t>(part)], n, n);
        for (const auto& [m, c] : prod) add_to(total, m, c);
    }

    std::vector<ChernPoly> T(static_cast<size_t>(n) + 1);
    for (const auto& [m, c] : total) add_to(T[static_cast<size_t>(chern_weight(m))], m, c);
    return T;
}

} // namespace

const std::vector<ChernPoly>& todd_polynomials(int n) {
    if (n < 0) throw input_error("todd_polynomials: n must be nonnegative");
    static std::mutex mu;
    static std::map<int, std::vector<ChernPoly>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_todd(n)).first;
    return it->second;
}

std::string chern_poly_str(const ChernPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p) {
        if (!first) out << " + ";
        out << "(" << to_string(c) << ")";
        for (int part : m) out << "*c" << part;
        first = false;
    }
    return out.str();
}

} // namespace eqloc
