#include "eqloc/localization.hpp"

#include <algorithm>

#include "eqloc/error.hpp"
#include "eqloc/rational_fn.hpp"
#include "eqloc/symmetric.hpp"

namespace eqloc {

ChernPartition ChernPartition::of(std::vector<int> parts, int n) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    int sum = 0;
    for (int p : parts) {
        if (p < 1) throw input_error("partition parts must be positive");
        sum += p;
    }
    if (sum != n) throw input_error("partition must sum to n");
    return ChernPartition{std::move(parts)};
}

BundleRestriction trivial_bundle(const S1Space& space) {
    BundleRestriction b;
    for (const auto& p : space.points) b.a[p.id] = 0;
    return b;
}

BundleRestriction scale_bundle(const BundleRestriction& b, const Integer& k) {
    BundleRestriction r;
    for (const auto& [id, a] : b.a) r.a[id] = a * k;
    return r;
}

BundleRestriction canonical_bundle(const S1Space& space) {
    BundleRestriction b;
    for (const auto& p : space.points) {
        Integer s(0);
        for (const auto& w : p.weights) s += w;
        b.a[p.id] = -s;
    }
    return b;
}

namespace {

Integer weight_product(const FixedPoint& p) {
    Integer prod(1);
    for (const auto& w : p.weights) prod *= w;
    return prod;
}

void require_total(const S1Space& space, const BundleRestriction& bundle) {
    for (const auto& p : space.points)
        if (!bundle.a.count(p.id))
            throw input_error("bundle restriction missing at fixed point '" + p.id + "'");
}

} // namespace

Rational localize_chern_poly(const S1Space& space, const ChernPoly& cls, int extra_c1_power) {
    validate_structure(space);
    Rational total(0);
    for (const auto& p : space.points) {
        auto sigma = elementary_symmetric_all(p.weights);
        Rational numer(0);
        for (const auto& [mono, coef] : cls) {
            Integer prod(1);
            for (int part : mono) prod *= sigma[static_cast<size_t>(part)];
            numer += coef * Rational(prod);
        }
        if (extra_c1_power > 0)
            numer *= Rational(pow_integer(sigma[1], static_cast<unsigned long>(extra_c1_power)));
        total += numer / Rational(weight_product(p));
    }
    return total;
}

Integer chern_number(const S1Space& space, const ChernPartition& part) {
    ChernPoly cls = {{part.parts, Rational(1)}};
    Rational v = localize_chern_poly(space, cls);
    if (!is_integer(v)) throw check_error("localization sum not integral");
    return v.get_num();
}

Rational mixed_chern_todd(const S1Space& space, int h) {
    if (h < 0 || h > space.n) throw input_error("h out of range");
    const auto& T = todd_polynomials(space.n);
    return localize_chern_poly(space, T[static_cast<size_t>(space.n - h)], h);
}

namespace {

// One Atiyah-Segal summand (or partial sum) in cleared form:
//
//   sign-absorbed numerator / prod_{w in den} (1 - t^w),  all w > 0.
//
// Each factor 1/(1-t^{-w}) with w > 0 is rewritten as -t^w/(1-t^w), so the
// whole denominator is a multiset of positive exponents.  Cancellation is
// exact trial division by the binomials, which is complete here: if the full
// product divides the numerator, dividing out one factor at a time succeeds.
struct ClearedFrac {
    LaurentPoly num;
    std::map<long, int> den;
};

ClearedFrac summand(const FixedPoint& p, const Integer& a_p) {
    ClearedFrac f;
    long shift_extra = 0;
    int negations = 0;
    std::map<long, int> den;
    for (const auto& w : p.weights) {
        if (!w.fits_slong_p()) throw input_error("weight too large for index computation");
        long wl = w.get_si();
        if (wl > 0) {
            ++negations;
            shift_extra += wl;
            den[wl] += 1;
        } else {
            den[-wl] += 1;
        }
    }
    if (!a_p.fits_slong_p()) throw input_error("bundle exponent too large");
    Rational sign((negations % 2 == 0) ? 1 : -1);
    f.num = LaurentPoly::term(sign, a_p.get_si() + shift_extra);
    f.den = std::move(den);
    return f;
}

void reduce(ClearedFrac& f) {
    for (auto it = f.den.begin(); it != f.den.end();) {
        while (it->second > 0) {
            auto [ok, q] = f.num.divide_one_minus_tw(it->first);
            if (!ok) break;
            f.num = std::move(q);
            --it->second;
        }
        it = (it->second == 0) ? f.den.erase(it) : std::next(it);
    }
}

ClearedFrac add(const ClearedFrac& a, const ClearedFrac& b) {
    ClearedFrac r;
    for (const auto& [w, m] : a.den) r.den[w] = m;
    for (const auto& [w, m] : b.den) r.den[w] = std::max(r.den[w], m);

    auto lift = [&](const ClearedFrac& f) {
        LaurentPoly num = f.num;
        for (const auto& [w, m] : r.den) {
            int have = 0;
            if (auto it = f.den.find(w); it != f.den.end()) have = it->second;
            for (int i = have; i < m; ++i) {
                LaurentPoly factor = LaurentPoly::constant(Rational(1)) -
                                     LaurentPoly::term(Rational(1), w);
                num = num * factor;
            }
        }
        return num;
    };

    r.num = lift(a) + lift(b);
    reduce(r);
    if (r.num.is_zero()) r.den.clear();
    return r;
}

} // namespace

LaurentPoly atiyah_segal_index(const S1Space& space, const BundleRestriction& bundle) {
    validate_structure(space);
    require_total(space, bundle);
    ClearedFrac acc;
    acc.num = LaurentPoly();
    bool first = true;
    for (const auto& p : space.points) {
        ClearedFrac s = summand(p, bundle.a.at(p.id));
        reduce(s);
        if (first) {
            acc = std::move(s);
            first = false;
        } else {
            acc = add(acc, s);
        }
    }
    if (!acc.den.empty()) throw check_error("not a Laurent polynomial");
    return acc.num;
}

Integer index_at_one(const S1Space& space, const BundleRestriction& bundle) {
    return as_integer(atiyah_segal_index(space, bundle).at_one(), "index at t=1");
}

bool is_dominated(const S1Space& space, const BundleRestriction& tau, DominationSide side) {
    require_total(space, tau);
    WeightProfile wp = weight_profile(space);
    for (const auto& p : space.points) {
        const Integer& t = tau.a.at(p.id);
        if (side == DominationSide::plus) {
            if (t > wp.c1_plus.at(p.id)) return false;
        } else {
            if (-t > wp.c1_minus.at(p.id)) return false;
        }
    }
    return true;
}

LimitIndexResult limit_index(const S1Space& space, const BundleRestriction& tau, LimitPoint at) {
    DominationSide side = (at == LimitPoint::zero) ? DominationSide::plus : DominationSide::minus;
    if (!is_dominated(space, tau, side)) throw check_error("not dominated");
    WeightProfile wp = weight_profile(space);

    Rational predicted(0);
    for (const auto& p : space.points) {
        int lambda = wp.n_negative.at(p.id);
        const Integer& t = tau.a.at(p.id);
        if (at == LimitPoint::zero) {
            if (t == wp.c1_plus.at(p.id))
                predicted += Rational(((space.n - lambda) % 2 == 0) ? 1 : -1);
        } else {
            if (-t == wp.c1_minus.at(p.id)) predicted += Rational((lambda % 2 == 0) ? 1 : -1);
        }
    }

    BundleRestriction neg;
    for (const auto& [id, a] : tau.a) neg.a[id] = -a;
    LaurentPoly index = atiyah_segal_index(space, neg);

    Rational analytic;
    if (index.is_zero()) {
        analytic = 0;
    } else if (at == LimitPoint::zero) {
        if (index.min_exp() < 0) throw check_error("unbounded limit");
        analytic = index.coeff(0);
    } else {
        if (index.max_exp() > 0) throw check_error("unbounded limit");
        analytic = index.coeff(0);
    }
    if (analytic != predicted)
        throw check_error("limit of index differs from fixed-point prediction: " +
                          to_string(analytic) + " vs " + to_string(predicted));
    return {analytic, predicted, index};
}

bool VanishingReport::all_vanish() const {
    return std::all_of(vanishes.begin(), vanishes.end(),
                       [](const auto& hv) { return hv.second; });
}

VanishingReport verify_vanishing_range(const S1Space& space, const BundleRestriction& eta, int k) {
    if (k < 1) throw input_error("k must be positive");
    require_total(space, eta);
    WeightProfile wp = weight_profile(space);
    VanishingReport rep;
    bool have_c = false;
    for (const auto& p : space.points) {
        Integer c = wp.c1_restriction.at(p.id) - Integer(k) * eta.a.at(p.id);
        if (!have_c) {
            rep.constant_c = c;
            have_c = true;
        } else if (c != rep.constant_c) {
            throw check_error("eta inconsistent with k");
        }
    }
    for (int h = 1; h <= k - 1; ++h) {
        BundleRestriction b = scale_bundle(eta, Integer(-h));
        LaurentPoly ind = atiyah_segal_index(space, b);
        bool zero = ind.is_zero();
        rep.vanishes.emplace_back(h, zero);
        if (!zero) throw check_error("vanishing theorem violated at h = " + std::to_string(h));
    }
    return rep;
}

} // namespace eqloc
