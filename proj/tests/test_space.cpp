#include "doctest.h"

#include <algorithm>
#include <random>

#include "eqloc/catalog.hpp"
#include "eqloc/error.hpp"
#include "eqloc/localization.hpp"
#include "eqloc/space.hpp"

using namespace eqloc;

namespace {

S1Space sphere() {
    return {"S2", 1, {{"n", {Integer(1)}}, {"s", {Integer(-1)}}}, 2, std::nullopt};
}

S1Space cp2() {
    return {"CP2",
            2,
            {{"p0", {Integer(1), Integer(2)}},
             {"p1", {Integer(-1), Integer(1)}},
             {"p2", {Integer(-2), Integer(-1)}}},
            3,
            std::nullopt};
}

bool finding_pass(const ValidationReport& rep, const std::string& prefix) {
    for (const auto& f : rep.findings)
        if (f.check.rfind(prefix, 0) == 0) return f.pass;
    FAIL("no finding with prefix ", prefix);
    return false;
}

} // namespace

TEST_CASE("hard validation errors") {
    S1Space zero_weight{"bad", 1, {{"p", {Integer(0)}}}, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(validate(zero_weight), input_error);
    S1Space empty{"bad", 1, {}, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(validate(empty), input_error);
    S1Space arity{"bad", 2, {{"p", {Integer(1)}}}, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(validate(arity), input_error);
    S1Space dup{"bad", 1, {{"p", {Integer(1)}}, {"p", {Integer(-1)}}}, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(validate(dup), input_error);
}

TEST_CASE("the sphere and CP3 pass, a fake two-point space fails") {
    CHECK(validate(sphere()).all_pass());
    WeightProfile wp = weight_profile(sphere());
    CHECK(wp.N == std::vector<long>{1, 1});

    S1Space cp3 = catalog_emit("CP3", {Integer(1), Integer(2), Integer(3)});
    CHECK(validate(cp3).all_pass());
    CHECK(weight_profile(cp3).N == std::vector<long>{1, 1, 1, 1});

    S1Space fake{"fake",
                 2,
                 {{"p0", {Integer(1), Integer(2)}}, {"p1", {Integer(1), Integer(2)}}},
                 std::nullopt,
                 std::nullopt};
    ValidationReport rep = validate(fake);
    CHECK_FALSE(rep.all_pass());
    CHECK_FALSE(finding_pass(rep, "fixed-point symmetry"));
    CHECK_FALSE(finding_pass(rep, "localization sum of 1"));
    // constant restriction (3, 3) with N_0 = 2 violates the Todd-genus constraint
    CHECK_FALSE(finding_pass(rep, "constant c1 restriction"));
}

TEST_CASE("weight profile fields") {
    WeightProfile wp = weight_profile(cp2());
    CHECK(wp.n_negative == std::map<std::string, int>{{"p0", 0}, {"p1", 1}, {"p2", 2}});
    CHECK(wp.N == std::vector<long>{1, 1, 1});
    CHECK(wp.c1_restriction.at("p0") == 3);
    CHECK(wp.c1_restriction.at("p1") == 0);
    CHECK(wp.c1_restriction.at("p2") == -3);

    WeightProfile sp = weight_profile(sphere());
    CHECK(sp.c1_plus.at("n") == 1);
    CHECK(sp.c1_plus.at("s") == 0);
    CHECK(sp.c1_minus.at("n") == 0);
    CHECK(sp.c1_minus.at("s") == 1);

    // the CP3 table columns: c1+ = (3a+2b+c, 2b+c, c, 0), c1- = (0, a, a+2b, a+2b+3c)
    long a = 2, b = 3, c = 5;
    S1Space cp3 = catalog_emit("CP3", {Integer(a), Integer(b), Integer(c)});
    WeightProfile wp3 = weight_profile(cp3);
    CHECK(wp3.c1_plus.at("p0") == 3 * a + 2 * b + c);
    CHECK(wp3.c1_plus.at("p1") == 2 * b + c);
    CHECK(wp3.c1_plus.at("p2") == c);
    CHECK(wp3.c1_plus.at("p3") == 0);
    CHECK(wp3.c1_minus.at("p0") == 0);
    CHECK(wp3.c1_minus.at("p1") == a);
    CHECK(wp3.c1_minus.at("p2") == a + 2 * b);
    CHECK(wp3.c1_minus.at("p3") == a + 2 * b + 3 * c);

    // c1+ - c1- is the c1 restriction, and vanishing characterizes the extremes
    for (const auto& p : cp3.points) {
        CHECK(wp3.c1_plus.at(p.id) - wp3.c1_minus.at(p.id) == wp3.c1_restriction.at(p.id));
        CHECK((wp3.c1_plus.at(p.id) == 0) == (wp3.n_negative.at(p.id) == cp3.n));
        CHECK((wp3.c1_minus.at(p.id) == 0) == (wp3.n_negative.at(p.id) == 0));
    }
}

TEST_CASE("weight profile ignores weight order") {
    S1Space a = cp2();
    S1Space b = cp2();
    for (auto& p : b.points) std::reverse(p.weights.begin(), p.weights.end());
    WeightProfile wa = weight_profile(a), wb = weight_profile(b);
    CHECK(wa.N == wb.N);
    CHECK(wa.c1_restriction == wb.c1_restriction);
    CHECK(wa.c1_plus == wb.c1_plus);
    CHECK(wa.c1_minus == wb.c1_minus);
}

TEST_CASE("products of spaces") {
    S1Space s2xs2 = product_space(sphere(), sphere(), 2);
    CHECK(s2xs2.points.size() == 4);
    CHECK(weight_profile(s2xs2).N == std::vector<long>{1, 2, 1});
    CHECK(s2xs2.index_k0 == 2);

    S1Space cube = product_space(s2xs2, sphere(), 2);
    CHECK(cube.points.size() == 8);
    CHECK(weight_profile(cube).N == std::vector<long>{1, 3, 3, 1});

    // N_j of a product is the convolution of the factors' profiles
    S1Space a = cp2();
    S1Space prod = product_space(a, s2xs2);
    auto Na = weight_profile(a).N, Nb = weight_profile(s2xs2).N,
         Np = weight_profile(prod).N;
    for (size_t j = 0; j < Np.size(); ++j) {
        long expect = 0;
        for (size_t i = 0; i < Na.size(); ++i)
            if (j >= i && j - i < Nb.size()) expect += Na[i] * Nb[j - i];
        CHECK(Np[j] == expect);
    }
    CHECK(prod.points.size() == a.points.size() * s2xs2.points.size());
    CHECK_FALSE(prod.index_k0.has_value());
}

TEST_CASE("fixed point count equals c_n across the catalog") {
    for (const std::string key : {"Flag3", "CP1xCP2"}) {
        S1Space s = catalog_emit(key, {});
        std::vector<int> part{s.n};
        Integer cn = chern_number(s, ChernPartition::of(part, s.n));
        WeightProfile wp = weight_profile(s);
        long sum = 0;
        for (long nj : wp.N) sum += nj;
        CHECK(cn == sum);
        CHECK(cn == static_cast<long>(s.points.size()));
    }
}
