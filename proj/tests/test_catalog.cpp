#include "doctest.h"

#include "eqloc/catalog.hpp"
#include "eqloc/error.hpp"
#include "eqloc/hilbert.hpp"
#include "eqloc/localization.hpp"
#include "eqloc/roots.hpp"

using namespace eqloc;

namespace {
Rational q(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }
} // namespace

TEST_CASE("catalog selftest is clean") {
    for (const auto& r : catalog_selftest()) {
        INFO(r.entry);
        for (const auto& f : r.report.findings) {
            INFO(f.check, ": ", f.detail);
            CHECK(f.pass);
        }
    }
}

TEST_CASE("emit parameter validation") {
    CHECK_THROWS_AS(catalog_emit("CP3", {Integer(2), Integer(4), Integer(3)}), input_error);
    CHECK_THROWS_AS(catalog_emit("CP3", {Integer(-1), Integer(2), Integer(3)}), input_error);
    CHECK_THROWS_AS(catalog_emit("Hirzebruch", {Integer(1), Integer(1), Integer(1)}),
                    input_error); // m = k*l collapses an edge pairing
    CHECK_THROWS_AS(catalog_emit("Hirzebruch", {Integer(2), Integer(2), Integer(4)}),
                    input_error); // not coprime
    CHECK_THROWS_AS(catalog_emit("V5", {}), input_error); // fixture has no weights
    CHECK_THROWS_AS(catalog_emit("nope", {}), input_error);
    CHECK_THROWS_AS(catalog_emit("CPn", {Integer(3), Integer(1), Integer(1), Integer(2)}),
                    input_error); // repeated exponents
}

TEST_CASE("Hirzebruch facts") {
    S1Space even = catalog_emit("Hirzebruch", {Integer(2), Integer(1), Integer(1)});
    CHECK(weight_profile(even).N == std::vector<long>{1, 2, 1});
    CHECK(chern_number(even, ChernPartition::of({1, 1}, 2)) == 8);
    CHECK(even.index_k0 == 2);

    S1Space odd = catalog_emit("Hirzebruch", {Integer(3), Integer(1), Integer(5)});
    CHECK(odd.index_k0 == 1);
    CHECK(chern_number(odd, ChernPartition::of({1, 1}, 2)) == 8);
    // with l and m odd the c1 restrictions mix parity, so k0 = 2 has no residue
    CHECK_THROWS_AS(solve_eta(odd, 2), check_error);
}

TEST_CASE("flag manifold numbers") {
    S1Space flag = catalog_emit("Flag3", {});
    CHECK(chern_number(flag, ChernPartition::of({2, 1}, 3)) == 24);
    CHECK(mixed_chern_todd(flag, 0) == q(1));
    CHECK(index_at_one(flag, trivial_bundle(flag)) == 1);
}

TEST_CASE("the flag and the non-Kaehler fixture are rigidity twins") {
    S1Space flag = catalog_emit("Flag3", {});
    HilbertPoly hf = hilbert_both(flag, 2);
    HilbertPoly hk = catalog_fixture("nK");

    // same index, same fixed point profile
    CHECK(hf.k0 == hk.k0);
    CHECK(weight_profile(flag).N == std::vector<long>{1, 2, 2, 1});
    CHECK(hk.N0 == 1);

    // both clear every rigidity and generating-function check
    CHECK(check_rigidity(hf).all_pass());
    CHECK(check_rigidity(hk).all_pass());
    CHECK(generating_function(hf).checks.all_pass());
    CHECK(generating_function(hk).checks.all_pass());
    CHECK(root_analysis(hf).on_cross);
    CHECK(root_analysis(hk).on_cross);

    // yet the spaces differ: the invariants cannot separate them
    CHECK(hf.c1n() == q(48));
    CHECK(hk.c1n() == q(64));
    CHECK_FALSE(hf.coeffs == hk.coeffs);
}

TEST_CASE("vanishing ranges across the projective family") {
    for (long n = 2; n <= 5; ++n) {
        S1Space cpn = catalog_emit("CPn", {Integer(n)});
        EtaSolution sol = solve_eta(cpn, static_cast<int>(n + 1));
        CHECK(verify_vanishing_range(cpn, sol.eta, static_cast<int>(n + 1)).all_vanish());
    }
}

TEST_CASE("fixture parameters recovered from the generating function") {
    GenFnData v5 = generating_function(catalog_fixture("V5"));
    CHECK(v5.U.coeff(1) == q(3));
    GenFnData v22 = generating_function(catalog_fixture("V22"));
    CHECK(v22.U.coeff(1) == q(10));
    GenFnData nk = generating_function(catalog_fixture("nK"));
    CHECK(nk.U.coeff(1) == q(6));
}
