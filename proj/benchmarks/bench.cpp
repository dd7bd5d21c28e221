#include <benchmark/benchmark.h>

#include "eqloc/catalog.hpp"
#include "eqloc/hilbert.hpp"
#include "eqloc/localization.hpp"
#include "eqloc/polytope.hpp"

using namespace eqloc;

namespace {

S1Space cpn(long n) { return catalog_emit("CPn", {Integer(n)}); }

void AtiyahSegalIndex(benchmark::State& state) {
    S1Space s = cpn(state.range(0));
    EtaSolution sol = solve_eta(s, static_cast<int>(state.range(0)) + 1);
    BundleRestriction b = scale_bundle(sol.eta, Integer(3));
    for (auto _ : state) {
        LaurentPoly ind = atiyah_segal_index(s, b);
        benchmark::DoNotOptimize(ind);
    }
}
BENCHMARK(AtiyahSegalIndex)->DenseRange(2, 6);

void ChernNumberTop(benchmark::State& state) {
    S1Space s = catalog_emit("ProductOfSpheres", {Integer(state.range(0))});
    std::vector<int> ones(static_cast<size_t>(state.range(0)), 1);
    ChernPartition part = ChernPartition::of(ones, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Integer v = chern_number(s, part);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(ChernNumberTop)->DenseRange(2, 6);

void HilbertBothRoutes(benchmark::State& state) {
    S1Space s = cpn(state.range(0));
    for (auto _ : state) {
        HilbertPoly h = hilbert_both(s, static_cast<int>(state.range(0)) + 1);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(HilbertBothRoutes)->DenseRange(2, 5);

void LatticeCountCube(benchmark::State& state) {
    LatticePolytope cube{3,
                         {{0, 0, 0},
                          {1, 0, 0},
                          {0, 1, 0},
                          {0, 0, 1},
                          {1, 1, 0},
                          {1, 0, 1},
                          {0, 1, 1},
                          {1, 1, 1}},
                         {}};
    LatticePolytope p = canonicalize_polytope(cube);
    for (auto _ : state) {
        Integer c = lattice_count(p, state.range(0));
        benchmark::DoNotOptimize(c);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(LatticeCountCube)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void ReflexiveSearch(benchmark::State& state) {
    LatticePolytope simplex3{3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {}};
    for (auto _ : state) {
        auto rd = reflexive_dilate(simplex3);
        benchmark::DoNotOptimize(rd);
    }
}
BENCHMARK(ReflexiveSearch);

} // namespace

BENCHMARK_MAIN();
