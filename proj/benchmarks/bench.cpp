#include "hh/bar.hpp"
#include "hh/factorization.hpp"
#include "hh/homology.hpp"

#include <benchmark/benchmark.h>

using namespace hh;

static void BM_BuildDifferential(benchmark::State& state) {
    auto space = standard_model("circle_minimal");
    auto dual = GradedAlgebra::builtin("dual_numbers");
    int n_min = -(int)state.range(0);
    for (auto _ : state) {
        HochschildComplex c(space, dual, {.n_min = n_min});
        for (int n = n_min; n < 0; ++n) benchmark::DoNotOptimize(c.total_differential(n));
    }
}
BENCHMARK(BM_BuildDifferential)->Arg(3)->Arg(4)->Arg(5);

static void BM_HomologyDims(benchmark::State& state) {
    auto space = standard_model("circle_two_cell");
    auto dual = GradedAlgebra::builtin("dual_numbers");
    int n_min = -(int)state.range(0);
    for (auto _ : state) {
        HochschildComplex c(space, dual, {.n_min = n_min});
        benchmark::DoNotOptimize(homology_dims(view_of(c), n_min));
    }
}
BENCHMARK(BM_HomologyDims)->Arg(3)->Arg(4);

static void BM_NormalizedTorus(benchmark::State& state) {
    auto space = standard_model("torus_glued");
    auto ext = GradedAlgebra::builtin("exterior1");
    int n_min = -(int)state.range(0);
    for (auto _ : state) {
        HochschildComplex c(space, ext, {.n_min = n_min, .normalized = true});
        benchmark::DoNotOptimize(homology_dims(view_of(c), n_min));
    }
}
BENCHMARK(BM_NormalizedTorus)->Arg(2);

static void BM_ShuffleProduct(benchmark::State& state) {
    auto space = standard_model("circle_minimal");
    auto koszul = GradedAlgebra::builtin("koszul");
    HochschildComplex c(space, koszul, {.n_min = -4});
    Chain u{&c, {}}, v{&c, {}};
    u.add(BlockKey{2, -2}, 0, rat(1));
    u.normalize();
    v.add(BlockKey{2, -1}, 0, rat(1));
    v.normalize();
    for (auto _ : state) benchmark::DoNotOptimize(shuffle_product(u, v));
}
BENCHMARK(BM_ShuffleProduct);

static void BM_BarHomology(benchmark::State& state) {
    auto dual = GradedAlgebra::builtin("dual_numbers");
    auto env = enveloping_module(dual);
    int cap = (int)state.range(0);
    for (auto _ : state) {
        BarComplex bar(env.module, env.ring, env.module, {.n_min = -4, .cap = cap});
        benchmark::DoNotOptimize(bar.homology_dims());
    }
}
BENCHMARK(BM_BarHomology)->Arg(6)->Arg(8);

static void BM_CechTwoArc(benchmark::State& state) {
    auto circle = standard_model("circle_two_cell");
    auto ext = GradedAlgebra::builtin("exterior1");
    auto cover = make_cover(circle, {{"U1", {0, 1, 2}}, {"U2", {0, 1, 3}}});
    for (auto _ : state) {
        CechComplex cech(cover, ext, {.n_min = -2, .cap = 4});
        benchmark::DoNotOptimize(cech.homology_dims());
    }
}
BENCHMARK(BM_CechTwoArc);

BENCHMARK_MAIN();
