#include <benchmark/benchmark.h>

#include "fanocalc/bott.hpp"
#include "fanocalc/forms.hpp"
#include "fanocalc/hodge.hpp"
#include "fanocalc/linalg.hpp"
#include "fanocalc/pfaffian.hpp"
#include "fanocalc/rng.hpp"
#include "fanocalc/schur.hpp"
#include "fanocalc/weights.hpp"

using namespace fano;

static void BM_BottCohomology(benchmark::State& state) {
    const bott::GrassmannianBundle b(8, 2, IntWeight({3, 1, 0, 0, -2, -4}), IntWeight({9, 2}));
    for (auto _ : state) benchmark::DoNotOptimize(bott::cohomology(b));
}
BENCHMARK(BM_BottCohomology);

static void BM_WeylDim(benchmark::State& state) {
    const IntWeight lambda({9, 7, 4, 4, 2, 1, 0, -3});
    for (auto _ : state) benchmark::DoNotOptimize(weyl_dim(lambda, 8));
}
BENCHMARK(BM_WeylDim);

static void BM_LrCoefficients(benchmark::State& state) {
    const Partition mu({3, 2, 1}), nu({3, 2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(lr_coefficients(mu, nu));
}
BENCHMARK(BM_LrCoefficients);

static void BM_Rank2ExtPower(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(schur::rank2_ext_power(static_cast<int>(state.range(0)),
                                                        static_cast<int>(state.range(0)) / 2));
}
BENCHMARK(BM_Rank2ExtPower)->Arg(4)->Arg(8)->Arg(12);

static void BM_TwoColumnSchur(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(schur::two_column_schur(3, 2, 8));
}
BENCHMARK(BM_TwoColumnSchur);

static void BM_KoszulPageOF(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hodge::koszul_page(8, 4, hodge::twist_trivial(8)));
}
BENCHMARK(BM_KoszulPageOF);

static void BM_Pfaffian12(benchmark::State& state) {
    Rng rng(1);
    pfaff::SkewQ m(12);
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j)
            m.set(i, j, Rational(rng.range(-9, 9)), [](const Rational& v) { return -v; });
    for (auto _ : state) benchmark::DoNotOptimize(pfaff::pfaffian(m));
}
BENCHMARK(BM_Pfaffian12);

static void BM_TwoRankAlpha4(benchmark::State& state) {
    const auto f = forms::alpha4_as_form();
    for (auto _ : state) benchmark::DoNotOptimize(forms::two_rank(f));
}
BENCHMARK(BM_TwoRankAlpha4);

static void BM_ClassifyRandom4Form(benchmark::State& state) {
    Rng rng(kDefaultSeed);
    const auto f = forms::random_form(4, 7, rng);
    for (auto _ : state) benchmark::DoNotOptimize(forms::classify_orbit(f));
}
BENCHMARK(BM_ClassifyRandom4Form);

static void BM_GriffithsPhiRank(benchmark::State& state) {
    const auto f = hodge::random_form_fp(8, 4, kDefaultPrime, kDefaultSeed);
    for (auto _ : state) benchmark::DoNotOptimize(hodge::griffiths_phi_rank(f));
}
BENCHMARK(BM_GriffithsPhiRank);

static void BM_CubicMultiplicationCorank(benchmark::State& state) {
    const auto f = hodge::random_form_fp(6, 3, kDefaultPrime, kDefaultSeed);
    for (auto _ : state) benchmark::DoNotOptimize(hodge::jacobian_multiplication_corank(f, 2));
}
BENCHMARK(BM_CubicMultiplicationCorank);

static void BM_PencilKernelHull(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(pfaff::run_hull_trials(n, 1, 1, kDefaultSeed, kDefaultPrime));
}
BENCHMARK(BM_PencilKernelHull)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
