#include "qh/complexity.hpp"
#include "qh/linalg.hpp"
#include "qh/partition.hpp"
#include "qh/rings.hpp"
#include "qh/verify.hpp"

#include <benchmark/benchmark.h>

using namespace qh;

static void BM_LrCoefficient(benchmark::State& st)
{
    Partition l{4, 2, 1}, m{3, 2, 1}, n{6, 4, 2, 1};
    for (auto _ : st) benchmark::DoNotOptimize(lr_coefficient(l, m, n));
}
BENCHMARK(BM_LrCoefficient);

static void BM_BuildGrassmannian(benchmark::State& st)
{
    const int k = static_cast<int>(st.range(0)), n = static_cast<int>(st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(grassmannian(k, n));
}
BENCHMARK(BM_BuildGrassmannian)->Args({2, 6})->Args({3, 6})->Args({3, 7})->Unit(benchmark::kMillisecond);

static void BM_DeltaClosedForm(benchmark::State& st)
{
    for (auto _ : st) benchmark::DoNotOptimize(delta_closed_form(3, 8));
}
BENCHMARK(BM_DeltaClosedForm)->Unit(benchmark::kMillisecond);

static void BM_Trajectory(benchmark::State& st)
{
    FrobeniusRing r = grassmannian(3, 7);
    RatMatrix m = mult_matrix(r, handle_element(r));
    ProjState one(r.unit().at_q(1));
    for (auto _ : st) benchmark::DoNotOptimize(trajectory(m, one, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_Trajectory)->Arg(50)->Arg(350)->Unit(benchmark::kMillisecond);

static void BM_FSpanDim(benchmark::State& st)
{
    FrobeniusRing r = grassmannian(3, 7);
    for (auto _ : st) benchmark::DoNotOptimize(f_span_dim(r));
}
BENCHMARK(BM_FSpanDim)->Unit(benchmark::kMillisecond);

static void BM_CharPoly(benchmark::State& st)
{
    std::mt19937_64 rng(1);
    RatMatrix m = random_rational_matrix(rng, static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(6)->Arg(12)->Unit(benchmark::kMicrosecond);

static void BM_LimitPointsReal(benchmark::State& st)
{
    std::mt19937_64 rng(2);
    SpectralSample s = random_spectral_sample(rng);
    for (auto _ : st) benchmark::DoNotOptimize(limit_points_real(s.m, s.z));
}
BENCHMARK(BM_LimitPointsReal)->Unit(benchmark::kMicrosecond);

static void BM_SInfinityTheta(benchmark::State& st)
{
    FrobeniusRing r = grassmannian(2, 7);
    ProjState one(r.unit().at_q(1));
    for (auto _ : st) benchmark::DoNotOptimize(s_infinity(r, one));
}
BENCHMARK(BM_SInfinityTheta)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
