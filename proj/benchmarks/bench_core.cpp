#include <benchmark/benchmark.h>

#include <partbias/asymptotics.hpp>
#include <partbias/bias_table.hpp>
#include <partbias/qseries.hpp>
#include <partbias/saddle.hpp>

using namespace partbias;

static void BM_CountBiasTable(benchmark::State& state) {
    const ResidueConfig cfg(2, 0, 1, 2);
    const long n_max = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_bias_table(cfg, n_max));
    }
    state.SetComplexityN(n_max);
}
BENCHMARK(BM_CountBiasTable)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Complexity();

static void BM_CountBiasTableMod3(benchmark::State& state) {
    const ResidueConfig cfg(3, 0, 1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_bias_table(cfg, state.range(0)));
    }
}
BENCHMARK(BM_CountBiasTableMod3)->Arg(500)->Arg(1000);

static void BM_NahmLatticeOracle(benchmark::State& state) {
    const ResidueConfig cfg(3, 0, 1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nahm_lattice_oracle(cfg, state.range(0)));
    }
}
BENCHMARK(BM_NahmLatticeOracle)->Arg(20)->Arg(40)->Arg(60);

static void BM_EnumerateOracle(benchmark::State& state) {
    const ResidueConfig cfg(2, 0, 1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_oracle(cfg, state.range(0)));
    }
}
BENCHMARK(BM_EnumerateOracle)->Arg(30)->Arg(45)->Arg(60);

static void BM_CPolynomials(benchmark::State& state) {
    const ResidueConfig cfg(2, 0, 1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(c_polynomials(cfg, state.range(0)));
    }
}
BENCHMARK(BM_CPolynomials)->Arg(4)->Arg(6)->Arg(8);

static void BM_ExpansionLadder(benchmark::State& state) {
    const ResidueConfig cfg(2, 0, 1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(e_coefficients_residue(cfg, 1, state.range(0), 128));
    }
}
BENCHMARK(BM_ExpansionLadder)->Arg(2)->Arg(4)->Arg(6);

static void BM_FullSeriesEstimate(benchmark::State& state) {
    const ResidueConfig cfg(2, 0, 1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(full_series_estimate(cfg, 2000, state.range(0), 128));
    }
}
BENCHMARK(BM_FullSeriesEstimate)->Arg(2)->Arg(4);

static void BM_GFunctionNumeric(benchmark::State& state) {
    const ResidueConfig cfg(2, 0, 1, 2);
    const LatticeClass ell({1, 0}, 2);
    EvaluationPoint p;
    mpq_class eps(1, state.range(0));
    p.epsilon = Real(eps, 128);
    p.y = Real(0, 128);
    p.precision = 128;
    for (auto _ : state) {
        benchmark::DoNotOptimize(g_function_numeric(cfg, ell, p));
    }
}
BENCHMARK(BM_GFunctionNumeric)->Arg(13)->Arg(25)->Arg(50);

BENCHMARK_MAIN();
