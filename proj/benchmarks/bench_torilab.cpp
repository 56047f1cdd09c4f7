#include <benchmark/benchmark.h>

#include "torilab/betti.hpp"
#include "torilab/coinvariant.hpp"
#include "torilab/symfunc.hpp"
#include "torilab/tori.hpp"

using namespace torilab;

namespace {

void BM_PolyGcd(benchmark::State& state) {
    Poly a(1), b(1);
    for (int k = 1; k <= 8; ++k) a *= Poly(1) - Poly::monomial(k, Rational(1));
    for (int k = 2; k <= 9; ++k) b *= Poly(1) - Poly::monomial(k, Rational(1));
    for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_PolyGcd);

void BM_GradedCharBc(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(graded_char_bc(n));
}
BENCHMARK(BM_GradedCharBc)->Arg(4)->Arg(6);

void BM_GradedCharTable(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(graded_char_table(Family::BC, n, 12));
}
BENCHMARK(BM_GradedCharTable)->Arg(8)->Arg(12);

void BM_MnCharacterColumn(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto lambdas = enumerate_partitions(n);
    Partition mu({n});
    for (auto _ : state) {
        long long acc = 0;
        for (const auto& lam : lambdas) acc += mn_character(lam, mu);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_MnCharacterColumn)->Arg(8)->Arg(10);

void BM_StatisticSumSymbolic(benchmark::State& state) {
    CharacterPolynomial P = charpoly_sym2cn();
    for (auto _ : state) benchmark::DoNotOptimize(statistic_sum(Family::BC, P, 4));
}
BENCHMARK(BM_StatisticSumSymbolic);

void BM_BettiPipeline(benchmark::State& state) {
    CharacterPolynomial P = charpoly_wedge3cn();
    for (auto _ : state) {
        BettiGF g = stable_betti_gf(P);
        auto coeffs = betti_coeffs(g, 40);
        auto rec = recurrence(g);
        auto qp = quasipolynomial(g);
        benchmark::DoNotOptimize(coeffs);
        benchmark::DoNotOptimize(rec);
        benchmark::DoNotOptimize(qp);
    }
}
BENCHMARK(BM_BettiPipeline);

void BM_LehrerVerifyBc(benchmark::State& state) {
    ClassFunction chi = ClassFunction::from_charpoly(Family::BC, 3, charpoly_wedge2cn());
    for (auto _ : state) benchmark::DoNotOptimize(lehrer_verify(chi));
}
BENCHMARK(BM_LehrerVerifyBc);

} // namespace

BENCHMARK_MAIN();
