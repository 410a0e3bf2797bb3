#include "hopfmzv/hopfmzv.hpp"

#include <benchmark/benchmark.h>

using namespace hopfmzv;

static void BM_ShuffleOnes(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Word a = encode_word(Composition::ones(n)), b = encode_word(Composition{2, 1, static_cast<Part>(n)});
    for (auto _ : state)
        benchmark::DoNotOptimize(word_shuffle(a, b));
}
BENCHMARK(BM_ShuffleOnes)->DenseRange(2, 8, 2);

static void BM_Stuffle(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = Composition::ones(n), b = Composition{3, 1, 2};
    // after the first round this hits the memo
    for (auto _ : state)
        benchmark::DoNotOptimize(stuffle(a, b));
}
BENCHMARK(BM_Stuffle)->DenseRange(2, 8, 2);

static void BM_CoproductBasis(benchmark::State& state) {
    const auto basis = enumerate_basis(static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        for (const auto& c : basis)
            benchmark::DoNotOptimize(coproduct_sh(c));
}
BENCHMARK(BM_CoproductBasis)->DenseRange(4, 10, 2);

static void BM_PsiMatrixCold(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const auto chi = char_factorial();
    for (auto _ : state)
        benchmark::DoNotOptimize(InducedMorphism(chi).matrix(n));
}
BENCHMARK(BM_PsiMatrixCold)->DenseRange(4, 9, 1)->Unit(benchmark::kMillisecond);

static void BM_ZetaTruncated(benchmark::State& state) {
    TruncationConfig cfg;
    cfg.terms = static_cast<std::size_t>(state.range(0));
    const Composition c{3, 1, 2, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(zeta_truncated(c, cfg));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ZetaTruncated)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);
BENCHMARK_MAIN();
