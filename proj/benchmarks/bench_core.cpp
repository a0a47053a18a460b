#include <benchmark/benchmark.h>

#include "stepup/coloring.hpp"
#include "stepup/hyperverify.hpp"
#include "stepup/jgraph.hpp"
#include "stepup/probsearch.hpp"

using namespace stepup;

namespace {

void BM_SampleGraph(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    unsigned attempt = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_graph(n, 0.5, 1234, attempt++));
    }
}
BENCHMARK(BM_SampleGraph)->Arg(32)->Arg(64)->Arg(128);

void BM_HasClique(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int l = static_cast<int>(state.range(1));
    const BaseGraph g = sample_graph(n, 0.5, 99, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(has_clique(g, l));
    }
}
BENCHMARK(BM_HasClique)->Args({64, 8})->Args({96, 10})->Args({128, 12});

void BM_ContainsSubgraph(benchmark::State& state) {
    const BaseGraph host = sample_graph(48, 0.2, 7, 0);
    const auto patterns = enumerate_jpp(5);
    for (auto _ : state) {
        for (const auto& p : patterns) benchmark::DoNotOptimize(contains_subgraph(host, p));
    }
}
BENCHMARK(BM_ContainsSubgraph);

void BM_CountTripleColors(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const BaseGraph g = sample_graph(n, 0.5, 5, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_triple_colors(g, n));
    }
}
BENCHMARK(BM_CountTripleColors)->Arg(5)->Arg(6);

void BM_FindMonoClique(benchmark::State& state) {
    const BaseGraph g = sample_graph(6, 0.7, 21, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_mono_clique(g, 6, 4));
    }
}
BENCHMARK(BM_FindMonoClique);

void BM_BuildJpp(benchmark::State& state) {
    // a long delta sequence from a dense chain
    std::vector<TVertex> chain;
    for (std::uint64_t r = 0; r < 512; r += 3) chain.emplace_back(r, 16);
    const DeltaSequence seq = extract_delta_sequence(chain);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_jpp(seq));
    }
}
BENCHMARK(BM_BuildJpp);

void BM_EnumerateJpp(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_jpp(d));
    }
}
BENCHMARK(BM_EnumerateJpp)->Arg(5)->Arg(6)->Arg(7);

void BM_CanonicalForm(benchmark::State& state) {
    const BaseGraph g = sample_graph(8, 0.5, 17, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(g, 8));
    }
}
BENCHMARK(BM_CanonicalForm);

} // namespace

BENCHMARK_MAIN();
