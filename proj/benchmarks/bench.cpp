#include <string>

#include <benchmark/benchmark.h>

#include "toricgraph/chromatic.hpp"
#include "toricgraph/enumerate.hpp"
#include "toricgraph/graph.hpp"
#include "toricgraph/graph_coloring.hpp"
#include "toricgraph/ideal.hpp"
#include "toricgraph/kmy.hpp"
#include "toricgraph/order.hpp"
#include "toricgraph/rng.hpp"
#include "toricgraph/toric.hpp"

#ifndef TEST_DATA_DIR
#error "TEST_DATA_DIR must point at the graph corpus"
#endif

namespace {

toricgraph::Graph load(const char* name) {
    return toricgraph::Graph::parse_file(std::string(TEST_DATA_DIR) + "/" + name);
}

void BM_ToricIdealGlued(benchmark::State& state) {
    auto g = load("glued_squares.graph");
    for (auto _ : state) benchmark::DoNotOptimize(toricgraph::toric_ideal(g));
}
BENCHMARK(BM_ToricIdealGlued);

void BM_ToricIdealK33(benchmark::State& state) {
    auto g = load("k33.graph");
    for (auto _ : state) benchmark::DoNotOptimize(toricgraph::toric_ideal(g));
}
BENCHMARK(BM_ToricIdealK33);

void BM_BuchbergerK33RandomLex(benchmark::State& state) {
    auto g = load("k33.graph");
    auto ideal = toricgraph::toric_ideal(g);
    toricgraph::Rng rng(7);
    std::vector<std::size_t> perm(9);
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    for (auto _ : state) {
        state.PauseTiming();
        rng.shuffle(perm);
        auto order = toricgraph::MonomialOrder::lex(perm);
        state.ResumeTiming();
        benchmark::DoNotOptimize(toricgraph::buchberger(ideal, order));
    }
}
BENCHMARK(BM_BuchbergerK33RandomLex);

void BM_GraverBoxK33(benchmark::State& state) {
    auto g = load("k33.graph");
    for (auto _ : state) benchmark::DoNotOptimize(toricgraph::graver_basis(g));
}
BENCHMARK(BM_GraverBoxK33);

void BM_GraverLawrenceK33(benchmark::State& state) {
    auto g = load("k33.graph");
    for (auto _ : state) benchmark::DoNotOptimize(toricgraph::graver_basis_lawrence(g));
}
BENCHMARK(BM_GraverLawrenceK33);

void BM_DeletionSequenceK33(benchmark::State& state) {
    auto g = load("k33.graph");
    for (auto _ : state) benchmark::DoNotOptimize(toricgraph::deletion_sequence(g));
}
BENCHMARK(BM_DeletionSequenceK33);

void BM_ExactColoringRandom12(benchmark::State& state) {
    toricgraph::Rng rng(99);
    auto g = toricgraph::random_connected_graph(rng, 12, 45);
    for (auto _ : state) benchmark::DoNotOptimize(toricgraph::exact_chromatic_number(g));
}
BENCHMARK(BM_ExactColoringRandom12);

void BM_OrderSearchGlued(benchmark::State& state) {
    auto g = load("glued_squares.graph");
    for (auto _ : state) benchmark::DoNotOptimize(toricgraph::order_search(g, 5, 1));
}
BENCHMARK(BM_OrderSearchGlued);

void BM_HeightPipelineP5(benchmark::State& state) {
    auto graphs = toricgraph::connected_graphs(5);
    for (auto _ : state) {
        int total = 0;
        for (const auto& g : graphs) total += toricgraph::height_toric(g).formula;
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_HeightPipelineP5);

}  // namespace

BENCHMARK_MAIN();
