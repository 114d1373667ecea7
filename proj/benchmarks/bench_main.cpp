#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "iterforce/forcing.hpp"
#include "iterforce/graph.hpp"
#include "iterforce/iterated.hpp"
#include "iterforce/solvers.hpp"

using namespace iterforce;

namespace {

Graph ilat_k1(std::size_t l) { return IteratedGraph::build(named_graph("k1"), CloningPlan::ilat(1, l)).graph(); }

Graph ilt_p4(std::size_t l) { return IteratedGraph::build(named_graph("p4"), CloningPlan::ilt(4, l)).graph(); }

std::vector<std::vector<Vertex>> random_starts(const Graph& g, std::size_t k, std::size_t count) {
    std::mt19937_64 rng(7);
    std::vector<std::vector<Vertex>> out(count);
    for (auto& s : out) {
        for (std::size_t i = 0; i < k; ++i) s.push_back(static_cast<Vertex>(rng() % g.order()));
    }
    return out;
}

// Queue kernel on the ILT graphs used by the lift check; this is the inner loop of every Z search.
void BM_ForcingKernel(benchmark::State& state) {
    const Graph g = ilt_p4(static_cast<std::size_t>(state.range(0)));
    const auto starts = random_starts(g, g.order() / 4, 256);
    ForcingKernel kernel(g);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel.forces_all(starts[i++ % starts.size()]));
    }
    state.SetItemsProcessed(state.iterations());
    state.counters["n"] = static_cast<double>(g.order());
}
BENCHMARK(BM_ForcingKernel)->DenseRange(2, 5);

// Round-synchronous closure with chronology, for comparison with the kernel.
void BM_Closure(benchmark::State& state) {
    const Graph g = ilt_p4(static_cast<std::size_t>(state.range(0)));
    const auto starts = random_starts(g, g.order() / 4, 256);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& s = starts[i++ % starts.size()];
        benchmark::DoNotOptimize(closure(g, VertexSet::from_indices(g.order(), s)).rounds);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Closure)->DenseRange(2, 5);

void BM_ZeroForcingNumber(benchmark::State& state) {
    const Graph g = ilt_p4(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(zero_forcing_number(g).value);
    state.counters["n"] = static_cast<double>(g.order());
}
BENCHMARK(BM_ZeroForcingNumber)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_FortTest(benchmark::State& state) {
    const Graph g = ilat_k1(static_cast<std::size_t>(state.range(0)));
    const auto starts = random_starts(g, 6, 256);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& s = starts[i++ % starts.size()];
        benchmark::DoNotOptimize(is_fort(g, VertexSet::from_indices(g.order(), s)));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_FortTest)->DenseRange(3, 6);

void BM_MinFort(benchmark::State& state) {
    const Graph g = ilat_k1(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(min_fort(g, 6).value);
}
BENCHMARK(BM_MinFort)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_BurningNumber(benchmark::State& state) {
    const Graph g = ilt_p4(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(burning_number(g).value);
}
BENCHMARK(BM_BurningNumber)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
