// Serial reference vs OpenMP kernels on the full 416-vertex graph.
//   ./bench_kernels --benchmark_filter=Identity

#include <benchmark/benchmark.h>

#include "g24/euclid.hpp"
#include "g24/kernels.hpp"

namespace {

struct Fixture {
    g24::Graph graph{0};
    std::optional<g24::ReprMatrix> y;
    g24::IntMatrix differences;

    Fixture() {
        g24::HermitianPlane plane;
        std::vector<g24::IsoSet> isosets;
        for (const auto& b : plane.enumerate_bases()) isosets.push_back(b.isoset);
        graph = g24::build_graph(isosets);
        y.emplace(g24::build_representation(graph));
        std::vector<int> all(static_cast<std::size_t>(graph.size()));
        for (int i = 0; i < graph.size(); ++i) all[static_cast<std::size_t>(i)] = i;
        differences = g24::difference_matrix(*y, all, 0);
    }
};

const Fixture& fixture() {
    static const Fixture f;
    return f;
}

g24::Exec exec_of(const benchmark::State& state) { return state.range(0) ? g24::Exec::parallel : g24::Exec::serial; }

void CommonNeighbours(benchmark::State& state) {
    const auto& f = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(g24::kernels::common_neighbor_histogram(f.graph, exec_of(state)));
}

void Identity(benchmark::State& state) {
    const auto& f = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(g24::kernels::first_identity_mismatch(f.graph, g24::kG24Params, exec_of(state)));
}

void Distances(benchmark::State& state) {
    const auto& f = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(g24::kernels::distance_histogram(f.graph, *f.y, exec_of(state)));
}

void PerEdgeClique(benchmark::State& state) {
    const auto& f = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(g24::kernels::per_edge_max_clique(f.graph, exec_of(state)));
}

void RankModPrime(benchmark::State& state) {
    const auto& f = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(g24::rank_mod_prime(f.differences, g24::kDefaultPrimeA, exec_of(state)));
}

}  // namespace

// Arg 0: serial reference, Arg 1: OpenMP.
BENCHMARK(CommonNeighbours)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(Identity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(Distances)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(PerEdgeClique)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(RankModPrime)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
