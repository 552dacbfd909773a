#include <random>

#include <benchmark/benchmark.h>

#include "lmg/classification.hpp"
#include "lmg/equivalence.hpp"
#include "lmg/separation.hpp"
#include "lmg/transform.hpp"

using namespace lmg;

namespace {

std::vector<std::string> names(int n) {
    std::vector<std::string> labels;
    for (int k = 1; k <= n; ++k) labels.push_back("v" + std::to_string(k));
    return labels;
}

MixedGraph random_graph(std::mt19937_64& rng, int n, int percent = 45) {
    MixedGraph g{names(n)};
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) {
            if (rng() % 100 >= static_cast<unsigned>(percent)) continue;
            // line-free so m_separated always takes the reachability search
            switch (rng() % 3) {
            case 0: g.add_edge(i, j, EdgeType::Arrow); break;
            case 1: g.add_edge(j, i, EdgeType::Arrow); break;
            case 2: g.add_edge(i, j, EdgeType::Arc); break;
            }
        }
    return g;
}

MixedGraph random_mag(std::mt19937_64& rng, int n) {
    while (true) {
        MixedGraph g = random_graph(rng, n);
        if (is_mag(g)) return g;
    }
}

void bm_m_separated(benchmark::State& state) {
    std::mt19937_64 rng(1);
    int n = static_cast<int>(state.range(0));
    MixedGraph g = random_graph(rng, n);
    NodeSet c = full_set(n) & ~singleton(0) & ~singleton(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(m_separated(g, 0, 1, c & static_cast<NodeSet>(rng())));
}
BENCHMARK(bm_m_separated)->Arg(8)->Arg(12)->Arg(16);

void bm_independence_model(benchmark::State& state) {
    std::mt19937_64 rng(2);
    MixedGraph g = random_graph(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(independence_model(g));
}
BENCHMARK(bm_independence_model)->Arg(6)->Arg(8)->Arg(10);

void bm_equivalent_mags_order(benchmark::State& state) {
    std::mt19937_64 rng(3);
    MixedGraph a = random_mag(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(equivalent_mags(a, a, EquivMethod::Order));
}
BENCHMARK(bm_equivalent_mags_order)->Arg(6)->Arg(8);

void bm_equivalent_mags_paths(benchmark::State& state) {
    std::mt19937_64 rng(4);
    MixedGraph a = random_mag(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(equivalent_mags(a, a, EquivMethod::Paths));
}
BENCHMARK(bm_equivalent_mags_paths)->Arg(6)->Arg(8);

void bm_to_dag(benchmark::State& state) {
    std::mt19937_64 rng(5);
    MixedGraph g = random_mag(rng, static_cast<int>(state.range(0)));
    TransformOptions force;
    force.force = true;
    for (auto _ : state) benchmark::DoNotOptimize(to_dag(g, force).output.edge_count());
}
BENCHMARK(bm_to_dag)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
