#include <benchmark/benchmark.h>

#include "tokenjump/families.hpp"
#include "tokenjump/independent_set.hpp"
#include "tokenjump/oracle.hpp"
#include "tokenjump/solver.hpp"
#include "tokenjump/witness.hpp"

namespace {

tj::Instance random_planar(int rows, int cols, int k, std::uint64_t seed) {
    tj::FamilySpec spec;
    spec.family = tj::Family::random_planar;
    spec.rows = rows;
    spec.cols = cols;
    spec.k = k;
    spec.seed = seed;
    return tj::generate(spec);
}

void BM_solve_random_planar(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    tj::Instance inst = random_planar(side, side, k, 42);
    for (auto _ : state) benchmark::DoNotOptimize(tj::solve(inst));
    state.SetLabel(std::to_string(inst.graph.order()) + " vertices");
}
BENCHMARK(BM_solve_random_planar)->Args({3, 2})->Args({4, 2})->Args({4, 3})->Args({5, 3});

void BM_oracle_shortest_grid(benchmark::State& state) {
    tj::FamilySpec spec;
    spec.family = tj::Family::grid;
    spec.rows = static_cast<int>(state.range(0));
    spec.cols = static_cast<int>(state.range(0));
    spec.k = static_cast<int>(state.range(1));
    tj::Instance inst = tj::generate(spec);
    for (auto _ : state)
        benchmark::DoNotOptimize(tj::shortest_sequence(inst.graph, inst.start, inst.target));
}
BENCHMARK(BM_oracle_shortest_grid)->Args({3, 2})->Args({4, 2})->Args({4, 3});

void BM_k3t_witness_scan(benchmark::State& state) {
    tj::FamilySpec spec;
    spec.family = tj::Family::grid;
    spec.rows = static_cast<int>(state.range(0));
    spec.cols = static_cast<int>(state.range(0));
    spec.k = 1;
    tj::Instance inst = tj::generate(spec);
    for (auto _ : state) benchmark::DoNotOptimize(tj::find_k3t_witness(inst.graph, 3));
}
BENCHMARK(BM_k3t_witness_scan)->Arg(4)->Arg(6)->Arg(8);

void BM_exact_independent_set(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    tj::FamilySpec spec;
    spec.family = tj::Family::grid;
    spec.rows = side;
    spec.cols = side;
    spec.k = 1;
    tj::Instance inst = tj::generate(spec);
    const int want = side * side / 4;
    for (auto _ : state)
        benchmark::DoNotOptimize(tj::find_independent_set_exact(inst.graph, want));
}
BENCHMARK(BM_exact_independent_set)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
