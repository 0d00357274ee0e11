#include <benchmark/benchmark.h>

#include "nilcomm/fibers.hpp"
#include "nilcomm/oblak.hpp"
#include "nilcomm/oracle.hpp"
#include "nilcomm/poset.hpp"

using namespace nilcomm;

namespace {

Partition staircase(int height) {
    std::vector<int> parts;
    for (int p = height; p >= 1; --p) parts.push_back(p);
    return Partition(std::move(parts));
}

void BM_QMap(benchmark::State& state) {
    auto p = staircase(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(q_map(p));
}
BENCHMARK(BM_QMap)->Arg(8)->Arg(16)->Arg(32);

void BM_TieExploration(benchmark::State& state) {
    auto p = almost_rectangular(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(explore_all_tie_choices(p));
}
BENCHMARK(BM_TieExploration)->Arg(12)->Arg(20);

void BM_PosetBuild(benchmark::State& state) {
    auto p = staircase(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(PosetDP::build(p));
}
BENCHMARK(BM_PosetBuild)->Arg(6)->Arg(10);

void BM_ChainUnionPartition(benchmark::State& state) {
    auto D = PosetDP::build(staircase(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(greene_kleitman_lambda(D));
}
BENCHMARK(BM_ChainUnionPartition)->Arg(5)->Arg(8);

void BM_OracleSample(benchmark::State& state) {
    auto p = staircase(static_cast<int>(state.range(0)));
    PrimeField f(1000003);
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_nilpotent_commuting(p, f, seed++));
}
BENCHMARK(BM_OracleSample)->Arg(4)->Arg(6)->Arg(8);

void BM_Rank(benchmark::State& state) {
    PrimeField f(1000003);
    auto J = jordan_matrix(staircase(static_cast<int>(state.range(0))), f);
    auto M = J * J;
    for (auto _ : state) benchmark::DoNotOptimize(M.rank());
}
BENCHMARK(BM_Rank)->Arg(6)->Arg(10);

void BM_BoxSweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(check_box(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BoxSweep)->Arg(10)->Arg(14);

} // namespace

BENCHMARK_MAIN();
