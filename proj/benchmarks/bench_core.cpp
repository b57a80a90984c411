#include <benchmark/benchmark.h>

#include "branchwork/branching.hpp"
#include "branchwork/character_table.hpp"
#include "branchwork/counting.hpp"
#include "branchwork/partition.hpp"
#include "branchwork/plethysm.hpp"
#include "branchwork/schur_eval.hpp"
#include "branchwork/survey.hpp"

using branchwork::CycleType;
using branchwork::Partition;

static void BM_CharacterTableBuild(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto table = branchwork::CharacterTable::build(n);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_CharacterTableBuild)->Arg(8)->Arg(10)->Arg(12);

static void BM_SchurTwoRowJacobiTrudi(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    const CycleType rho(Partition({4, 3, 2, 1}));
    const Partition lambda({size - size / 2, size / 2});
    for (auto _ : state) {
        auto value = branchwork::schur_at_jacobi_trudi(lambda, rho);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_SchurTwoRowJacobiTrudi)->Arg(16)->Arg(32);

static void BM_SchurTwoRowPowerSum(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    const CycleType rho(Partition({4, 3, 2, 1}));
    const Partition lambda({size - size / 2, size / 2});
    branchwork::MnEvaluator characters;
    for (auto _ : state) {
        auto value = branchwork::schur_at_power_sum(lambda, rho, characters);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_SchurTwoRowPowerSum)->Arg(16);

static void BM_Branch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    branchwork::shared_character_table(n); // warm the registry
    const Partition lambda({n, n});
    for (auto _ : state) {
        auto table = branchwork::branch(lambda, n);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_Branch)->Arg(6)->Arg(8)->Arg(10);

static void BM_PlethysmSym(benchmark::State& state) {
    branchwork::shared_character_table(5);
    const Partition mu({2, 2, 1});
    for (auto _ : state) {
        auto dec = branchwork::plethysm_sym(mu, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(dec);
    }
}
BENCHMARK(BM_PlethysmSym)->Arg(3)->Arg(5);

static void BM_SurveyRegion(benchmark::State& state) {
    branchwork::shared_character_table(6);
    for (auto _ : state) {
        auto records = branchwork::survey_region(6, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(records);
    }
}
BENCHMARK(BM_SurveyRegion)->Arg(12)->Arg(24);

static void BM_CountGraphsFormula(benchmark::State& state) {
    for (auto _ : state) {
        auto report = branchwork::count_graphs(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_CountGraphsFormula)->Arg(6)->Arg(16);

BENCHMARK_MAIN();
