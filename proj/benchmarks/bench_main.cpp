#include <benchmark/benchmark.h>

#include "bdsa/ideals.hpp"
#include "bdsa/oracle.hpp"
#include "bdsa/props.hpp"
#include "bdsa/report.hpp"

namespace {

bdsa::Instance bench_instance(int atoms, int labels) {
    bdsa::GeneratorParams p;
    p.seed = 42;
    p.atom_count = atoms;
    p.label_count = labels;
    p.density_milli = 500;
    return bdsa::random_instance(p);
}

void BM_SemigroupClosure(benchmark::State& state) {
    bdsa::Instance inst = bench_instance(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(bdsa::semigroup_closure(inst).members.size());
}
BENCHMARK(BM_SemigroupClosure)->Arg(4)->Arg(6)->Arg(8);

void BM_ConditionL(benchmark::State& state) {
    bdsa::Instance inst = bench_instance(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(bdsa::check_condition_L(inst).holds);
}
BENCHMARK(BM_ConditionL)->Arg(6)->Arg(10)->Arg(16);

void BM_ConditionK(benchmark::State& state) {
    bdsa::Instance inst = bench_instance(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(bdsa::check_condition_K(inst));
}
BENCHMARK(BM_ConditionK)->Arg(4)->Arg(6)->Arg(8);

void BM_MaximalTails(benchmark::State& state) {
    bdsa::Instance inst = bench_instance(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(bdsa::enumerate_maximal_tails(inst).size());
}
BENCHMARK(BM_MaximalTails)->Arg(4)->Arg(6)->Arg(8);

void BM_GaugePairs(benchmark::State& state) {
    bdsa::Instance inst = bench_instance(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(bdsa::gauge_pairs(inst).size());
}
BENCHMARK(BM_GaugePairs)->Arg(4)->Arg(6)->Arg(8);

void BM_FullReport(benchmark::State& state) {
    bdsa::Instance inst = bench_instance(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(bdsa::report_json(bdsa::build_report(inst)));
}
BENCHMARK(BM_FullReport)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
