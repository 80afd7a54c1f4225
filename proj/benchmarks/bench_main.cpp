#include <benchmark/benchmark.h>

#include "pwlent/interval48.hpp"
#include "pwlent/measure.hpp"
#include "pwlent/transition.hpp"

using namespace pwlent;

static void BM_Table1(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(table1(static_cast<unsigned>(st.range(0)), 5));
}
BENCHMARK(BM_Table1)->Arg(1)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Certify(benchmark::State& st) {
    Transition t = st.range(0) ? Transition::Beta : Transition::Alpha;
    for (auto _ : st) benchmark::DoNotOptimize(certify(t, 24, 32));
}
BENCHMARK(BM_Certify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_RootOrdering(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(verify_root_ordering(static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_RootOrdering)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_CrossValidate(benchmark::State& st) {
    BigRational b(31, 4);
    for (auto _ : st) benchmark::DoNotOptimize(cross_validate(b));
}
BENCHMARK(BM_CrossValidate)->Unit(benchmark::kMillisecond);

static void BM_MeasureReport(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(full_measure_report(Regime::NegB, BigRational(-3), static_cast<std::size_t>(st.range(0))));
}
BENCHMARK(BM_MeasureReport)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
