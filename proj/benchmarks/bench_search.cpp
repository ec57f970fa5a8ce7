#include <benchmark/benchmark.h>

#include "vsqc/search.hpp"

namespace {

void BM_CycleConditions(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    const std::vector<std::int64_t> alphas{1, 65, 77};
    for (auto _ : state) {
        bool ok = vsqc::girth8_conditions(alphas, 19, 6, L, 169);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_CycleConditions)->Arg(8)->Arg(12)->Arg(25);

void BM_SearchSmall(benchmark::State& state) {
    for (auto _ : state) {
        vsqc::SearchSpec spec;
        spec.J = 4;
        spec.L = 6;
        spec.p_hi = 37;
        spec.jobs = 1;
        auto outcome = vsqc::search_min_p(spec);
        benchmark::DoNotOptimize(outcome);
    }
}
BENCHMARK(BM_SearchSmall)->Unit(benchmark::kMillisecond);

}  // namespace
