#include <benchmark/benchmark.h>

#include "vsqc/constructions.hpp"
#include "vsqc/girth.hpp"

namespace {

void BM_GirthEquations(benchmark::State& state) {
    const auto res = vsqc::construct_j6(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto report = vsqc::girth_from_equations(res.matrix, res.P, 8);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_GirthEquations)->Arg(11)->Arg(25)->Arg(49);

void BM_GirthGraph(benchmark::State& state) {
    const auto res = vsqc::construct_j6(static_cast<int>(state.range(0)));
    const auto code = vsqc::lift(res.matrix, res.P);
    for (auto _ : state) {
        auto report = vsqc::girth_from_graph(code, 8);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_GirthGraph)->Arg(11)->Arg(25)->Arg(49);

void BM_Lift(benchmark::State& state) {
    const auto res = vsqc::construct_j6(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto code = vsqc::lift(res.matrix, res.P);
        benchmark::DoNotOptimize(code);
    }
}
BENCHMARK(BM_Lift)->Arg(11)->Arg(25);

}  // namespace
