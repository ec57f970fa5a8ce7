#include <benchmark/benchmark.h>

#include <random>

#include "vsqc/codec.hpp"
#include "vsqc/constructions.hpp"

namespace {

void BM_SpaDecode(benchmark::State& state) {
    const auto res = vsqc::construct_j6(11);
    const auto code = vsqc::lift(res.matrix, res.P);
    vsqc::SpaDecoder decoder(code);

    std::mt19937_64 rng(7);
    std::normal_distribution<double> noise(0.0, 0.8);
    std::vector<double> llr(code.num_vars());
    for (auto& v : llr) v = 2.0 * (1.0 + noise(rng)) / 0.64;

    for (auto _ : state) {
        auto out = decoder.decode(llr, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_SpaDecode)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
