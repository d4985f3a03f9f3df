#include <benchmark/benchmark.h>

#include "kolmo/model_io.hpp"
#include "kolmo/portrait.hpp"
#include "kolmo/report.hpp"

using namespace kolmo;

namespace {

SystemModel ma() {
    return parse_model(R"({"theta": {"0,1": 3.0}, "gamma": {"0,0": -1.0},
                           "delta": {"0,0": 1.0, "1,0": 1.0}, "N": {"0,0": 1.0}})");
}

const ParamWindow kWindow{-0.01, 0.01, -0.01, 0.01};

void BM_SweepSerial(benchmark::State& st) {
    const auto m = ma();
    for (auto _ : st) benchmark::DoNotOptimize(sweep_serial(m, kWindow, int(st.range(0))));
}
BENCHMARK(BM_SweepSerial)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_SweepOmp(benchmark::State& st) {
    const auto m = ma();
    for (auto _ : st) benchmark::DoNotOptimize(sweep(m, kWindow, int(st.range(0))));
}
BENCHMARK(BM_SweepOmp)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

PortraitSpec portrait_spec() {
    PortraitSpec s;
    s.window = {0.0, 0.2, 0.0, 0.2};
    s.t_max = 2e3;
    return s;
}

void BM_PortraitSerial(benchmark::State& st) {
    const auto m = ma();
    const auto spec = portrait_spec();
    for (auto _ : st) benchmark::DoNotOptimize(phase_portrait_serial(m, {0.0004, 0.02}, spec));
}
BENCHMARK(BM_PortraitSerial)->Unit(benchmark::kMillisecond);

void BM_PortraitOmp(benchmark::State& st) {
    const auto m = ma();
    const auto spec = portrait_spec();
    for (auto _ : st) benchmark::DoNotOptimize(phase_portrait(m, {0.0004, 0.02}, spec));
}
BENCHMARK(BM_PortraitOmp)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
