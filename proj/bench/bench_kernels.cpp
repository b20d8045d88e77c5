// Serial reference loop against the OpenMP loop for each data-parallel kernel.
// Run: framelab_bench --benchmark_filter=scan

#include "framelab/bspline.hpp"
#include "framelab/dilation.hpp"
#include "framelab/exponentials.hpp"
#include "framelab/gabor.hpp"

#include <benchmark/benchmark.h>

namespace {

using framelab::Execution;

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_BsplineScan(benchmark::State& state) {
    framelab::bspline::ScanOptions opt;
    opt.exec = mode(state);
    const std::vector<double> as{0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
    const std::vector<double> bs{0.1, 0.2, 0.3, 0.4, 0.6, 0.8, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(framelab::bspline::gabor_scan(2, as, bs, opt));
    label(state);
}

void BM_DualitySweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(framelab::gabor::duality_sweep(4, 16, 2, 7, mode(state)));
    label(state);
}

void BM_WaveletGrid(benchmark::State& state) {
    using namespace framelab::dilation;
    const auto wide = FreqFunction::indicator(Band{{{-1.5, -0.5}, {0.5, 1.5}}});
    WaveletOptions opt;
    opt.exec = mode(state);
    opt.grid_points = 1 << 14;
    for (auto _ : state) benchmark::DoNotOptimize(wavelet_duality_check(wide, wide, 1.0, 1e-10, opt));
    label(state);
}

void BM_WavePacketBounds(benchmark::State& state) {
    using namespace framelab::dilation;
    const auto g = FreqFunction::indicator(Band{{{0.0, 1.5}}});
    WavePacketGrid grid{{0.5, 1.0, 2.0}, 1.0, {}};
    for (int m = -40; m <= 40; ++m) grid.c_values.push_back(0.5 * m);
    WavePacketOptions opt;
    opt.exec = mode(state);
    opt.grid_points = 1 << 14;
    for (auto _ : state) benchmark::DoNotOptimize(wave_packet_frame_bounds(g, grid, opt));
    label(state);
}

void BM_DecayStudy(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            framelab::exponentials::decay_study(framelab::exponentials::LambdaSet::half_integers, 16, mode(state)));
    }
    label(state);
}

}  // namespace

BENCHMARK(BM_BsplineScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualitySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WaveletGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WavePacketBounds)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecayStudy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
