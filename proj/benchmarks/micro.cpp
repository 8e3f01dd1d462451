#include <benchmark/benchmark.h>

#include "levyclt/distances.hpp"
#include "levyclt/measures.hpp"
#include "levyclt/quadrature.hpp"
#include "levyclt/rng.hpp"
#include "levyclt/simulate.hpp"
#include "levyclt/special.hpp"
#include "levyclt/tail_table.hpp"

#include <cmath>

namespace {

using namespace levyclt;

void bm_adaptive_quadrature(benchmark::State& state) {
    const auto m = RadialLevyMeasure::power_log(std::exp(1.0), 2.0, 2);
    double r = 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(truncated_moment(m, 2, r));
        r = (r > 1e6) ? 10.0 : r * 1.1;
    }
}
BENCHMARK(bm_adaptive_quadrature);

void bm_draw_radius(benchmark::State& state) {
    const auto m = RadialLevyMeasure::power_log(std::exp(1.0), 2.0, 1);
    RadialSampler sampler(m);
    CounterRng rng(1);
    double acc = 0.0;
    for (auto _ : state)
        acc += sampler.draw_radius(rng);
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(bm_draw_radius);

void bm_accurate_radius(benchmark::State& state) {
    const auto m = RadialLevyMeasure::power_log(std::exp(1.0), 2.0, 1);
    RadialSampler sampler(m);
    CounterRng rng(1);
    double acc = 0.0;
    for (auto _ : state)
        acc += sampler.radius_from_uniform(rng.uniform());
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(bm_accurate_radius);

void bm_sample_increment(benchmark::State& state) {
    const auto m = RadialLevyMeasure::power_log(std::exp(1.0), 2.0, 1);
    const auto triplet = LevyTriplet::isotropic(m, Eigen::MatrixXd::Zero(1, 1));
    RadialSampler sampler(m);
    const std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        const auto batch = sample_increment(triplet, 1000.0, n, 7, 0, 1, &sampler);
        benchmark::DoNotOptimize(batch.values.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(bm_sample_increment)->Arg(1024)->Arg(16384);

void bm_ks_1d(benchmark::State& state) {
    const std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
    CounterRng rng(5);
    std::vector<double> xs(n);
    for (auto& x : xs)
        x = normal_quantile(rng.uniform());
    std::sort(xs.begin(), xs.end());
    const Cdf cdf = [](double x) { return normal_cdf(x); };
    for (auto _ : state)
        benchmark::DoNotOptimize(ks_1d_one_sample(xs, cdf).value);
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(bm_ks_1d)->Arg(10000)->Arg(100000);

void bm_dk_two_sample_2d(benchmark::State& state) {
    const std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
    CounterRng rng(9);
    SampleBatch a, b;
    a.d = b.d = 2;
    a.n = b.n = n;
    for (std::uint32_t i = 0; i < 2 * n; ++i) {
        a.values.push_back(rng.uniform());
        b.values.push_back(rng.uniform());
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(dk_two_sample(a, b).value);
}
BENCHMARK(bm_dk_two_sample_2d)->Arg(256)->Arg(1024);

} // namespace

BENCHMARK_MAIN();
