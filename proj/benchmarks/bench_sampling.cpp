/*
   Copyright 2026 The pppkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "pppkit/montecarlo.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace pppkit;

// Arg: intensity lambda.
void BM_SampleInterference(benchmark::State& state)
{
    const NetworkModel model(double(state.range(0)), 1.0, PathLoss::inverse_sum(4.0), Fading::nakagami(5.0),
                             RadialIntensity::stationary());
    SimulationConfig cfg;
    cfg.num_samples = 2048;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_interference(model, cfg));
    }
    state.SetItemsProcessed(state.iterations() * std::int64_t(cfg.num_samples));
}
BENCHMARK(BM_SampleInterference)->Arg(1)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_KsDistance(benchmark::State& state)
{
    const NetworkModel model(1.0, 1.0, PathLoss::inverse_sum(4.0), Fading::deterministic(),
                             RadialIntensity::stationary());
    SimulationConfig cfg;
    const auto xs = sample_interference(model, cfg);
    const ApproxConstants c = campbell_moments(model);
    for (auto _ : state) {
        const EmpiricalCdf cdf = centered_normalized_cdf(xs, c.mean, c.stddev());
        benchmark::DoNotOptimize(ks_distance(cdf, normal_cdf));
    }
}
BENCHMARK(BM_KsDistance)->Unit(benchmark::kMicrosecond);

} // namespace
