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

#include "pppkit/capacity.hpp"
#include "pppkit/presets.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace pppkit;

OutageScenario fig3_at(double lambda)
{
    OutageScenario s = *preset("fig3-g2").scenario;
    s.interferers = s.interferers.with_lambda(lambda);
    return s;
}

void BM_OutageProbability(benchmark::State& state)
{
    const OutageAnalysis analysis(fig3_at(10.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analysis.outage_probability_bounds(0.1));
    }
}
BENCHMARK(BM_OutageProbability)->Unit(benchmark::kMicrosecond);

// Arg: intensity lambda.
void BM_OutageCapacity(benchmark::State& state)
{
    const OutageScenario s = fig3_at(double(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(outage_capacity_bounds(s));
    }
}
BENCHMARK(BM_OutageCapacity)->Arg(1)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SumCapacity(benchmark::State& state)
{
    const NetworkModel model = preset("fig4-g2").model.with_lambda(double(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sum_capacity_bounds(model, 1.0));
    }
}
BENCHMARK(BM_SumCapacity)->Arg(1)->Arg(100)->Unit(benchmark::kMillisecond);

} // namespace
