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

#include "pppkit/gaussian_bounds.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace pppkit;

void BM_PathLossConstant(benchmark::State& state)
{
    const auto g = PathLoss::inverse_shifted(double(state.range(0)));
    const auto p = RadialIntensity::stationary();
    for (auto _ : state) {
        benchmark::DoNotOptimize(pathloss_constant(g, p));
    }
}
BENCHMARK(BM_PathLossConstant)->Arg(3)->Arg(4)->Arg(5);

void BM_CampbellMoments(benchmark::State& state)
{
    const NetworkModel model(10.0, 1.0, PathLoss::inverse_sum(4.0), Fading::nakagami(5.0),
                             RadialIntensity::log_radial(0.5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(campbell_moments(model));
    }
}
BENCHMARK(BM_CampbellMoments);

void BM_EnvelopeCurve(benchmark::State& state)
{
    const NetworkModel model(25.0, 1.0, PathLoss::inverse_sum(4.0), Fading::nakagami(5.0),
                             RadialIntensity::stationary());
    const CdfEnvelope envelope(campbell_moments(model));
    const auto xs = linear_grid();
    for (auto _ : state) {
        benchmark::DoNotOptimize(cdf_bounds(envelope, xs));
    }
    state.SetItemsProcessed(state.iterations() * std::int64_t(xs.size()));
}
BENCHMARK(BM_EnvelopeCurve);

} // namespace

BENCHMARK_MAIN();
