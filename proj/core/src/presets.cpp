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

#include "pppkit/presets.hpp"

#include "pppkit/error.hpp"

#include <cmath>

namespace pppkit {

namespace {

PathLoss pathloss_for(char which, double alpha)
{
    return which == '1' ? PathLoss::inverse_shifted(alpha) : PathLoss::inverse_sum(alpha);
}

Preset bounds_preset(char which)
{
    const std::vector<double> lambdas{5.0, 25.0, 100.0};
    return Preset{
        .name = std::string("fig1-g") + which,
        .description = "CDF envelopes, stationary plane, alpha = 4, Nakagami m = 5",
        .task = PresetTask::Bounds,
        .model = NetworkModel(lambdas.front(), 1.0, pathloss_for(which, 4.0),
                              Fading::nakagami(5.0), RadialIntensity::stationary(0.0)),
        .lambdas = lambdas,
    };
}

Preset simulate_preset(char which)
{
    const std::vector<double> lambdas{0.1, 1.0, 10.0};
    return Preset{
        .name = std::string("fig2-g") + which,
        .description = "Empirical CDF against envelopes, alpha = 3, no fading, N = 1e4",
        .task = PresetTask::Simulate,
        .model = NetworkModel(lambdas.front(), 1.0, pathloss_for(which, 3.0),
                              Fading::deterministic(), RadialIntensity::stationary(0.0)),
        .lambdas = lambdas,
        .num_samples = 10'000,
    };
}

Preset outage_preset(char which)
{
    // Exclusion zone of radius eta d with eta = 0.5, d = 1; SNR 20 dB.
    const std::vector<double> lambdas = log_spaced(1.0, 100.0, 10);
    NetworkModel interferers(lambdas.front(), 1.0, pathloss_for(which, 4.0),
                             Fading::nakagami(5.0), RadialIntensity::stationary(0.5));
    OutageScenario scenario{
        .d = 1.0,
        .snr = 100.0,
        .pg = 100.0,
        .gamma = 0.1,
        .direct_fading = Fading::nakagami(5.0),
        .interferers = interferers,
    };
    return Preset{
        .name = std::string("fig3-g") + which,
        .description = "Outage capacity sweep, SNR 20 dB, PG 100, d = 1, eta = 0.5, alpha = 4",
        .task = PresetTask::Outage,
        .model = interferers,
        .lambdas = lambdas,
        .num_samples = 10'000,
        .snr = 100.0,
        .scenario = scenario,
    };
}

Preset sumcap_preset(char which)
{
    const std::vector<double> lambdas = log_spaced(1.0, 100.0, 10);
    return Preset{
        .name = std::string("fig4-g") + which,
        .description = "Ergodic sum capacity sweep, SNR 0 dB, alpha = 4, Nakagami m = 5",
        .task = PresetTask::SumCapacity,
        .model = NetworkModel(lambdas.front(), 1.0, pathloss_for(which, 4.0),
                              Fading::nakagami(5.0), RadialIntensity::stationary(0.0)),
        .lambdas = lambdas,
        .num_samples = 10'000,
        .snr = 1.0,
    };
}

Preset log_radial_preset(char which)
{
    const std::vector<double> lambdas{5.0, 25.0, 100.0};
    return Preset{
        .name = std::string("lograd-g") + which,
        .description = "CDF envelopes for the 2 pi / t radial density on t >= 0.5, alpha = 4, m = 5",
        .task = PresetTask::Bounds,
        .model = NetworkModel(lambdas.front(), 1.0, pathloss_for(which, 4.0),
                              Fading::nakagami(5.0), RadialIntensity::log_radial(0.5)),
        .lambdas = lambdas,
    };
}

} // namespace

std::vector<double> log_spaced(double lo, double hi, std::size_t count)
{
    detail::require(lo > 0.0 && hi > lo && count >= 2, "log grid needs 0 < lo < hi, count >= 2");
    std::vector<double> out(count);
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = std::exp(a + (b - a) * double(i) / double(count - 1));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::vector<std::string> preset_names()
{
    return {"fig1-g1", "fig1-g2", "fig2-g1", "fig2-g2", "fig3-g1",
            "fig3-g2", "fig4-g1", "fig4-g2", "lograd-g1", "lograd-g2"};
}

Preset preset(std::string_view name)
{
    const auto suffix = [&](std::string_view stem) -> char {
        if (name.size() == stem.size() + 1 && name.starts_with(stem) &&
            (name.back() == '1' || name.back() == '2')) {
            return name.back();
        }
        return 0;
    };
    if (char w = suffix("fig1-g")) {
        return bounds_preset(w);
    }
    if (char w = suffix("fig2-g")) {
        return simulate_preset(w);
    }
    if (char w = suffix("fig3-g")) {
        return outage_preset(w);
    }
    if (char w = suffix("fig4-g")) {
        return sumcap_preset(w);
    }
    if (char w = suffix("lograd-g")) {
        return log_radial_preset(w);
    }
    throw ValidationError("unknown preset '" + std::string(name) + "'");
}

} // namespace pppkit
