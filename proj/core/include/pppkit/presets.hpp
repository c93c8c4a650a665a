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

#pragma once

#include "pppkit/capacity.hpp"
#include "pppkit/geometry.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pppkit {

enum class PresetTask { Bounds, Simulate, Outage, SumCapacity };

/// Complete parameter set for one reproducible experiment.
struct Preset {
    std::string name;
    std::string description;
    PresetTask task;
    NetworkModel model;             ///< lambda = lambdas.front()
    std::vector<double> lambdas;
    std::size_t num_samples = 10'000;
    double snr = 1.0;               ///< sum-capacity SNR (linear)
    std::optional<OutageScenario> scenario = std::nullopt;
};

/// `count` points log-spaced on [lo, hi], endpoints included.
std::vector<double> log_spaced(double lo, double hi, std::size_t count);

/// Names in registration order.
std::vector<std::string> preset_names();

/// Throws ValidationError for unknown names.
Preset preset(std::string_view name);

} // namespace pppkit
