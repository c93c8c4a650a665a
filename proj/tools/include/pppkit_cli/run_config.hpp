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
#include "pppkit/montecarlo.hpp"
#include "pppkit/presets.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace pppkit::cli {

struct ModelSection {
    std::string pathloss = "g2"; ///< g1 | g2
    double alpha = 4.0;
    std::string fading = "deterministic"; ///< deterministic | nakagami | moments
    double h0 = 1.0;
    double m = 1.0;
    std::vector<double> moments{1.0, 1.0, 1.0};
    std::string intensity = "stationary"; ///< stationary | lograd
    double t_min = 0.0;
    double r = 0.5;
    double lambda = 1.0;
    double power = 1.0;

    bool operator==(const ModelSection&) const = default;
};

struct TaskSection {
    std::string preset;              ///< empty: none
    std::vector<double> lambdas;
    std::vector<double> alpha_list{3.0, 4.0, 5.0};
    std::string rule = "quadrature"; ///< quadrature | grid
    double grid_step = 0.1;
    bool check = false;
    std::uint64_t samples = 10'000;
    double tail_tolerance = 1e-4;
    std::string truncation = "compensated"; ///< compensated | plain
    double delta = 0.01;
    double x_min = -6.0;
    double x_max = 6.0;
    std::uint64_t x_points = 481;
    double snr = 100.0;
    double pg = 100.0;
    double d = 1.0;
    double gamma = 0.1;
    std::string direct_fading = "nakagami"; ///< deterministic | nakagami
    double direct_m = 5.0;
    double direct_h0 = 1.0;

    bool operator==(const TaskSection&) const = default;
};

struct OutputSection {
    std::string path = ".";
    std::string format = "csv"; ///< csv | json

    bool operator==(const OutputSection&) const = default;
};

struct RunConfig {
    ModelSection model;
    TaskSection task;
    OutputSection output;
    std::uint64_t seed = 1;

    bool operator==(const RunConfig&) const = default;
};

nlohmann::json to_json(const RunConfig& cfg);

/// Strict: unknown keys, wrong types and malformed enums throw
/// ValidationError. Missing keys keep their defaults.
RunConfig from_json(const nlohmann::json& j);

/// Value kinds a flag can carry.
enum class FlagKind { String, Real, Unsigned, RealList, Bool };

/// One command-line flag and the config key it sets.
struct FlagSpec {
    std::string flag;    ///< without leading dashes
    std::string pointer; ///< JSON pointer into the config document
    FlagKind kind;
    std::string help;
};

/// Every config key except the nesting objects has exactly one flag here.
const std::vector<FlagSpec>& flag_table();

/// Parses a flag's text into the JSON value stored at its pointer.
nlohmann::json flag_value(const FlagSpec& spec, const std::string& text);

/// defaults <- preset (if named) <- file document <- flag patch.
/// `file` and `flags` are partial config documents.
RunConfig resolve(const nlohmann::json& file, const nlohmann::json& flags);

/// Overwrites the model and task fields a preset defines.
void apply_preset(RunConfig& cfg, const Preset& preset);

NetworkModel build_model(const ModelSection& model);
Fading build_direct_fading(const TaskSection& task);
OutageScenario build_scenario(const RunConfig& cfg, double lambda);
SimulationConfig build_simulation(const RunConfig& cfg);

} // namespace pppkit::cli
