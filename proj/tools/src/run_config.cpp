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

#include "pppkit_cli/run_config.hpp"

#include "pppkit/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace pppkit::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw ValidationError("config " + where + ": " + what);
}

/// Checks `doc` against the shape of `reference` (the defaults document).
void check_shape(const json& doc, const json& reference, const std::string& where)
{
    if (!doc.is_object()) {
        fail(where.empty() ? "/" : where, "expected an object");
    }
    for (const auto& [key, value] : doc.items()) {
        const std::string path = where + "/" + key;
        if (!reference.contains(key)) {
            fail(path, "unknown key");
        }
        const json& ref = reference.at(key);
        if (ref.is_object()) {
            check_shape(value, ref, path);
        } else if (ref.is_boolean()) {
            if (!value.is_boolean()) {
                fail(path, "expected a boolean");
            }
        } else if (ref.is_string()) {
            if (!value.is_string()) {
                fail(path, "expected a string");
            }
        } else if (ref.is_number_unsigned()) {
            if (!value.is_number_unsigned()) {
                fail(path, "expected a non-negative integer");
            }
        } else if (ref.is_number()) {
            if (!value.is_number()) {
                fail(path, "expected a number");
            }
        } else if (ref.is_array()) {
            if (!value.is_array() ||
                !std::all_of(value.begin(), value.end(), [](const json& v) { return v.is_number(); })) {
                fail(path, "expected an array of numbers");
            }
        }
    }
}

void check_enum(const std::string& value, std::initializer_list<const char*> allowed,
                const std::string& where)
{
    for (const char* a : allowed) {
        if (value == a) {
            return;
        }
    }
    std::string list;
    for (const char* a : allowed) {
        list += list.empty() ? a : std::string("|") + a;
    }
    fail(where, "'" + value + "' is not one of " + list);
}

json model_json(const ModelSection& m)
{
    return json{
        {"pathloss", {{"kind", m.pathloss}, {"alpha", m.alpha}}},
        {"fading", {{"kind", m.fading}, {"h0", m.h0}, {"m", m.m}, {"moments", m.moments}}},
        {"intensity", {{"kind", m.intensity}, {"t_min", m.t_min}, {"r", m.r}}},
        {"lambda", m.lambda},
        {"power", m.power},
    };
}

json task_json(const TaskSection& t)
{
    return json{
        {"preset", t.preset},
        {"lambdas", t.lambdas},
        {"alpha_list", t.alpha_list},
        {"rule", t.rule},
        {"grid_step", t.grid_step},
        {"check", t.check},
        {"samples", t.samples},
        {"tail_tolerance", t.tail_tolerance},
        {"truncation", t.truncation},
        {"delta", t.delta},
        {"x_min", t.x_min},
        {"x_max", t.x_max},
        {"x_points", t.x_points},
        {"snr", t.snr},
        {"pg", t.pg},
        {"d", t.d},
        {"gamma", t.gamma},
        {"direct_fading", {{"kind", t.direct_fading}, {"m", t.direct_m}, {"h0", t.direct_h0}}},
    };
}

} // namespace

json to_json(const RunConfig& cfg)
{
    return json{
        {"model", model_json(cfg.model)},
        {"task", task_json(cfg.task)},
        {"output", {{"path", cfg.output.path}, {"format", cfg.output.format}}},
        {"seed", cfg.seed},
    };
}

RunConfig from_json(const json& j)
{
    RunConfig cfg;
    json doc = to_json(cfg);
    check_shape(j, doc, "");
    doc.merge_patch(j);

    const json& m = doc.at("model");
    cfg.model.pathloss = m.at("pathloss").at("kind").get<std::string>();
    cfg.model.alpha = m.at("pathloss").at("alpha").get<double>();
    cfg.model.fading = m.at("fading").at("kind").get<std::string>();
    cfg.model.h0 = m.at("fading").at("h0").get<double>();
    cfg.model.m = m.at("fading").at("m").get<double>();
    cfg.model.moments = m.at("fading").at("moments").get<std::vector<double>>();
    cfg.model.intensity = m.at("intensity").at("kind").get<std::string>();
    cfg.model.t_min = m.at("intensity").at("t_min").get<double>();
    cfg.model.r = m.at("intensity").at("r").get<double>();
    cfg.model.lambda = m.at("lambda").get<double>();
    cfg.model.power = m.at("power").get<double>();

    const json& t = doc.at("task");
    cfg.task.preset = t.at("preset").get<std::string>();
    cfg.task.lambdas = t.at("lambdas").get<std::vector<double>>();
    cfg.task.alpha_list = t.at("alpha_list").get<std::vector<double>>();
    cfg.task.rule = t.at("rule").get<std::string>();
    cfg.task.grid_step = t.at("grid_step").get<double>();
    cfg.task.check = t.at("check").get<bool>();
    cfg.task.samples = t.at("samples").get<std::uint64_t>();
    cfg.task.tail_tolerance = t.at("tail_tolerance").get<double>();
    cfg.task.truncation = t.at("truncation").get<std::string>();
    cfg.task.delta = t.at("delta").get<double>();
    cfg.task.x_min = t.at("x_min").get<double>();
    cfg.task.x_max = t.at("x_max").get<double>();
    cfg.task.x_points = t.at("x_points").get<std::uint64_t>();
    cfg.task.snr = t.at("snr").get<double>();
    cfg.task.pg = t.at("pg").get<double>();
    cfg.task.d = t.at("d").get<double>();
    cfg.task.gamma = t.at("gamma").get<double>();
    cfg.task.direct_fading = t.at("direct_fading").at("kind").get<std::string>();
    cfg.task.direct_m = t.at("direct_fading").at("m").get<double>();
    cfg.task.direct_h0 = t.at("direct_fading").at("h0").get<double>();

    cfg.output.path = doc.at("output").at("path").get<std::string>();
    cfg.output.format = doc.at("output").at("format").get<std::string>();
    cfg.seed = doc.at("seed").get<std::uint64_t>();

    check_enum(cfg.model.pathloss, {"g1", "g2"}, "/model/pathloss/kind");
    check_enum(cfg.model.fading, {"deterministic", "nakagami", "moments"}, "/model/fading/kind");
    check_enum(cfg.model.intensity, {"stationary", "lograd"}, "/model/intensity/kind");
    check_enum(cfg.task.rule, {"quadrature", "grid"}, "/task/rule");
    check_enum(cfg.task.truncation, {"compensated", "plain"}, "/task/truncation");
    check_enum(cfg.task.direct_fading, {"deterministic", "nakagami"}, "/task/direct_fading/kind");
    check_enum(cfg.output.format, {"csv", "json"}, "/output/format");
    if (cfg.model.moments.size() != 3) {
        fail("/model/fading/moments", "expected three values");
    }
    if (!cfg.task.preset.empty()) {
        const auto names = preset_names();
        if (std::find(names.begin(), names.end(), cfg.task.preset) == names.end()) {
            fail("/task/preset", "unknown preset '" + cfg.task.preset + "'");
        }
    }
    return cfg;
}

const std::vector<FlagSpec>& flag_table()
{
    static const std::vector<FlagSpec> table{
        {"pathloss", "/model/pathloss/kind", FlagKind::String, "Path-loss family: g1 = (1+t)^-alpha, g2 = 1/(1+t^alpha)"},
        {"alpha", "/model/pathloss/alpha", FlagKind::Real, "Path-loss exponent (> 2)"},
        {"fading", "/model/fading/kind", FlagKind::String, "Interferer fading: deterministic | nakagami | moments"},
        {"h0", "/model/fading/h0", FlagKind::Real, "Deterministic fading level"},
        {"m", "/model/fading/m", FlagKind::Real, "Nakagami shape (>= 0.5)"},
        {"moments", "/model/fading/moments", FlagKind::RealList, "E[H], E[H^2], E[H^3] for moments-only fading"},
        {"intensity", "/model/intensity/kind", FlagKind::String, "Radial density: stationary (2 pi t) | lograd (2 pi / t)"},
        {"t-min", "/model/intensity/t_min", FlagKind::Real, "Exclusion radius of the stationary density"},
        {"r", "/model/intensity/r", FlagKind::Real, "Inner radius of the lograd density"},
        {"lambda", "/model/lambda", FlagKind::Real, "Intensity used when --lambdas is empty (validate only)"},
        {"power", "/model/power", FlagKind::Real, "Interferer transmit power"},
        {"preset", "/task/preset", FlagKind::String, "Named parameter set (see 'pppkit validate --preset NAME')"},
        {"lambdas", "/task/lambdas", FlagKind::RealList, "Comma-separated intensity sweep"},
        {"alpha-list", "/task/alpha_list", FlagKind::RealList, "Exponents for table1"},
        {"rule", "/task/rule", FlagKind::String, "table1 integration rule: quadrature | grid"},
        {"grid-step", "/task/grid_step", FlagKind::Real, "Step of the grid rule"},
        {"check", "/task/check", FlagKind::Bool, "table1: exit 1 unless every entry is within 1e-3 of the reference"},
        {"samples", "/task/samples", FlagKind::Unsigned, "Monte-Carlo draws per intensity"},
        {"tail-tolerance", "/task/tail_tolerance", FlagKind::Real, "Relative tail moment dropped by the simulation window"},
        {"truncation", "/task/truncation", FlagKind::String, "Simulation window: compensated | plain"},
        {"delta", "/task/delta", FlagKind::Real, "DKW confidence parameter"},
        {"x-min", "/task/x_min", FlagKind::Real, "Lower end of the CDF grid"},
        {"x-max", "/task/x_max", FlagKind::Real, "Upper end of the CDF grid"},
        {"x-points", "/task/x_points", FlagKind::Unsigned, "Points on the CDF grid"},
        {"snr", "/task/snr", FlagKind::Real, "Linear SNR (outage: P/N0, sumcap: P)"},
        {"pg", "/task/pg", FlagKind::Real, "Processing gain (>= 1)"},
        {"d", "/task/d", FlagKind::Real, "Link distance"},
        {"gamma", "/task/gamma", FlagKind::Real, "Target outage probability"},
        {"direct-fading", "/task/direct_fading/kind", FlagKind::String, "Direct-link fading: deterministic | nakagami"},
        {"direct-m", "/task/direct_fading/m", FlagKind::Real, "Direct-link Nakagami shape"},
        {"direct-h0", "/task/direct_fading/h0", FlagKind::Real, "Direct-link deterministic level"},
        {"out", "/output/path", FlagKind::String, "Output directory"},
        {"format", "/output/format", FlagKind::String, "Curve file format: csv | json"},
        {"seed", "/seed", FlagKind::Unsigned, "Master random seed"},
    };
    return table;
}

namespace {

double parse_real(const std::string& text, const std::string& flag)
{
    double v = 0.0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw ValidationError("--" + flag + ": '" + text + "' is not a finite number");
    }
    return v;
}

} // namespace

json flag_value(const FlagSpec& spec, const std::string& text)
{
    switch (spec.kind) {
    case FlagKind::String:
        return text;
    case FlagKind::Real:
        return parse_real(text, spec.flag);
    case FlagKind::Unsigned: {
        std::uint64_t v = 0;
        const char* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(text.data(), end, v);
        if (ec != std::errc() || ptr != end) {
            throw ValidationError("--" + spec.flag + ": '" + text + "' is not a non-negative integer");
        }
        return v;
    }
    case FlagKind::RealList: {
        // "" is the empty list; otherwise every comma-separated item must parse.
        json list = json::array();
        if (text.empty()) {
            return list;
        }
        if (text.back() == ',') {
            throw ValidationError("--" + spec.flag + ": empty list item");
        }
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) {
                throw ValidationError("--" + spec.flag + ": empty list item");
            }
            list.push_back(parse_real(item, spec.flag));
        }
        return list;
    }
    case FlagKind::Bool:
        if (text == "true" || text == "1") {
            return true;
        }
        if (text == "false" || text == "0") {
            return false;
        }
        throw ValidationError("--" + spec.flag + ": expected true or false");
    }
    return nullptr;
}

void apply_preset(RunConfig& cfg, const Preset& preset)
{
    const NetworkModel& model = preset.model;
    ModelSection& m = cfg.model;
    m.pathloss = model.pathloss().name();
    m.alpha = model.pathloss().alpha();
    switch (model.fading().kind()) {
    case FadingKind::Deterministic:
        m.fading = "deterministic";
        m.h0 = model.fading().h0();
        break;
    case FadingKind::NakagamiPower:
        m.fading = "nakagami";
        m.m = model.fading().shape();
        break;
    case FadingKind::CustomMoments:
        m.fading = "moments";
        m.moments = {model.fading().moment(1), model.fading().moment(2), model.fading().moment(3)};
        break;
    }
    if (model.intensity().kind() == IntensityKind::LogRadial) {
        m.intensity = "lograd";
        m.r = model.intensity().lower_edge();
    } else {
        m.intensity = "stationary";
        m.t_min = model.intensity().lower_edge();
    }
    m.lambda = model.lambda();
    m.power = model.power();

    TaskSection& t = cfg.task;
    t.preset = preset.name;
    t.lambdas = preset.lambdas;
    t.samples = preset.num_samples;
    t.snr = preset.snr;
    if (preset.scenario) {
        const OutageScenario& s = *preset.scenario;
        t.snr = s.snr;
        t.pg = s.pg;
        t.d = s.d;
        t.gamma = s.gamma;
        if (s.direct_fading.kind() == FadingKind::Deterministic) {
            t.direct_fading = "deterministic";
            t.direct_h0 = s.direct_fading.h0();
        } else {
            t.direct_fading = "nakagami";
            t.direct_m = s.direct_fading.shape();
        }
    }
}

RunConfig resolve(const json& file, const json& flags)
{
    RunConfig cfg;
    json reference = to_json(cfg);
    check_shape(file, reference, "");
    check_shape(flags, reference, "");

    const json::json_pointer preset_ptr("/task/preset");
    std::string name;
    if (flags.contains(preset_ptr)) {
        name = flags.at(preset_ptr).get<std::string>();
    } else if (file.contains(preset_ptr)) {
        name = file.at(preset_ptr).get<std::string>();
    }
    if (!name.empty()) {
        apply_preset(cfg, preset(name));
    }
    json doc = to_json(cfg);
    doc.merge_patch(file);
    doc.merge_patch(flags);
    return from_json(doc);
}

NetworkModel build_model(const ModelSection& m)
{
    const PathLoss g = m.pathloss == "g1" ? PathLoss::inverse_shifted(m.alpha)
                                          : PathLoss::inverse_sum(m.alpha);
    Fading h = Fading::deterministic(m.h0);
    if (m.fading == "nakagami") {
        h = Fading::nakagami(m.m);
    } else if (m.fading == "moments") {
        detail::require(m.moments.size() == 3, "moments fading needs three values");
        h = Fading::from_moments(m.moments[0], m.moments[1], m.moments[2]);
    }
    const RadialIntensity p = m.intensity == "lograd" ? RadialIntensity::log_radial(m.r)
                                                      : RadialIntensity::stationary(m.t_min);
    return NetworkModel(m.lambda, m.power, g, h, p);
}

Fading build_direct_fading(const TaskSection& t)
{
    return t.direct_fading == "deterministic" ? Fading::deterministic(t.direct_h0)
                                              : Fading::nakagami(t.direct_m);
}

OutageScenario build_scenario(const RunConfig& cfg, double lambda)
{
    OutageScenario s{
        .d = cfg.task.d,
        .snr = cfg.task.snr,
        .pg = cfg.task.pg,
        .gamma = cfg.task.gamma,
        .direct_fading = build_direct_fading(cfg.task),
        .interferers = build_model(cfg.model).with_lambda(lambda),
    };
    s.validate();
    return s;
}

SimulationConfig build_simulation(const RunConfig& cfg)
{
    SimulationConfig sim;
    sim.seed = cfg.seed;
    sim.num_samples = static_cast<std::size_t>(cfg.task.samples);
    sim.tail_tolerance = cfg.task.tail_tolerance;
    sim.truncation = cfg.task.truncation == "plain" ? Truncation::Plain : Truncation::Compensated;
    sim.validate();
    return sim;
}

} // namespace pppkit::cli
