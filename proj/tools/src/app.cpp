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

#include "pppkit_cli/commands.hpp"

#include "pppkit/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>

namespace pppkit::cli {

using nlohmann::json;

namespace {

struct Subcommand {
    const char* name;
    const char* description;
};

constexpr Subcommand kSubcommands[] = {
    {"table1", "Path-loss constant table for G1 and G2 over --alpha-list"},
    {"bounds", "Berry-Esseen CDF envelopes for each intensity in --lambdas"},
    {"simulate", "Monte-Carlo CDF against the envelopes, KS distance and containment"},
    {"outage", "Outage-capacity bounds and simulated rates over --lambdas"},
    {"sumcap", "Ergodic sum-capacity bounds and simulated mean over --lambdas"},
    {"validate", "Resolve presets, config file and flags; print the config"},
};

const char* type_name(FlagKind kind)
{
    switch (kind) {
    case FlagKind::Real:
        return "REAL";
    case FlagKind::Unsigned:
        return "U64";
    case FlagKind::RealList:
        return "REAL,...";
    case FlagKind::String:
    case FlagKind::Bool:
        break;
    }
    return "TEXT";
}

json read_config_file(const std::string& path)
{
    std::ifstream is(path);
    if (!is) {
        throw ValidationError("cannot read config file '" + path + "'");
    }
    try {
        return json::parse(is);
    } catch (const json::parse_error& e) {
        throw ValidationError("config file '" + path + "': " + e.what());
    }
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"pppkit: Gaussian-approximation bounds for Poisson network interference"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path, "JSON run configuration (flags override its keys)")
        ->type_name("PATH");

    std::map<std::string, std::string> text;
    bool check = false;
    for (const FlagSpec& spec : flag_table()) {
        const std::string help = spec.help + "  [" + spec.pointer + "]";
        if (spec.kind == FlagKind::Bool) {
            app.add_flag("--" + spec.flag, check, help);
        } else {
            app.add_option("--" + spec.flag, text[spec.flag], help)
                ->type_name(spec.flag == "out" ? "PATH" : type_name(spec.kind));
        }
    }
    for (const auto& sub : kSubcommands) {
        app.add_subcommand(sub.name, sub.description)->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::string command;
    for (const auto& sub : kSubcommands) {
        if (app.got_subcommand(sub.name)) {
            command = sub.name;
        }
    }

    RunConfig cfg;
    try {
        json patch = json::object();
        for (const FlagSpec& spec : flag_table()) {
            if (app.get_option("--" + spec.flag)->count() == 0) {
                continue;
            }
            patch[json::json_pointer(spec.pointer)] =
                spec.kind == FlagKind::Bool ? json(check) : flag_value(spec, text[spec.flag]);
        }
        const json file = config_path.empty() ? json::object() : read_config_file(config_path);
        cfg = resolve(file, patch);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return run_command(command, cfg, out, err);
}

} // namespace pppkit::cli
