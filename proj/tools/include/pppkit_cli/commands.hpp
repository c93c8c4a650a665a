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

#include "pppkit_cli/run_config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pppkit::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitUnsupported = 3,
    kExitNumerical = 4,
};

/// Reference path-loss constants, one row per exponent.
struct Table1Reference {
    std::vector<double> alphas;
    std::vector<double> g1;
    std::vector<double> g2;
};

/// Embedded reference values for alpha in {3, 4, 5}.
Table1Reference table1_reference();

/// Absolute tolerance of the table1 check.
inline constexpr double kTable1Tolerance = 1e-3;

/// Each command writes its files under cfg.output.path, reports written
/// paths on `log`, and returns an ExitCode. Exceptions propagate; use
/// run_command for the exception-to-exit-code mapping.
int cmd_table1(const RunConfig& cfg, std::ostream& log,
               const Table1Reference& reference = table1_reference());
int cmd_bounds(const RunConfig& cfg, std::ostream& log);
int cmd_simulate(const RunConfig& cfg, std::ostream& log);
int cmd_outage(const RunConfig& cfg, std::ostream& log);
int cmd_sumcap(const RunConfig& cfg, std::ostream& log);

/// Builds every object the config describes and prints the resolved
/// config document on `log`. Writes no files.
int cmd_validate(const RunConfig& cfg, std::ostream& log);

/// Dispatches by subcommand name and maps exceptions to exit codes, with a
/// one-line diagnostic on `err`.
int run_command(const std::string& name, const RunConfig& cfg, std::ostream& log,
                std::ostream& err);

/// Full command line: parses flags and --config, resolves the config and
/// runs the subcommand.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pppkit::cli
