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

#include "pppkit/capacity.hpp"
#include "pppkit/error.hpp"
#include "pppkit/gaussian_bounds.hpp"
#include "pppkit/montecarlo.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <set>

namespace pppkit::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Column {
    std::string name;
    std::vector<double> values;
};

std::string format_number(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string lambda_tag(double lambda)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", lambda);
    return buf;
}

fs::path output_file(const RunConfig& cfg, const std::string& name)
{
    const fs::path dir(cfg.output.path);
    fs::create_directories(dir);
    return dir / name;
}

void write_text(const fs::path& path, const std::string& text, std::ostream& log)
{
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw ValidationError("cannot open '" + path.string() + "' for writing");
    }
    os << text;
    if (!os) {
        throw ValidationError("failed writing '" + path.string() + "'");
    }
    log << "wrote " << path.string() << '\n';
}

void write_json(const RunConfig& cfg, const std::string& name, const json& doc, std::ostream& log)
{
    write_text(output_file(cfg, name), doc.dump(2) + "\n", log);
}

/// Curve-like table in the configured format.
void write_table(const RunConfig& cfg, const std::string& stem, const std::vector<Column>& cols,
                 std::ostream& log)
{
    std::string text;
    if (cfg.output.format == "json") {
        json doc = json::object();
        for (const auto& c : cols) {
            json values = json::array();
            for (double v : c.values) {
                values.push_back(std::isnan(v) ? json(nullptr) : json(v));
            }
            doc[c.name] = std::move(values);
        }
        text = doc.dump(2) + "\n";
    } else {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            text += (i ? "," : "") + cols[i].name;
        }
        text += '\n';
        const std::size_t rows = cols.empty() ? 0 : cols.front().values.size();
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t i = 0; i < cols.size(); ++i) {
                text += (i ? "," : "") + format_number(cols[i].values[r]);
            }
            text += '\n';
        }
    }
    write_text(output_file(cfg, stem + (cfg.output.format == "json" ? ".json" : ".csv")), text, log);
}

std::vector<double> require_lambdas(const RunConfig& cfg)
{
    const auto& l = cfg.task.lambdas;
    detail::require(!l.empty(), "no intensities given (set --lambdas or a preset)");
    std::set<std::string> tags;
    for (std::size_t i = 0; i < l.size(); ++i) {
        detail::require(std::isfinite(l[i]) && l[i] > 0.0, "intensities must be finite and > 0");
        detail::require(i == 0 || l[i] > l[i - 1], "intensities must be strictly increasing");
        detail::require(tags.insert(lambda_tag(l[i])).second,
                        "intensities " + lambda_tag(l[i]) + " collide in file names");
    }
    return l;
}

std::vector<double> grid_of(const RunConfig& cfg)
{
    detail::require(cfg.task.x_points >= 2 && cfg.task.x_max > cfg.task.x_min,
                    "CDF grid needs x_max > x_min and at least two points");
    return linear_grid(cfg.task.x_min, cfg.task.x_max, static_cast<std::size_t>(cfg.task.x_points));
}

json constants_json(const ApproxConstants& c)
{
    return json{
        {"i1", c.i1},
        {"i2", c.i2},
        {"i3", c.i3},
        {"path_constant_raw", c.path_constant},
        {"fading_ratio", c.fading_ratio},
        {"shape", c.shape()},
    };
}

bool inside_with_slack(const CapacityBounds& b, const SimulatedValue& s)
{
    const double slack = 3.0 * s.stderr_value;
    return b.lower - slack <= s.value && s.value <= b.upper + slack;
}

json nan_to_null(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

} // namespace

Table1Reference table1_reference()
{
    return {{3.0, 4.0, 5.0}, {1.564, 2.3838, 3.1688}, {1.0501, 1.1972, 1.2713}};
}

int cmd_table1(const RunConfig& cfg, std::ostream& log, const Table1Reference& reference)
{
    detail::require(!cfg.task.alpha_list.empty(), "alpha list is empty");
    detail::require(cfg.task.rule == "quadrature" || cfg.task.grid_step > 0.0,
                    "grid step must be > 0");
    const RadialIntensity plane = RadialIntensity::stationary(0.0);
    auto constant = [&](const PathLoss& g) {
        return cfg.task.rule == "grid" ? pathloss_constant_grid(g, plane, cfg.task.grid_step)
                                       : pathloss_constant(g, plane);
    };

    Column alpha{"alpha", {}}, g1{"g1", {}}, g2{"g2", {}};
    Column r1{"g1_reference", {}}, r2{"g2_reference", {}};
    Column d1{"g1_abs_diff", {}}, d2{"g2_abs_diff", {}};
    bool ok = true;
    for (double a : cfg.task.alpha_list) {
        const double v1 = constant(PathLoss::inverse_shifted(a));
        const double v2 = constant(PathLoss::inverse_sum(a));
        double ref1 = kNaN;
        double ref2 = kNaN;
        for (std::size_t i = 0; i < reference.alphas.size(); ++i) {
            if (std::abs(reference.alphas[i] - a) < 1e-12) {
                ref1 = reference.g1[i];
                ref2 = reference.g2[i];
            }
        }
        alpha.values.push_back(a);
        g1.values.push_back(v1);
        g2.values.push_back(v2);
        r1.values.push_back(ref1);
        r2.values.push_back(ref2);
        d1.values.push_back(std::abs(v1 - ref1));
        d2.values.push_back(std::abs(v2 - ref2));
        for (auto [name, diff] : {std::pair{"g1", std::abs(v1 - ref1)}, std::pair{"g2", std::abs(v2 - ref2)}}) {
            if (!std::isnan(diff) && diff > kTable1Tolerance) {
                ok = false;
                log << "table1: " << name << " alpha=" << format_number(a) << " differs from the reference by "
                    << format_number(diff) << '\n';
            }
        }
    }
    write_table(cfg, "table1", {alpha, g1, g2, r1, r2, d1, d2}, log);
    return cfg.task.check && !ok ? kExitCheckFailed : kExitOk;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& log)
{
    const auto lambdas = require_lambdas(cfg);
    const auto xs = grid_of(cfg);
    const NetworkModel base = build_model(cfg.model);
    const ApproxConstants c0 = campbell_moments(base);

    json runs = json::array();
    for (double lambda : lambdas) {
        const ApproxConstants c = campbell_moments(base.with_lambda(lambda));
        const CdfEnvelope envelope(c);
        const BoundCurve curve = cdf_bounds(envelope, xs);
        write_table(cfg, "bounds_lambda_" + lambda_tag(lambda),
                    {{"x", curve.xs}, {"lower", curve.lower}, {"gaussian", curve.gaussian},
                     {"upper", curve.upper}},
                    log);
        runs.push_back({{"lambda", lambda},
                        {"mean", c.mean},
                        {"variance", c.variance},
                        {"half_width_at_0", envelope.half_width(0.0)}});
    }
    json summary = constants_json(c0);
    summary["pathloss_constant"] = pathloss_constant(base.pathloss(), base.intensity());
    summary["runs"] = runs;
    write_json(cfg, "bounds_summary.json", summary, log);
    return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& log)
{
    const auto lambdas = require_lambdas(cfg);
    const auto xs = grid_of(cfg);
    const NetworkModel base = build_model(cfg.model);
    if (!base.fading().has_sampler()) {
        throw UnsupportedError("simulation needs a samplable fading model, not moments-only");
    }
    detail::require(cfg.task.delta > 0.0 && cfg.task.delta < 1.0, "delta must lie in (0, 1)");
    const SimulationConfig sim = build_simulation(cfg);

    json runs = json::array();
    for (double lambda : lambdas) {
        const NetworkModel model = base.with_lambda(lambda);
        const ApproxConstants c = campbell_moments(model);
        const std::vector<double> samples = sample_interference(model, sim);
        const EmpiricalCdf cdf = centered_normalized_cdf(samples, c.mean, c.stddev());
        const BoundCurve curve = cdf_bounds(CdfEnvelope(c), xs);
        const ContainmentReport rep = envelope_containment(cdf, curve, cfg.task.delta);
        const SampleStats stats = describe(samples);
        const double ks = ks_distance(cdf, normal_cdf);

        std::vector<double> empirical;
        empirical.reserve(xs.size());
        for (double x : xs) {
            empirical.push_back(cdf(x));
        }
        write_table(cfg, "simulate_lambda_" + lambda_tag(lambda),
                    {{"x", curve.xs}, {"empirical", empirical}, {"lower", curve.lower},
                     {"gaussian", curve.gaussian}, {"upper", curve.upper}},
                    log);
        const SimulationWindow window = simulation_window(model, sim);
        runs.push_back({{"lambda", lambda},
                        {"ks", ks},
                        {"containment", rep.fraction()},
                        {"inside", rep.inside},
                        {"grid_points", rep.total},
                        {"dkw_slack", rep.slack},
                        {"worst_excess", rep.worst_excess},
                        {"mean", stats.mean},
                        {"var", stats.variance},
                        {"analytic_mean", c.mean},
                        {"analytic_var", c.variance},
                        {"n", stats.n},
                        {"window_radius", window.radius},
                        {"tail_offset", window.tail_offset}});
    }
    write_json(cfg, "simulate_summary.json",
               {{"seed", cfg.seed}, {"delta", cfg.task.delta}, {"runs", runs}}, log);
    return kExitOk;
}

int cmd_outage(const RunConfig& cfg, std::ostream& log)
{
    const auto lambdas = require_lambdas(cfg);
    const SimulationConfig sim = build_simulation(cfg);

    Column lam{"lambda", {}}, lo{"lower", {}}, mid{"simulated", {}}, hi{"upper", {}}, se{"sim_stderr", {}};
    json contained = json::array();
    bool all_inside = true;
    for (double lambda : lambdas) {
        const OutageScenario scenario = build_scenario(cfg, lambda);
        const CapacityBounds b = OutageAnalysis(scenario).outage_capacity_bounds();
        const SimulatedValue s = outage_capacity_simulated(scenario, sim);
        lam.values.push_back(lambda);
        lo.values.push_back(b.lower);
        mid.values.push_back(s.value);
        hi.values.push_back(b.upper);
        se.values.push_back(s.stderr_value);
        const bool inside = inside_with_slack(b, s);
        all_inside = all_inside && inside;
        contained.push_back(inside);
    }
    write_table(cfg, "outage", {lam, lo, mid, hi, se}, log);

    json scaling{{"lambda_lower", json::array()}, {"lambda_upper", json::array()},
                 {"contained_3se", contained}, {"all_contained", all_inside}};
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        scaling["lambda_lower"].push_back(lambdas[i] * lo.values[i]);
        scaling["lambda_upper"].push_back(lambdas[i] * hi.values[i]);
    }
    const std::size_t from = lambdas.size() / 2;
    scaling["top_half_from_lambda"] = lambdas[from];
    scaling["spread_lower"] = lambdas.size() >= 3 ? nan_to_null(scaling_spread(lambdas, lo.values, from)) : json(nullptr);
    scaling["spread_upper"] = lambdas.size() >= 3 ? nan_to_null(scaling_spread(lambdas, hi.values, from)) : json(nullptr);
    scaling["first_to_last_ratio"] = {
        {"lower", nan_to_null(lo.values.front() / lo.values.back())},
        {"upper", nan_to_null(hi.values.front() / hi.values.back())},
        {"simulated", nan_to_null(mid.values.front() / mid.values.back())},
    };
    write_json(cfg, "outage_scaling.json", scaling, log);
    return kExitOk;
}

int cmd_sumcap(const RunConfig& cfg, std::ostream& log)
{
    const auto lambdas = require_lambdas(cfg);
    const SimulationConfig sim = build_simulation(cfg);
    const NetworkModel base = build_model(cfg.model);
    detail::require(cfg.task.snr > 0.0, "snr must be > 0");

    Column lam{"lambda", {}}, lo{"lower", {}}, mid{"simulated", {}}, hi{"upper", {}}, se{"sim_stderr", {}};
    json contained = json::array();
    bool all_inside = true;
    for (double lambda : lambdas) {
        const NetworkModel model = base.with_lambda(lambda);
        const CapacityBounds b = sum_capacity_bounds(model, cfg.task.snr);
        const SimulatedValue s = sum_capacity_simulated(model, cfg.task.snr, sim);
        lam.values.push_back(lambda);
        lo.values.push_back(b.lower);
        mid.values.push_back(s.value);
        hi.values.push_back(b.upper);
        se.values.push_back(s.stderr_value);
        const bool inside = inside_with_slack(b, s);
        all_inside = all_inside && inside;
        contained.push_back(inside);
    }
    write_table(cfg, "sumcap", {lam, lo, mid, hi, se}, log);

    // Slopes dC / d log(lambda) and their first differences.
    json slope_lower = json::array(), slope_upper = json::array();
    json second_lower = json::array(), second_upper = json::array();
    bool monotone = true;
    for (std::size_t i = 1; i < lambdas.size(); ++i) {
        const double dl = std::log(lambdas[i] / lambdas[i - 1]);
        slope_lower.push_back((lo.values[i] - lo.values[i - 1]) / dl);
        slope_upper.push_back((hi.values[i] - hi.values[i - 1]) / dl);
        monotone = monotone && lo.values[i] > lo.values[i - 1] && hi.values[i] > hi.values[i - 1];
        if (i >= 2) {
            second_lower.push_back(lo.values[i] - 2.0 * lo.values[i - 1] + lo.values[i - 2]);
            second_upper.push_back(hi.values[i] - 2.0 * hi.values[i - 1] + hi.values[i - 2]);
        }
    }
    write_json(cfg, "sumcap_scaling.json",
               {{"snr", cfg.task.snr},
                {"monotone_increasing", monotone},
                {"contained_3se", contained},
                {"all_contained", all_inside},
                {"slope_log_lambda_lower", slope_lower},
                {"slope_log_lambda_upper", slope_upper},
                {"second_difference_lower", second_lower},
                {"second_difference_upper", second_upper}},
               log);
    return kExitOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& log)
{
    const NetworkModel model = build_model(cfg.model);
    (void)build_simulation(cfg);
    (void)build_direct_fading(cfg.task);
    (void)model;
    log << to_json(cfg).dump(2) << '\n';
    return kExitOk;
}

int run_command(const std::string& name, const RunConfig& cfg, std::ostream& log, std::ostream& err)
{
    try {
        if (name == "table1") {
            return cmd_table1(cfg, log);
        }
        if (name == "bounds") {
            return cmd_bounds(cfg, log);
        }
        if (name == "simulate") {
            return cmd_simulate(cfg, log);
        }
        if (name == "outage") {
            return cmd_outage(cfg, log);
        }
        if (name == "sumcap") {
            return cmd_sumcap(cfg, log);
        }
        if (name == "validate") {
            return cmd_validate(cfg, log);
        }
        err << "error: unknown subcommand '" << name << "'\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}

} // namespace pppkit::cli
