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

#include "pppkit/error.hpp"
#include "pppkit/quadrature.hpp"
#include "pppkit/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace pppkit {

namespace {

// Keeps the direct-link draws on streams disjoint from the interference ones.
constexpr std::uint64_t kDirectLinkStreams = 0x5A17'0000'0000'0000ULL;

double clip01(double v)
{
    return std::clamp(v, 0.0, 1.0);
}

} // namespace

void OutageScenario::validate() const
{
    detail::require(std::isfinite(d) && d > 0.0, "link distance d must be > 0");
    detail::require(std::isfinite(snr) && snr > 0.0, "snr must be > 0");
    detail::require(std::isfinite(pg) && pg >= 1.0, "processing gain must be >= 1");
    detail::require(gamma > 0.0 && gamma < 1.0, "target outage probability must lie in (0, 1)");
    detail::require(interferers.power() == 1.0,
                    "interferer transmit power must be normalised to 1");
}

OutageAnalysis::OutageAnalysis(OutageScenario scenario, RateSearch search)
    : OutageAnalysis(scenario, CdfEnvelope(campbell_moments(scenario.interferers)), search)
{
}

OutageAnalysis::OutageAnalysis(OutageScenario scenario, CdfEnvelope envelope, RateSearch search)
    : scenario_(std::move(scenario)), search_(search),
      constants_(campbell_moments(scenario_.interferers)), envelope_(envelope),
      kinks_(envelope_.breakpoints())
{
    scenario_.validate();
    if (scenario_.direct_fading.kind() == FadingKind::CustomMoments) {
        throw UnsupportedError("outage bounds need a direct-link fading density");
    }
    gd_ = scenario_.interferers.pathloss()(scenario_.d);
    detail::require(gd_ > 0.0, "path loss at the link distance must be > 0");
    h_max_ = scenario_.direct_fading.upper_quantile(search_.direct_tail_mass);
}

double OutageAnalysis::zeta(double h, double rate) const
{
    if (!(rate > 0.0)) {
        throw DomainError("rate must be > 0");
    }
    const double excess = h * gd_ / std::expm1(rate) - 1.0 / scenario_.snr;
    return (excess * scenario_.pg - constants_.mean) / constants_.stddev();
}

double OutageAnalysis::threshold(double rate) const
{
    return std::expm1(rate) / (scenario_.snr * gd_);
}

double OutageAnalysis::expected_success(double rate, bool upper) const
{
    const double thr = threshold(rate);
    const Fading& fading = scenario_.direct_fading;
    if (fading.kind() == FadingKind::Deterministic) {
        if (fading.h0() < thr) {
            return 0.0;
        }
        const double z = zeta(fading.h0(), rate);
        return upper ? envelope_.upper(z) : envelope_.lower(z);
    }
    if (thr >= h_max_) {
        return 0.0;
    }
    // Integrate in u = h - thr: zeta = (u slope - E) / sigma has no
    // cancellation there, and envelope kinks map to fixed offsets.
    const double slope = gd_ / std::expm1(rate) * scenario_.pg;
    const double mean = constants_.mean;
    const double sigma = constants_.stddev();
    auto integrand = [&](double u) {
        const double z = (u * slope - mean) / sigma;
        const double q = upper ? envelope_.upper(z) : envelope_.lower(z);
        return q * fading.density(thr + u);
    };
    const double u_max = h_max_ - thr;
    std::vector<double> cuts{0.0};
    for (double z : kinks_) {
        const double u = (z * sigma + mean) / slope;
        if (u > 0.0 && u < u_max) {
            cuts.push_back(u);
        }
    }
    cuts.push_back(u_max);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        total += quadrature::integrate_absolute(integrand, cuts[i], cuts[i + 1], 1e-13).value;
    }
    return total;
}

ProbabilityBounds OutageAnalysis::outage_probability_bounds(double rate) const
{
    if (!(rate > 0.0)) {
        throw DomainError("rate must be > 0");
    }
    ProbabilityBounds b;
    b.lower = clip01(1.0 - expected_success(rate, true));
    b.upper = clip01(1.0 - expected_success(rate, false));
    return b;
}

double OutageAnalysis::max_rate() const
{
    return std::log1p(scenario_.snr * h_max_ * gd_);
}

double OutageAnalysis::capacity_for(bool upper_probability) const
{
    auto probability = [&](double rate) {
        const auto b = outage_probability_bounds(rate);
        return upper_probability ? b.upper : b.lower;
    };
    auto feasible = [&](double rate) { return probability(rate) <= scenario_.gamma; };

    const double r_max = max_rate();
    if (!(r_max > search_.min_rate) || search_.points < 2) {
        return 0.0;
    }
    // Q+- are not monotone in their argument, so scan for the last feasible
    // grid point instead of assuming a single crossing.
    const double log_lo = std::log(search_.min_rate);
    const double log_hi = std::log(r_max);
    auto grid = [&](std::size_t i) {
        return std::exp(log_lo + (log_hi - log_lo) * double(i) / double(search_.points - 1));
    };
    std::optional<std::size_t> last;
    for (std::size_t i = 0; i < search_.points; ++i) {
        if (feasible(grid(i))) {
            last = i;
        }
    }
    if (!last) {
        return 0.0;
    }
    if (*last + 1 == search_.points) {
        return grid(*last);
    }
    double lo = grid(*last);
    double hi = grid(*last + 1);
    while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

CapacityBounds OutageAnalysis::outage_capacity_bounds() const
{
    CapacityBounds c;
    c.lower = capacity_for(true);
    c.upper = capacity_for(false);
    return c;
}

double zeta(const OutageScenario& scenario, double h, double rate)
{
    return OutageAnalysis(scenario).zeta(h, rate);
}

ProbabilityBounds outage_probability_bounds(const OutageScenario& scenario, double rate)
{
    return OutageAnalysis(scenario).outage_probability_bounds(rate);
}

CapacityBounds outage_capacity_bounds(const OutageScenario& scenario)
{
    return OutageAnalysis(scenario).outage_capacity_bounds();
}

std::vector<double> simulated_link_rates(const OutageScenario& scenario,
                                         const SimulationConfig& cfg)
{
    scenario.validate();
    if (!scenario.direct_fading.has_sampler()) {
        throw UnsupportedError("simulated outage capacity needs a samplable direct-link fading");
    }
    const std::vector<double> interference = sample_interference(scenario.interferers, cfg);
    const double gd = scenario.interferers.pathloss()(scenario.d);

    std::vector<double> rates(interference.size());
    const std::size_t blocks = (rates.size() + kSampleBlock - 1) / kSampleBlock;
    random::parallel_blocks(blocks, [&](std::size_t block) {
        RandomStream rng = random::stream(cfg.seed, kDirectLinkStreams + block);
        FadingSampler direct(scenario.direct_fading);
        const std::size_t first = block * kSampleBlock;
        const std::size_t last = std::min(rates.size(), first + kSampleBlock);
        for (std::size_t i = first; i < last; ++i) {
            const double h = direct(rng);
            const double sinr = h * gd / (1.0 / scenario.snr + interference[i] / scenario.pg);
            rates[i] = std::log1p(sinr);
        }
    });
    return rates;
}

double empirical_outage(std::span<const double> rates, double rate)
{
    if (rates.empty()) {
        throw DomainError("empirical outage of an empty sample");
    }
    const auto below = std::count_if(rates.begin(), rates.end(), [rate](double r) { return r < rate; });
    return double(below) / double(rates.size());
}

SimulatedValue empirical_rate_quantile(std::vector<double> rates, double gamma)
{
    if (rates.empty()) {
        throw DomainError("quantile of an empty sample");
    }
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw DomainError("quantile level must lie in [0, 1)");
    }
    std::sort(rates.begin(), rates.end());
    const double n = double(rates.size());
    // P_n[X < R] <= gamma holds up to and including the floor(gamma n)-th
    // order statistic (0-based).
    const auto k = std::min<std::size_t>(rates.size() - 1, std::size_t(std::floor(gamma * n)));
    const double band = std::sqrt(n * gamma * (1.0 - gamma));
    const auto lo = std::size_t(std::max(0.0, double(k) - band));
    const auto hi = std::min<std::size_t>(rates.size() - 1, std::size_t(double(k) + band + 0.5));
    return {rates[k], 0.5 * (rates[hi] - rates[lo])};
}

SimulatedValue outage_capacity_simulated(const OutageScenario& scenario,
                                         const SimulationConfig& cfg)
{
    return empirical_rate_quantile(simulated_link_rates(scenario, cfg), scenario.gamma);
}

CapacityBounds sum_capacity_bounds(const NetworkModel& model, double snr,
                                   const SumCapacityOptions& options)
{
    return sum_capacity_bounds(model, snr, CdfEnvelope(campbell_moments(model)), options);
}

CapacityBounds sum_capacity_bounds(const NetworkModel& model, double snr,
                                   const CdfEnvelope& envelope,
                                   const SumCapacityOptions& options)
{
    if (!(snr > 0.0) || !std::isfinite(snr)) {
        throw DomainError("snr must be > 0");
    }
    const ApproxConstants c = campbell_moments(model.with_power(snr));
    const double mean = c.mean;
    const double sigma = c.stddev();

    double k = options.min_k;
    while (1.0 - envelope.lower_raw(k) > options.tail_target) {
        k *= 1.5;
        if (k > 1e9) {
            throw ValidationError("sum-capacity envelope tail does not vanish");
        }
    }
    const double x_max = std::log1p(mean + k * sigma);

    auto z_of = [&](double x) { return (std::expm1(x) - mean) / sigma; };
    // 1 - min{1, Q+} and 1 - max{0, Q-} in complementary form, so the
    // far tail keeps its relative precision.
    auto lower_integrand = [&](double x) {
        const double z = z_of(x);
        return std::max(0.0, normal_cdf(-z) - envelope.half_width(z));
    };
    auto upper_integrand = [&](double x) {
        const double z = z_of(x);
        return std::min(1.0, normal_cdf(-z) + envelope.half_width(z));
    };

    std::vector<double> cuts{0.0};
    for (double z : envelope.breakpoints()) {
        const double v = mean + z * sigma;
        if (v > 0.0) {
            const double x = std::log1p(v);
            if (x > 0.0 && x < x_max) {
                cuts.push_back(x);
            }
        }
    }
    cuts.push_back(x_max);
    std::sort(cuts.begin(), cuts.end());

    CapacityBounds out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        out.lower += quadrature::integrate(lower_integrand, cuts[i], cuts[i + 1], options.rel_tol, 30).value;
        out.upper += quadrature::integrate(upper_integrand, cuts[i], cuts[i + 1], options.rel_tol, 30).value;
    }
    return out;
}

SimulatedValue sum_capacity_simulated(const NetworkModel& model, double snr,
                                      const SimulationConfig& cfg)
{
    if (!(snr > 0.0)) {
        throw DomainError("snr must be > 0");
    }
    std::vector<double> samples = sample_interference(model.with_power(snr), cfg);
    for (double& s : samples) {
        s = std::log1p(s);
    }
    const SampleStats stats = describe(samples);
    return {stats.mean, stats.stderr_mean};
}

double scaling_spread(std::span<const double> lambdas, std::span<const double> capacities,
                      std::size_t from)
{
    if (lambdas.size() != capacities.size()) {
        throw DomainError("lambda and capacity lists differ in length");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = from; i < lambdas.size(); ++i) {
        const double product = lambdas[i] * capacities[i];
        lo = std::min(lo, product);
        hi = std::max(hi, product);
    }
    if (!(lo > 0.0)) {
        return std::numeric_limits<double>::infinity();
    }
    return hi / lo;
}

ScalingReport outage_scaling_diagnostic(const OutageScenario& scenario,
                                        std::span<const double> lambdas)
{
    if (lambdas.size() < 3) {
        throw DomainError("scaling diagnostic needs at least three lambda values");
    }
    for (std::size_t i = 1; i < lambdas.size(); ++i) {
        if (!(lambdas[i] > lambdas[i - 1])) {
            throw DomainError("lambda values must be strictly increasing");
        }
    }
    ScalingReport report;
    std::vector<double> lowers;
    std::vector<double> uppers;
    for (double lambda : lambdas) {
        OutageScenario s = scenario;
        s.interferers = scenario.interferers.with_lambda(lambda);
        ScalingRow row;
        row.lambda = lambda;
        row.bounds = OutageAnalysis(s).outage_capacity_bounds();
        row.lambda_lower = lambda * row.bounds.lower;
        row.lambda_upper = lambda * row.bounds.upper;
        lowers.push_back(row.bounds.lower);
        uppers.push_back(row.bounds.upper);
        report.rows.push_back(row);
    }
    const std::size_t from = lambdas.size() / 2;
    report.spread_lower = scaling_spread(lambdas, lowers, from);
    report.spread_upper = scaling_spread(lambdas, uppers, from);
    return report;
}

} // namespace pppkit
