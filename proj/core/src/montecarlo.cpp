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

#include "pppkit/montecarlo.hpp"

#include "pppkit/error.hpp"
#include "pppkit/random.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace pppkit {

namespace {

std::size_t block_count(std::size_t n)
{
    return (n + kSampleBlock - 1) / kSampleBlock;
}

/// Sum over a Poisson-count (or fixed-count) set of points on [lo, hi].
template <class CountFn>
void fill_blocks(const NetworkModel& model, const SimulationConfig& cfg, double lo, double hi,
                 double offset, std::vector<double>& out, CountFn&& count_for)
{
    const auto& intensity = model.intensity();
    const auto& pathloss = model.pathloss();
    const double power = model.power();
    const bool stationary = intensity.kind() == IntensityKind::StationaryDisk;
    const bool lograd = intensity.kind() == IntensityKind::LogRadial;
    const double lo2 = lo * lo;
    const double span2 = hi * hi - lo2;
    const double ratio = hi > lo && lo > 0.0 ? hi / lo : 1.0;
    const double log_ratio = std::log(ratio);

    random::parallel_blocks(block_count(out.size()), [&](std::size_t block) {
        RandomStream rng = random::stream(cfg.seed, block);
        FadingSampler fading(model.fading());
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const std::size_t first = block * kSampleBlock;
        const std::size_t last = std::min(out.size(), first + kSampleBlock);
        for (std::size_t i = first; i < last; ++i) {
            const long long count = count_for(rng);
            double sum = 0.0;
            for (long long k = 0; k < count; ++k) {
                const double u = unit(rng);
                double t;
                if (stationary) {
                    t = std::sqrt(lo2 + u * span2);
                } else if (lograd) {
                    t = lo * std::exp(u * log_ratio);
                } else {
                    t = intensity.inverse_measure(u, lo, hi);
                }
                sum += fading(rng) * pathloss.eval_unchecked(t);
            }
            out[i] = power * sum + offset;
        }
    });
}

} // namespace

void SimulationConfig::validate() const
{
    detail::require(num_samples >= 1, "num_samples must be >= 1");
    detail::require(tail_tolerance > 0.0 && tail_tolerance < 1.0,
                    "tail_tolerance must lie in (0, 1)");
}

SimulationWindow simulation_window(const NetworkModel& model, const SimulationConfig& cfg)
{
    cfg.validate();
    SimulationWindow window;
    if (cfg.truncation == Truncation::Plain) {
        window.radius = truncation_radius(model, cfg.tail_tolerance, TailMoment::Mean);
        return window;
    }
    window.radius = truncation_radius(model, cfg.tail_tolerance, TailMoment::Variance);
    window.tail_offset = model.lambda() * model.power() * model.fading().moment(1) *
                         pathloss_moment_integral(model.pathloss(), model.intensity(), 1,
                                                  window.radius, 1e-10);
    return window;
}

std::vector<double> sample_interference(const NetworkModel& model, const SimulationConfig& cfg)
{
    if (!model.fading().has_sampler()) {
        throw UnsupportedError("interference simulation needs a samplable fading model");
    }
    return sample_interference(model, cfg, simulation_window(model, cfg));
}

std::vector<double> sample_interference(const NetworkModel& model, const SimulationConfig& cfg,
                                        const SimulationWindow& window)
{
    cfg.validate();
    if (!model.fading().has_sampler()) {
        throw UnsupportedError("interference simulation needs a samplable fading model");
    }
    std::vector<double> out(cfg.num_samples, 0.0);
    const double lo = model.intensity().lower_edge();
    const double hi = window.radius;
    const double mean_count =
        hi > lo ? cumulative_measure(model.intensity(), model.lambda(), hi) : 0.0;
    fill_blocks(model, cfg, lo, std::max(lo, hi), window.tail_offset, out,
                [mean_count](RandomStream& rng) -> long long {
                    if (!(mean_count > 0.0)) {
                        return 0;
                    }
                    std::poisson_distribution<long long> dist(mean_count);
                    return dist(rng);
                });
    return out;
}

std::vector<double> sample_interference_finite_window(const NetworkModel& model, double n,
                                                      const SimulationConfig& cfg)
{
    cfg.validate();
    if (!model.fading().has_sampler()) {
        throw UnsupportedError("interference simulation needs a samplable fading model");
    }
    const double lo = model.intensity().lower_edge();
    if (!(n > lo)) {
        throw DomainError("finite window must extend beyond the support edge");
    }
    const double lambda_n = cumulative_measure(model.intensity(), model.lambda(), n);
    const auto count = static_cast<long long>(std::ceil(lambda_n));
    std::vector<double> out(cfg.num_samples, 0.0);
    fill_blocks(model, cfg, lo, n, 0.0, out, [count](RandomStream&) { return count; });
    return out;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> values) : sorted_(std::move(values))
{
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const
{
    if (sorted_.empty()) {
        return 0.0;
    }
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::left_limit(double x) const
{
    if (sorted_.empty()) {
        return 0.0;
    }
    const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

EmpiricalCdf centered_normalized_cdf(std::span<const double> samples, double mean, double std)
{
    if (!(std > 0.0)) {
        throw DomainError("normalising standard deviation must be > 0");
    }
    std::vector<double> z;
    z.reserve(samples.size());
    for (double s : samples) {
        z.push_back((s - mean) / std);
    }
    return EmpiricalCdf(std::move(z));
}

double ks_distance(const EmpiricalCdf& cdf, const std::function<double(double)>& reference)
{
    const auto& v = cdf.sorted();
    if (v.empty()) {
        throw DomainError("KS distance of an empty sample");
    }
    const double n = static_cast<double>(v.size());
    double worst = 0.0;
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) {
            ++j;
        }
        const double f = reference(v[i]);
        worst = std::max({worst, std::abs(double(i) / n - f), std::abs(double(j) / n - f)});
        i = j;
    }
    return worst;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() || b.empty()) {
        throw DomainError("KS distance of an empty sample");
    }
    std::vector<double> x(a.begin(), a.end());
    std::vector<double> y(b.begin(), b.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const double nx = double(x.size());
    const double ny = double(y.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double worst = 0.0;
    while (i < x.size() && j < y.size()) {
        const double v = std::min(x[i], y[j]);
        while (i < x.size() && x[i] == v) {
            ++i;
        }
        while (j < y.size() && y[j] == v) {
            ++j;
        }
        worst = std::max(worst, std::abs(double(i) / nx - double(j) / ny));
    }
    return worst;
}

double dkw_slack(std::size_t n, double delta)
{
    if (n == 0 || !(delta > 0.0 && delta < 1.0)) {
        throw DomainError("DKW band needs n >= 1 and delta in (0, 1)");
    }
    return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(n)));
}

ContainmentReport envelope_containment(const EmpiricalCdf& cdf, const BoundCurve& curve,
                                       double delta)
{
    ContainmentReport report;
    report.slack = dkw_slack(cdf.size(), delta);
    report.total = curve.xs.size();
    for (std::size_t i = 0; i < curve.xs.size(); ++i) {
        const double f = cdf(curve.xs[i]);
        const double below = (curve.lower[i] - report.slack) - f;
        const double above = f - (curve.upper[i] + report.slack);
        const double excess = std::max(below, above);
        if (excess <= 0.0) {
            ++report.inside;
        } else {
            report.worst_excess = std::max(report.worst_excess, excess);
        }
    }
    return report;
}

SampleStats describe(std::span<const double> samples)
{
    SampleStats s;
    s.n = samples.size();
    if (s.n == 0) {
        return s;
    }
    double mean = 0.0;
    for (double v : samples) {
        mean += v;
    }
    mean /= double(s.n);
    double ss = 0.0;
    for (double v : samples) {
        ss += (v - mean) * (v - mean);
    }
    s.mean = mean;
    s.variance = s.n > 1 ? ss / double(s.n - 1) : 0.0;
    s.stderr_mean = std::sqrt(s.variance / double(s.n));
    return s;
}

} // namespace pppkit
