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

#include "pppkit/gaussian_bounds.hpp"
#include "pppkit/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace pppkit {

enum class Truncation {
    /// Simulate [edge, R] with R from the tail-mean rule; the tail is dropped.
    Plain,
    /// Simulate [edge, R] with R from the tail-variance rule and add the
    /// dropped tail's Campbell mean as a constant.
    Compensated
};

struct SimulationConfig {
    std::uint64_t seed = 1;
    std::size_t num_samples = 10'000;
    double tail_tolerance = 1e-4;
    Truncation truncation = Truncation::Compensated;

    void validate() const;
};

/// Draws are generated in blocks of this many samples, block b from
/// random::stream(seed, b), so results do not depend on the thread count.
inline constexpr std::size_t kSampleBlock = 512;

/// Window and constant offset actually used by sample_interference.
struct SimulationWindow {
    double radius = 0.0;      ///< outer edge of the simulated annulus
    double tail_offset = 0.0; ///< added to every draw (zero for Plain)
};

SimulationWindow simulation_window(const NetworkModel& model, const SimulationConfig& cfg);

/// i.i.d. draws of sum_k P H_k G(T_k). Deterministic given cfg.seed.
std::vector<double> sample_interference(const NetworkModel& model, const SimulationConfig& cfg);

/// Same, with an explicit window (no truncation search).
std::vector<double> sample_interference(const NetworkModel& model, const SimulationConfig& cfg,
                                        const SimulationWindow& window);

/// Fixed-count construction I_n = sum_{k <= ceil(Lambda_n)} P H_k G(U_k) with
/// U_k i.i.d. of density lambda p / Lambda_n on [0, n]. Converges in
/// distribution to the Poisson interference as n grows.
std::vector<double> sample_interference_finite_window(const NetworkModel& model, double n,
                                                      const SimulationConfig& cfg);

/// Right-continuous step CDF of a sample.
class EmpiricalCdf {
public:
    explicit EmpiricalCdf(std::vector<double> values);

    double operator()(double x) const;
    double left_limit(double x) const;

    std::size_t size() const noexcept { return sorted_.size(); }
    const std::vector<double>& sorted() const noexcept { return sorted_; }

private:
    std::vector<double> sorted_;
};

/// CDF of (sample - mean) / std with analytic mean and std.
EmpiricalCdf centered_normalized_cdf(std::span<const double> samples, double mean, double std);

/// sup_x |F_n(x) - F(x)| checked on both sides of every jump.
double ks_distance(const EmpiricalCdf& cdf, const std::function<double(double)>& reference);

/// Two-sample Kolmogorov-Smirnov statistic.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

/// DKW band half-width sqrt(ln(2/delta) / (2 n)).
double dkw_slack(std::size_t n, double delta);

struct ContainmentReport {
    std::size_t inside = 0;
    std::size_t total = 0;
    double slack = 0.0;
    double worst_excess = 0.0; ///< largest distance outside the widened band
    double fraction() const { return total == 0 ? 1.0 : double(inside) / double(total); }
};

/// Fraction of grid points with lower - slack <= F_n(x) <= upper + slack,
/// slack = dkw_slack(N, delta).
ContainmentReport envelope_containment(const EmpiricalCdf& cdf, const BoundCurve& curve,
                                       double delta = 0.01);

struct SampleStats {
    double mean = 0.0;
    double variance = 0.0; ///< unbiased
    double stderr_mean = 0.0;
    std::size_t n = 0;
};

SampleStats describe(std::span<const double> samples);

} // namespace pppkit
