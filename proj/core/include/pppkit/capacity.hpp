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
#include "pppkit/montecarlo.hpp"

#include <optional>
#include <span>
#include <vector>

namespace pppkit {

/// Victim link at distance d from its receiver, interfered by a PPP whose
/// transmit power is normalised to 1. Rates are in nats/s/Hz.
struct OutageScenario {
    double d = 1.0;
    double snr = 100.0;   ///< P / N0, linear
    double pg = 100.0;    ///< processing gain, >= 1
    double gamma = 0.1;   ///< target outage probability
    Fading direct_fading = Fading::nakagami(5.0);
    NetworkModel interferers;

    void validate() const;
};

struct CapacityBounds {
    double lower = 0.0;
    double upper = 0.0;
};

struct ProbabilityBounds {
    double lower = 0.0;
    double upper = 0.0;
};

struct SimulatedValue {
    double value = 0.0;
    double stderr_value = 0.0;
};

/// Grid used by the supremum search over rates.
struct RateSearch {
    std::size_t points = 512;
    double min_rate = 1e-6;
    double direct_tail_mass = 1e-8; ///< cut of the direct-link fading tail
};

/**
 * Outage-probability and outage-capacity envelopes for one scenario.
 *
 * Campbell constants of the interferers are computed once at construction.
 * The outage probability at rate R is bracketed by
 *   1 - E[min{1, Q+(zeta(H, R))} 1{H >= thr}]  and
 *   1 - E[max{0, Q-(zeta(H, R))} 1{H >= thr}],  thr = (e^R - 1) / (snr G(d)),
 * and the capacity bounds are the suprema of rates whose bracket end stays
 * below gamma.
 */
class OutageAnalysis {
public:
    explicit OutageAnalysis(OutageScenario scenario, RateSearch search = {});

    /// Same analysis with an explicit interference CDF envelope.
    OutageAnalysis(OutageScenario scenario, CdfEnvelope envelope, RateSearch search = {});

    const OutageScenario& scenario() const noexcept { return scenario_; }
    const ApproxConstants& constants() const noexcept { return constants_; }

    /// ((h G(d) / (e^R - 1) - 1/snr) pg - E[I]) / sqrt(Var[I]).
    double zeta(double h, double rate) const;

    /// Direct-link fading level below which the link is in outage even
    /// without interference.
    double threshold(double rate) const;

    ProbabilityBounds outage_probability_bounds(double rate) const;

    CapacityBounds outage_capacity_bounds() const;

    /// Largest rate on the scan grid (zero-interference capacity at the
    /// fading tail cut).
    double max_rate() const;

private:
    /// E[clip(Q(zeta(H, R))) 1{H >= thr}] using Q+ (upper = true) or Q-.
    double expected_success(double rate, bool upper) const;
    double capacity_for(bool upper_probability) const;

    OutageScenario scenario_;
    RateSearch search_;
    ApproxConstants constants_;
    CdfEnvelope envelope_;
    std::vector<double> kinks_; ///< envelope breakpoints in zeta
    double gd_;
    double h_max_;
};

double zeta(const OutageScenario& scenario, double h, double rate);
ProbabilityBounds outage_probability_bounds(const OutageScenario& scenario, double rate);
CapacityBounds outage_capacity_bounds(const OutageScenario& scenario);

/// Empirical gamma-quantile of log(1 + SINR), i.e. sup{R : P_n[rate < R] <= gamma}.
/// stderr_value is the half-width of the +-1 sigma order-statistic band.
SimulatedValue outage_capacity_simulated(const OutageScenario& scenario,
                                         const SimulationConfig& cfg);

/// Rate samples log(1 + SINR) behind outage_capacity_simulated.
std::vector<double> simulated_link_rates(const OutageScenario& scenario,
                                         const SimulationConfig& cfg);

/// Empirical outage probability P_n[rate < R] from rate samples.
double empirical_outage(std::span<const double> rates, double rate);

/// Quantile sup{R : P_n[X < R] <= gamma} of a sample, with its order-statistic
/// standard error.
SimulatedValue empirical_rate_quantile(std::vector<double> rates, double gamma);

struct SumCapacityOptions {
    double min_k = 10.0;        ///< lower limit on the truncation multiple K
    double tail_target = 1e-8;  ///< Q- must reach 1 - tail_target at E + K sigma
    double rel_tol = 1e-10;
};

/// Ergodic sum-capacity envelope: with z(x) = (e^x - 1 - E) / sigma for the
/// interference I(snr), lower = int_0^inf 1 - min{1, Q+(z)} dx and
/// upper = int_0^inf 1 - max{0, Q-(z)} dx.
CapacityBounds sum_capacity_bounds(const NetworkModel& model, double snr,
                                   const SumCapacityOptions& options = {});
CapacityBounds sum_capacity_bounds(const NetworkModel& model, double snr,
                                   const CdfEnvelope& envelope,
                                   const SumCapacityOptions& options = {});

/// Monte-Carlo mean of log(1 + I(snr)).
SimulatedValue sum_capacity_simulated(const NetworkModel& model, double snr,
                                      const SimulationConfig& cfg);

struct ScalingRow {
    double lambda = 0.0;
    CapacityBounds bounds;
    double lambda_lower = 0.0; ///< lambda * lower
    double lambda_upper = 0.0; ///< lambda * upper
};

struct ScalingReport {
    std::vector<ScalingRow> rows;
    double spread_lower = 0.0; ///< max/min of lambda * lower over the top half
    double spread_upper = 0.0;
};

/// max/min of lambda_i * capacity_i over indices >= from (infinite if any
/// product is zero).
double scaling_spread(std::span<const double> lambdas, std::span<const double> capacities,
                      std::size_t from = 0);

/// lambda * C(lambda) for each bound over an increasing lambda list (>= 3
/// values); a Theta(1/lambda) law shows up as spreads close to 1.
ScalingReport outage_scaling_diagnostic(const OutageScenario& scenario,
                                        std::span<const double> lambdas);

} // namespace pppkit
