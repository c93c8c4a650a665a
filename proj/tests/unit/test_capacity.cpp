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

#include "oracles.hpp"

#include "pppkit/capacity.hpp"
#include "pppkit/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace pppkit;
using std::numbers::pi;

namespace {

NetworkModel interferers(double lambda, double t_min = 0.5, Fading h = Fading::nakagami(5.0))
{
    return NetworkModel(lambda, 1.0, PathLoss::inverse_sum(4.0), std::move(h), RadialIntensity::stationary(t_min));
}

OutageScenario scenario(double lambda, Fading direct = Fading::nakagami(5.0))
{
    OutageScenario s{.d = 1.0, .snr = 100.0, .pg = 100.0, .gamma = 0.1, .direct_fading = direct,
                     .interferers = interferers(lambda)};
    return s;
}

/// Closed-form Campbell moments of G2 alpha=4 interferers beyond t0 with
/// Nakagami-5 fading: int_t0 2 pi t / (1 + t^4)^k dt via u = t^2.
struct G2Moments {
    double mean;
    double sd;
};
G2Moments g2_moments(double lambda, double t0)
{
    const double u0 = t0 * t0;
    const double i1 = pi * (pi / 2.0 - std::atan(u0));
    const double i2 = pi * (pi / 4.0 - u0 / (2.0 * (1.0 + u0 * u0)) - std::atan(u0) / 2.0);
    return {lambda * i1, std::sqrt(lambda * 1.2 * i2)};
}

constexpr double kZ90 = 1.2815515655446004; // Psi^{-1}(0.9)

} // namespace

TEST_CASE("zeta and threshold")
{
    const OutageScenario s = scenario(3.0);
    const OutageAnalysis a(s);
    const G2Moments m = g2_moments(3.0, 0.5);
    CHECK(a.constants().mean == doctest::Approx(m.mean).epsilon(1e-9));
    CHECK(a.constants().stddev() == doctest::Approx(m.sd).epsilon(1e-9));
    const double gd = 0.5;
    for (double h : {0.3, 1.0, 2.5}) {
        for (double rate : {0.01, 0.5, 2.0}) {
            const double expected = ((h * gd / std::expm1(rate) - 0.01) * 100.0 - m.mean) / m.sd;
            CHECK(a.zeta(h, rate) == doctest::Approx(expected).epsilon(1e-9));
            CHECK(zeta(s, h, rate) == doctest::Approx(expected).epsilon(1e-9));
        }
    }
    CHECK(a.zeta(2.0, 0.5) > a.zeta(1.0, 0.5));
    CHECK(a.zeta(1.0, 0.1) > a.zeta(1.0, 0.5));
    CHECK(a.zeta(1.0, 1e-9) > 1e6);
    CHECK(a.zeta(1.0, 50.0) == doctest::Approx((-1.0 - m.mean) / m.sd).epsilon(1e-9));
    CHECK(a.threshold(0.7) == doctest::Approx(std::expm1(0.7) / (100.0 * gd)).epsilon(1e-14));
    // zeta vanishes at h where the interference term is exactly its mean.
    const double h0 = (m.mean / 100.0 + 0.01) * std::expm1(0.4) / gd;
    CHECK(std::abs(a.zeta(h0, 0.4)) < 1e-9);
    CHECK_THROWS_AS(a.zeta(1.0, 0.0), DomainError);
}

TEST_CASE("deterministic direct link has closed-form capacity")
{
    const OutageScenario s = scenario(4.0, Fading::deterministic());
    const G2Moments m = g2_moments(4.0, 0.5);
    const OutageAnalysis gauss(s, CdfEnvelope::gaussian_only());
    // Psi(zeta(1, R)) = 1 - gamma at the capacity.
    const double closed = std::log1p(0.5 / ((m.mean + kZ90 * m.sd) / 100.0 + 0.01));
    const CapacityBounds c = gauss.outage_capacity_bounds();
    CHECK(c.lower == doctest::Approx(closed).epsilon(1e-8));
    CHECK(c.upper == doctest::Approx(closed).epsilon(1e-8));

    OutageScenario median = s;
    median.gamma = 0.5;
    const CapacityBounds cm = OutageAnalysis(median, CdfEnvelope::gaussian_only()).outage_capacity_bounds();
    CHECK(cm.lower == doctest::Approx(std::log1p(0.5 / (m.mean / 100.0 + 0.01))).epsilon(1e-8));

    // With the full envelope, outage at R is 1 - Q(zeta(1, R)) exactly.
    const OutageAnalysis full(s);
    const CdfEnvelope env(full.constants());
    for (double rate : {0.05, 0.2, 0.6}) {
        const ProbabilityBounds p = full.outage_probability_bounds(rate);
        CHECK(p.lower == doctest::Approx(1.0 - env.upper(full.zeta(1.0, rate))).epsilon(1e-12));
        CHECK(p.upper == doctest::Approx(1.0 - env.lower(full.zeta(1.0, rate))).epsilon(1e-12));
    }
    // Without interference the link is in outage above log(1 + snr G(d)).
    const ProbabilityBounds above = full.outage_probability_bounds(std::log1p(50.0) * 1.01);
    CHECK(above.lower == 1.0);
    CHECK(above.upper == 1.0);
}

TEST_CASE("bounds are ordered on random scenarios")
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 12; ++trial) {
        OutageScenario s = scenario(std::pow(10.0, 2.0 * u(rng)));
        s.d = 0.3 + 2.0 * u(rng);
        s.snr = std::pow(10.0, 3.0 * u(rng));
        s.pg = 1.0 + 200.0 * u(rng);
        s.gamma = 0.02 + 0.4 * u(rng);
        s.direct_fading = Fading::nakagami(1.0 + 4.0 * u(rng));
        const OutageAnalysis a(s);
        INFO("trial ", trial);
        double previous_upper = 0.0;
        for (double rate : {1e-4, 1e-2, 0.1, 0.5, 1.0, 3.0}) {
            const ProbabilityBounds p = a.outage_probability_bounds(rate);
            CHECK(p.lower >= 0.0);
            CHECK(p.lower <= p.upper + 1e-12);
            CHECK(p.upper <= 1.0);
            CHECK(p.upper >= previous_upper - 1e-12);
            previous_upper = p.upper;
        }
        const CapacityBounds c = a.outage_capacity_bounds();
        CHECK(c.lower >= 0.0);
        CHECK(c.lower <= c.upper);
        CHECK(c.upper <= a.max_rate());
        // Definition of the bounds: gamma is met just below each of them.
        if (c.lower > 1e-6) {
            CHECK(a.outage_probability_bounds(c.lower * (1.0 - 1e-6)).upper <= s.gamma + 1e-9);
        }
        if (c.upper > 1e-6) {
            CHECK(a.outage_probability_bounds(c.upper * (1.0 + 1e-6)).lower >= s.gamma - 1e-9);
        }
    }
}

TEST_CASE("weak direct link is always in outage")
{
    OutageScenario s = scenario(1.0);
    s.snr = 1e-12;
    const ProbabilityBounds p = outage_probability_bounds(s, 1.0);
    CHECK(p.lower == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.upper == doctest::Approx(1.0).epsilon(1e-12));
    const CapacityBounds c = outage_capacity_bounds(s);
    CHECK(c.lower < 1e-9);
}

TEST_CASE("expectation over the direct-link fading against Monte Carlo")
{
    const OutageScenario s = scenario(10.0);
    const OutageAnalysis a(s);
    const CdfEnvelope env(a.constants());
    std::mt19937_64 rng(2);
    std::gamma_distribution<double> gamma(5.0, 1.0 / 5.0);
    constexpr int n = 1'000'000;
    for (double rate : {0.05, 0.15, 0.3}) {
        double s_up = 0.0;
        double ss_up = 0.0;
        double s_lo = 0.0;
        double ss_lo = 0.0;
        for (int i = 0; i < n; ++i) {
            const double h = gamma(rng);
            double up = 0.0;
            double lo = 0.0;
            if (h >= a.threshold(rate)) {
                up = env.upper(a.zeta(h, rate));
                lo = env.lower(a.zeta(h, rate));
            }
            s_up += up;
            ss_up += up * up;
            s_lo += lo;
            ss_lo += lo * lo;
        }
        const double m_up = s_up / n;
        const double m_lo = s_lo / n;
        const double se_up = std::sqrt((ss_up / n - m_up * m_up) / n);
        const double se_lo = std::sqrt((ss_lo / n - m_lo * m_lo) / n);
        const ProbabilityBounds p = a.outage_probability_bounds(rate);
        INFO("rate ", rate);
        CHECK(std::abs((1.0 - p.lower) - m_up) < 3.0 * se_up + 1e-9);
        CHECK(std::abs((1.0 - p.upper) - m_lo) < 3.0 * se_lo + 1e-9);
    }
}

TEST_CASE("scenario validation")
{
    OutageScenario s = scenario(1.0);
    CHECK_NOTHROW(s.validate());
    auto broken = [&](auto edit) {
        OutageScenario t = s;
        edit(t);
        return t;
    };
    CHECK_THROWS_AS(broken([](auto& t) { t.d = 0.0; }).validate(), ValidationError);
    CHECK_THROWS_AS(broken([](auto& t) { t.snr = -1.0; }).validate(), ValidationError);
    CHECK_THROWS_AS(broken([](auto& t) { t.pg = 0.5; }).validate(), ValidationError);
    CHECK_THROWS_AS(broken([](auto& t) { t.gamma = 1.0; }).validate(), ValidationError);
    CHECK_THROWS_AS(broken([](auto& t) { t.gamma = 0.0; }).validate(), ValidationError);
    CHECK_THROWS_AS(broken([](auto& t) { t.interferers = t.interferers.with_power(2.0); }).validate(),
                    ValidationError);
    CHECK_THROWS_AS(OutageAnalysis(broken([](auto& t) { t.direct_fading = Fading::from_moments(1, 2, 6); })),
                    UnsupportedError);
    CHECK_THROWS_AS(OutageAnalysis(s).outage_probability_bounds(0.0), DomainError);
}

TEST_CASE("empirical rate quantile")
{
    std::vector<double> rates{10, 9, 8, 7, 6, 5, 4, 3, 2, 1};
    CHECK(empirical_rate_quantile(rates, 0.1).value == 2.0);
    CHECK(empirical_rate_quantile(rates, 0.05).value == 1.0);
    CHECK(empirical_rate_quantile(rates, 0.5).value == 6.0);
    CHECK(empirical_outage(rates, 2.0) == doctest::Approx(0.1));
    CHECK(empirical_outage(rates, 2.5) == doctest::Approx(0.2));
    CHECK(empirical_rate_quantile(rates, 0.1).stderr_value >= 0.0);
    CHECK_THROWS_AS(empirical_rate_quantile({}, 0.1), DomainError);
    CHECK_THROWS_AS(empirical_rate_quantile(rates, 1.0), DomainError);
    CHECK_THROWS_AS(empirical_outage({}, 1.0), DomainError);
}

TEST_CASE("simulated outage capacity lies inside the bounds")
{
    const OutageScenario s = scenario(10.0);
    const CapacityBounds c = outage_capacity_bounds(s);
    for (std::uint64_t seed : {1, 2, 3}) {
        SimulationConfig cfg;
        cfg.seed = seed;
        cfg.num_samples = 10'000;
        const SimulatedValue v = outage_capacity_simulated(s, cfg);
        INFO("seed ", seed);
        CHECK(v.value >= c.lower - 3.0 * v.stderr_value);
        CHECK(v.value <= c.upper + 3.0 * v.stderr_value);
        const auto rates = simulated_link_rates(s, cfg);
        CHECK(rates.size() == cfg.num_samples);
        CHECK(empirical_rate_quantile(rates, s.gamma).value == v.value);
    }
}

TEST_CASE("sum capacity: Gaussian envelope collapses the bounds")
{
    const NetworkModel model = interferers(5.0, 0.0);
    const CapacityBounds c = sum_capacity_bounds(model, 1.0, CdfEnvelope::gaussian_only());
    CHECK(c.lower == doctest::Approx(c.upper).epsilon(1e-12));
    // int_0^inf 1 - Psi((e^x - 1 - E) / sigma) dx by Simpson.
    const double mean = 5.0 * pi * pi / 2.0;
    const double sd = std::sqrt(5.0 * 1.2 * pi * pi / 4.0);
    const double brute = oracle::simpson(
        [&](double x) { return 0.5 * std::erfc((std::expm1(x) - mean) / sd / std::sqrt(2.0)); }, 0.0, 6.0, 200'000);
    CHECK(c.lower == doctest::Approx(brute).epsilon(1e-8));
}

TEST_CASE("sum capacity against the Laplace-functional oracle")
{
    const NetworkModel model = interferers(2.0, 0.0);
    const double snr = 1.0;
    const double exact = oracle::ergodic_log1p([](double t) { return 1.0 / (1.0 + t * t * t * t); },
                                               [](double t) { return 2.0 * pi * t; }, 0.0, 2.0, snr,
                                               [](double a) { return oracle::nakagami_laplace(a, 5.0); });
    SimulationConfig cfg;
    cfg.num_samples = 20'000;
    cfg.seed = 9;
    const SimulatedValue sim = sum_capacity_simulated(model, snr, cfg);
    CHECK(std::abs(sim.value - exact) < 4.0 * sim.stderr_value);
    const CapacityBounds c = sum_capacity_bounds(model, snr);
    CHECK(c.lower <= exact);
    CHECK(exact <= c.upper);

    // Power scaling acts through I(snr) = snr * I(1).
    const double exact_hi = oracle::ergodic_log1p([](double t) { return 1.0 / (1.0 + t * t * t * t); },
                                                  [](double t) { return 2.0 * pi * t; }, 0.0, 2.0, 10.0,
                                                  [](double a) { return oracle::nakagami_laplace(a, 5.0); });
    const SimulatedValue sim_hi = sum_capacity_simulated(model, 10.0, cfg);
    CHECK(std::abs(sim_hi.value - exact_hi) < 4.0 * sim_hi.stderr_value);
    CHECK_THROWS_AS(sum_capacity_bounds(model, 0.0), DomainError);
}

TEST_CASE("sum capacity bounds tighten with lambda")
{
    double previous_gap = std::numeric_limits<double>::infinity();
    double previous_lower = 0.0;
    for (double lambda : {1.0, 4.0, 16.0, 64.0}) {
        const CapacityBounds c = sum_capacity_bounds(interferers(lambda, 0.0), 1.0);
        CHECK(c.upper - c.lower < previous_gap);
        CHECK(c.lower > previous_lower);
        previous_gap = c.upper - c.lower;
        previous_lower = c.lower;
    }
}

TEST_CASE("scaling spread")
{
    const std::vector<double> lambdas{1, 2, 4, 8};
    std::vector<double> inverse;
    for (double l : lambdas) {
        inverse.push_back(3.0 / l);
    }
    CHECK(scaling_spread(lambdas, inverse) == doctest::Approx(1.0).epsilon(1e-15));
    const std::vector<double> mixed{1.0, 0.9, 0.75, 0.375};
    CHECK(scaling_spread(lambdas, mixed) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(scaling_spread(lambdas, mixed, 2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::isinf(scaling_spread(lambdas, std::vector<double>{1, 0, 1, 1})));
    CHECK_THROWS_AS(scaling_spread(lambdas, std::vector<double>{1, 2}), DomainError);

    const OutageScenario s = scenario(1.0);
    CHECK_THROWS_AS(outage_scaling_diagnostic(s, std::vector<double>{1, 2}), DomainError);
    CHECK_THROWS_AS(outage_scaling_diagnostic(s, std::vector<double>{1, 3, 2}), DomainError);
    const std::vector<double> grid{10, 20, 40, 80};
    const ScalingReport r = outage_scaling_diagnostic(s, grid);
    REQUIRE(r.rows.size() == 4);
    for (const auto& row : r.rows) {
        CHECK(row.lambda_lower == doctest::Approx(row.lambda * row.bounds.lower));
        CHECK(row.lambda_upper == doctest::Approx(row.lambda * row.bounds.upper));
    }
    CHECK(r.spread_lower >= 1.0);
    CHECK(r.spread_lower < 1.5);
    CHECK(r.spread_upper < 1.5);
}
