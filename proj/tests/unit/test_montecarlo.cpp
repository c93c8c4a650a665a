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

#include "pppkit/error.hpp"
#include "pppkit/montecarlo.hpp"
#include "pppkit/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

using namespace pppkit;
using std::numbers::pi;

namespace {

NetworkModel g2_model(double lambda, Fading h = Fading::deterministic())
{
    return NetworkModel(lambda, 1.0, PathLoss::inverse_sum(4.0), std::move(h), RadialIntensity::stationary());
}

struct Moments {
    double mean;
    double var;
};

/// Campbell mean and variance by Simpson, independent of the library.
Moments campbell_oracle(const std::function<double(double)>& g, const std::function<double(double)>& p,
                        double edge, double lambda, double m1, double m2)
{
    const double i1 = oracle::simpson_half_line([&](double t) { return g(t) * p(t); }, edge, 200'000);
    const double i2 = oracle::simpson_half_line([&](double t) { return g(t) * g(t) * p(t); }, edge, 200'000);
    return {lambda * m1 * i1, lambda * m2 * i2};
}

} // namespace

TEST_CASE("simulation is deterministic in the seed")
{
    const auto model = g2_model(2.0, Fading::nakagami(3.0));
    SimulationConfig cfg;
    cfg.num_samples = 3000;
    cfg.seed = 17;
    const auto a = sample_interference(model, cfg);
    const auto b = sample_interference(model, cfg);
    CHECK(a == b);
    cfg.seed = 18;
    CHECK(sample_interference(model, cfg) != a);
    // A longer run extends a shorter one block by block.
    cfg.seed = 17;
    cfg.num_samples = 5000;
    const auto longer = sample_interference(model, cfg);
    CHECK(std::equal(a.begin(), a.end(), longer.begin()));
}

TEST_CASE("block scheduler covers every block once")
{
    std::vector<std::atomic<int>> hits(1000);
    random::parallel_blocks(hits.size(), [&](std::size_t b) { hits[b].fetch_add(1); });
    CHECK(std::all_of(hits.begin(), hits.end(), [](const auto& h) { return h.load() == 1; }));
    CHECK(random::worker_count() >= 1);
}

TEST_CASE("simulated moments match Campbell")
{
    // 36 configurations; 4-sigma bands keep the family-wise false alarm rate
    // well below 1% for a fixed seed.
    constexpr std::size_t n = 20'000;
    for (double alpha : {3.0, 4.0, 5.0}) {
        for (int kind = 0; kind < 2; ++kind) {
            const PathLoss g = kind == 0 ? PathLoss::inverse_shifted(alpha) : PathLoss::inverse_sum(alpha);
            for (int geo = 0; geo < 2; ++geo) {
                const RadialIntensity p = geo == 0 ? RadialIntensity::stationary() : RadialIntensity::log_radial(0.5);
                const double edge = geo == 0 ? 0.0 : 0.5;
                auto density = [geo](double t) { return geo == 0 ? 2.0 * pi * t : 2.0 * pi / t; };
                for (const Fading& h : {Fading::deterministic(), Fading::nakagami(1.0), Fading::nakagami(5.0)}) {
                    const double m1 = 1.0;
                    const double m2 = h.kind() == FadingKind::Deterministic ? 1.0 : 1.0 + 1.0 / h.shape();
                    const NetworkModel model(1.0, 1.0, g, h, p);
                    SimulationConfig cfg;
                    cfg.num_samples = n;
                    cfg.seed = 5;
                    const auto xs = sample_interference(model, cfg);
                    const SampleStats s = describe(xs);
                    double m4 = 0.0;
                    for (double x : xs) {
                        m4 += std::pow(x - s.mean, 4);
                    }
                    m4 /= double(n);
                    const Moments truth = campbell_oracle(g, density, edge, 1.0, m1, m2);
                    INFO(g.name(), " ", p.name(), " ", h.name());
                    CHECK(std::abs(s.mean - truth.mean) < 4.0 * s.stderr_mean);
                    const double var_se = std::sqrt((m4 - s.variance * s.variance) / double(n));
                    CHECK(std::abs(s.variance - truth.var) < 4.0 * var_se);
                }
            }
        }
    }
}

TEST_CASE("finite-window construction approaches the Poisson field")
{
    const auto model = g2_model(1.0);
    SimulationConfig cfg;
    cfg.num_samples = 20'000;
    cfg.seed = 3;
    const auto poisson = sample_interference(model, cfg);
    cfg.seed = 4;
    const auto finite = sample_interference_finite_window(model, 20.0, cfg);
    const double d = ks_two_sample(poisson, finite);
    CHECK(d == doctest::Approx(oracle::ks_two_sample(poisson, finite)).epsilon(1e-12));
    CHECK(d < oracle::ks_two_sample_critical_1pct(poisson.size(), finite.size()));
    CHECK_THROWS_AS(sample_interference_finite_window(model, 0.0, cfg), DomainError);
}

TEST_CASE("truncation")
{
    const auto model = g2_model(1.0);
    SimulationConfig cfg;
    cfg.truncation = Truncation::Plain;
    const SimulationWindow plain = simulation_window(model, cfg);
    CHECK(plain.tail_offset == 0.0);
    cfg.truncation = Truncation::Compensated;
    const SimulationWindow comp = simulation_window(model, cfg);
    // Tail of 2 pi t / (1 + t^4) beyond R is pi (pi/2 - atan(R^2)).
    CHECK(comp.tail_offset == doctest::Approx(pi * (pi / 2.0 - std::atan(comp.radius * comp.radius))).epsilon(1e-8));
    CHECK(comp.radius < plain.radius);

    // Plain truncation biases the mean down by about tol times the mean.
    cfg.num_samples = 50'000;
    cfg.truncation = Truncation::Plain;
    cfg.tail_tolerance = 1e-2;
    const SampleStats loose = describe(sample_interference(model, cfg));
    const double mean = pi * pi / 2.0;
    CHECK(loose.mean < mean);
    CHECK(std::abs(loose.mean - 0.99 * mean) < 4.0 * loose.stderr_mean);
    cfg.truncation = Truncation::Compensated;
    const SampleStats fixed = describe(sample_interference(model, cfg));
    CHECK(std::abs(fixed.mean - mean) < 4.0 * fixed.stderr_mean);

    cfg.tail_tolerance = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
    cfg.tail_tolerance = 1e-4;
    cfg.num_samples = 0;
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
    CHECK_THROWS_AS(sample_interference(model.with_fading(Fading::from_moments(1.0, 2.0, 6.0)), SimulationConfig{}),
                    UnsupportedError);
}

TEST_CASE("explicit window")
{
    const auto model = g2_model(1.0);
    SimulationConfig cfg;
    cfg.num_samples = 1000;
    const auto shifted = sample_interference(model, cfg, SimulationWindow{5.0, 2.0});
    const auto base = sample_interference(model, cfg, SimulationWindow{5.0, 0.0});
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(shifted[i] == doctest::Approx(base[i] + 2.0).epsilon(1e-14));
    }
}

TEST_CASE("empirical cdf")
{
    const EmpiricalCdf empty({});
    CHECK(empty(0.0) == 0.0);
    CHECK(empty.size() == 0);
    CHECK_THROWS_AS(ks_distance(empty, [](double) { return 0.5; }), DomainError);

    const EmpiricalCdf f({3.0, 1.0, 2.0, 2.0});
    CHECK(f(0.5) == 0.0);
    CHECK(f(1.0) == 0.25);
    CHECK(f.left_limit(2.0) == 0.25);
    CHECK(f(2.0) == 0.75);
    CHECK(f(3.0) == 1.0);
    CHECK(f(1e9) == 1.0);

    // A point mass at zero is 1/2 away from Psi on both sides of the jump.
    const EmpiricalCdf step(std::vector<double>(10, 0.0));
    CHECK(ks_distance(step, normal_cdf) == doctest::Approx(0.5).epsilon(1e-15));

    const std::vector<double> raw{1.0, 3.0, 5.0};
    const EmpiricalCdf z = centered_normalized_cdf(raw, 3.0, 2.0);
    CHECK(z.sorted() == std::vector<double>{-1.0, 0.0, 1.0});
    CHECK_THROWS_AS(centered_normalized_cdf(raw, 0.0, 0.0), DomainError);

    // Uniform sample against the uniform CDF.
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u;
    std::vector<double> us(20'000);
    for (double& v : us) {
        v = u(rng);
    }
    const double d = ks_distance(EmpiricalCdf(us), [](double x) { return std::clamp(x, 0.0, 1.0); });
    CHECK(d < oracle::ks_critical_1pct(us.size()));
    CHECK(d > 0.0);
}

TEST_CASE("DKW slack and containment")
{
    CHECK(dkw_slack(10'000, 0.01) == doctest::Approx(std::sqrt(std::log(200.0) / 20'000.0)).epsilon(1e-15));
    CHECK_THROWS_AS(dkw_slack(0, 0.01), DomainError);
    CHECK_THROWS_AS(dkw_slack(10, 1.0), DomainError);

    // Degenerate envelope [0.5, 0.5] everywhere.
    BoundCurve curve;
    curve.xs = {-1.0, 0.0, 1.0};
    curve.lower = {0.5, 0.5, 0.5};
    curve.upper = {0.5, 0.5, 0.5};
    curve.gaussian = {0.5, 0.5, 0.5};
    const EmpiricalCdf f({-2.0, -0.5, 0.5, 2.0});
    const ContainmentReport r = envelope_containment(f, curve, 0.5);
    CHECK(r.total == 3);
    CHECK(r.slack == doctest::Approx(std::sqrt(std::log(4.0) / 8.0)));
    // F = 0.25, 0.5, 0.75: all within 0.5 +- 0.416.
    CHECK(r.inside == 3);
    CHECK(r.fraction() == 1.0);
    const ContainmentReport tight = envelope_containment(EmpiricalCdf({-2.0, -1.5, -1.2, -1.1, -0.5, 0.5}), curve, 0.5);
    CHECK(tight.inside < 3);
    CHECK(tight.worst_excess > 0.0);
}

TEST_CASE("describe")
{
    const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    const SampleStats s = describe(v);
    CHECK(s.n == 4);
    CHECK(s.mean == 2.5);
    CHECK(s.variance == doctest::Approx(5.0 / 3.0));
    CHECK(s.stderr_mean == doctest::Approx(std::sqrt(5.0 / 12.0)));
    CHECK(describe(std::vector<double>{}).n == 0);
    CHECK(describe(std::vector<double>{7.0}).variance == 0.0);
}

TEST_CASE("normalised interference approaches the Gaussian")
{
    // KS distance to Psi shrinks with lambda and stays inside the envelope.
    double previous = 1.0;
    for (double lambda : {0.5, 5.0, 50.0}) {
        const auto model = g2_model(lambda, Fading::nakagami(2.0));
        SimulationConfig cfg;
        cfg.num_samples = 10'000;
        cfg.seed = 11;
        const auto xs = sample_interference(model, cfg);
        const ApproxConstants c = campbell_moments(model);
        const EmpiricalCdf z = centered_normalized_cdf(xs, c.mean, c.stddev());
        const double d = ks_distance(z, normal_cdf);
        CHECK(d < previous);
        previous = d;
        const auto report = envelope_containment(z, cdf_bounds(model, linear_grid()));
        CHECK(report.fraction() == 1.0);
    }
}
