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

#include "pppkit/geometry.hpp"

#include "pppkit/error.hpp"
#include "pppkit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace pppkit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kGrowthProbePoints = 256;

} // namespace

RadialIntensity::RadialIntensity(IntensityKind kind, double lower, double growth_epsilon,
                                 std::shared_ptr<const std::function<double(double)>> custom)
    : kind_(kind), lower_(lower), growth_epsilon_(growth_epsilon), custom_(std::move(custom))
{
}

RadialIntensity RadialIntensity::stationary(double t_min)
{
    detail::require(std::isfinite(t_min) && t_min >= 0.0, "exclusion radius must be >= 0");
    return RadialIntensity(IntensityKind::StationaryDisk, t_min, 0.1, nullptr);
}

RadialIntensity RadialIntensity::log_radial(double r)
{
    detail::require(std::isfinite(r) && r > 0.0, "log-radial inner radius must be > 0");
    return RadialIntensity(IntensityKind::LogRadial, r, 0.1, nullptr);
}

RadialIntensity RadialIntensity::custom(std::function<double(double)> density, double lower,
                                        double growth_epsilon)
{
    detail::require(static_cast<bool>(density), "custom intensity needs a callable");
    detail::require(std::isfinite(lower) && lower >= 0.0, "custom support edge must be >= 0");
    detail::require(growth_epsilon > 0.0, "growth epsilon must be > 0");
    return RadialIntensity(IntensityKind::Custom, lower, growth_epsilon,
                           std::make_shared<const std::function<double(double)>>(
                               std::move(density)));
}

double RadialIntensity::density(double t) const
{
    if (t < lower_) {
        return 0.0;
    }
    switch (kind_) {
    case IntensityKind::StationaryDisk:
        return kTwoPi * t;
    case IntensityKind::LogRadial:
        return kTwoPi / t;
    case IntensityKind::Custom:
        return (*custom_)(t);
    }
    return 0.0;
}

double RadialIntensity::measure(double t) const
{
    if (!(t >= 0.0)) {
        throw DomainError("cumulative measure needs t >= 0");
    }
    if (t <= lower_) {
        return 0.0;
    }
    switch (kind_) {
    case IntensityKind::StationaryDisk:
        return std::numbers::pi * (t * t - lower_ * lower_);
    case IntensityKind::LogRadial:
        return kTwoPi * std::log(t / lower_);
    case IntensityKind::Custom:
        return quadrature::integrate([this](double s) { return (*custom_)(s); }, lower_, t)
            .value;
    }
    return 0.0;
}

double RadialIntensity::inverse_measure(double u, double a, double b) const
{
    a = std::max(a, lower_);
    if (b <= a) {
        return a;
    }
    switch (kind_) {
    case IntensityKind::StationaryDisk:
        return std::sqrt(a * a + u * (b * b - a * a));
    case IntensityKind::LogRadial:
        return a * std::pow(b / a, u);
    case IntensityKind::Custom: {
        const double base = measure(a);
        const double target = base + u * (measure(b) - base);
        return quadrature::bisect([&](double s) { return measure(s) - target; }, a, b,
                                  1e-10 * std::max(1.0, b));
    }
    }
    return a;
}

double RadialIntensity::normalisation() const noexcept
{
    return kind_ == IntensityKind::Custom ? 1.0 : kTwoPi;
}

std::string RadialIntensity::name() const
{
    std::ostringstream os;
    switch (kind_) {
    case IntensityKind::StationaryDisk:
        os << "stationary(t_min=" << lower_ << ")";
        break;
    case IntensityKind::LogRadial:
        os << "lograd(r=" << lower_ << ")";
        break;
    case IntensityKind::Custom:
        os << "custom(lower=" << lower_ << ")";
        break;
    }
    return os.str();
}

double cumulative_measure(const RadialIntensity& intensity, double lambda, double t)
{
    return lambda * intensity.measure(t);
}

std::vector<double> sample_radii(const RadialIntensity& intensity, double lambda,
                                 double window_max, RandomStream& rng)
{
    std::vector<double> radii;
    const double lo = intensity.lower_edge();
    if (!(window_max > lo)) {
        return radii;
    }
    const double mean = cumulative_measure(intensity, lambda, window_max);
    std::poisson_distribution<long long> count_dist(mean);
    const long long count = mean > 0.0 ? count_dist(rng) : 0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    radii.reserve(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i) {
        radii.push_back(intensity.inverse_measure(unit(rng), lo, window_max));
    }
    return radii;
}

double pathloss_moment_integral(const PathLoss& pathloss, const RadialIntensity& intensity,
                                int k, double from, double rel_tol)
{
    const double start = std::max(from, intensity.lower_edge());
    auto integrand = [&](double t) {
        const double g = pathloss.eval_unchecked(t);
        return std::pow(g, k) * intensity.density(t);
    };
    return quadrature::integrate_to_infinity(integrand, start, rel_tol).value;
}

NetworkModel::NetworkModel(Unchecked, double lambda, double power, PathLoss pathloss,
                           Fading fading, RadialIntensity intensity)
    : lambda_(lambda), power_(power), pathloss_(std::move(pathloss)), fading_(std::move(fading)),
      intensity_(std::move(intensity))
{
}

NetworkModel::NetworkModel(double lambda, double power, PathLoss pathloss, Fading fading,
                           RadialIntensity intensity)
    : NetworkModel(Unchecked{}, lambda, power, std::move(pathloss), std::move(fading),
                   std::move(intensity))
{
    detail::require(std::isfinite(lambda_) && lambda_ > 0.0, "lambda must be > 0");
    detail::require(std::isfinite(power_) && power_ > 0.0, "transmit power must be > 0");

    if (intensity_.kind() == IntensityKind::Custom) {
        // p(t) t^-(alpha - 1 - eps) must stay bounded; on the probe grid that
        // means it must not keep growing over the last decade.
        const double exponent = pathloss_.alpha() - 1.0 - intensity_.growth_epsilon();
        const double lo = std::max(intensity_.lower_edge(), 1e-3);
        const double span = std::log10(1e6 / lo);
        double last_decade_start = -1.0;
        double last_decade_max = 0.0;
        for (int i = 0; i < kGrowthProbePoints; ++i) {
            const double t = lo * std::pow(10.0, span * i / double(kGrowthProbePoints - 1));
            const double p = intensity_.density(t);
            detail::require(std::isfinite(p) && p >= 0.0,
                            "custom intensity is negative or non-finite on its support");
            const double scaled = p * std::pow(t, -exponent);
            if (t >= 1e5) {
                if (last_decade_start < 0.0) {
                    last_decade_start = scaled;
                }
                last_decade_max = std::max(last_decade_max, scaled);
            }
        }
        if (last_decade_start >= 0.0 && last_decade_max > 1.01 * last_decade_start + 1e-300) {
            std::ostringstream os;
            os << "custom intensity grows faster than t^(alpha - 1 - eps) with alpha = "
               << pathloss_.alpha() << ", eps = " << intensity_.growth_epsilon();
            throw ValidationError(os.str());
        }
    }

    for (int k = 1; k <= 3; ++k) {
        const double value = pathloss_moment_integral(pathloss_, intensity_, k);
        if (!(value > 0.0) || !std::isfinite(value)) {
            std::ostringstream os;
            os << "Campbell integral of G^" << k << " p is not finite and positive";
            throw ValidationError(os.str());
        }
    }
}

NetworkModel NetworkModel::with_lambda(double lambda) const
{
    detail::require(std::isfinite(lambda) && lambda > 0.0, "lambda must be > 0");
    return NetworkModel(Unchecked{}, lambda, power_, pathloss_, fading_, intensity_);
}

NetworkModel NetworkModel::with_power(double power) const
{
    detail::require(std::isfinite(power) && power > 0.0, "transmit power must be > 0");
    return NetworkModel(Unchecked{}, lambda_, power, pathloss_, fading_, intensity_);
}

NetworkModel NetworkModel::with_fading(Fading fading) const
{
    return NetworkModel(Unchecked{}, lambda_, power_, pathloss_, std::move(fading), intensity_);
}

double truncation_radius(const NetworkModel& model, double tail_tolerance, TailMoment criterion)
{
    if (!(tail_tolerance > 0.0 && tail_tolerance < 1.0)) {
        throw DomainError("tail tolerance must lie in (0, 1)");
    }
    const int k = criterion == TailMoment::Mean ? 1 : 2;
    const auto& g = model.pathloss();
    const auto& p = model.intensity();
    const double full = pathloss_moment_integral(g, p, k);
    const double target = tail_tolerance * full;
    auto tail = [&](double r) { return pathloss_moment_integral(g, p, k, r, 1e-10); };

    double lo = p.lower_edge();
    double hi = std::max(2.0 * lo, 1.0);
    while (tail(hi) > target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e15) {
            throw ValidationError("interference tail does not vanish; growth condition violated");
        }
    }
    while (hi - lo > 1e-6 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (tail(mid) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

} // namespace pppkit
