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

#include "pppkit/gaussian_bounds.hpp"

#include "pppkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pppkit {

double normal_cdf(double x)
{
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double berry_esseen_factor(double x)
{
    const double ax = std::abs(x);
    return std::min(kUniformBerryEsseen, kNonUniformBerryEsseen / (1.0 + ax * ax * ax));
}

double ApproxConstants::stddev() const
{
    return std::sqrt(variance);
}

ApproxConstants campbell_moments(const NetworkModel& model)
{
    ApproxConstants c;
    const auto& g = model.pathloss();
    const auto& p = model.intensity();
    c.i1 = pathloss_moment_integral(g, p, 1);
    c.i2 = pathloss_moment_integral(g, p, 2);
    c.i3 = pathloss_moment_integral(g, p, 3);
    c.path_constant = c.i3 / std::pow(c.i2, 1.5);
    c.fading_ratio = model.fading().ratio();
    c.lambda = model.lambda();
    c.mean = model.lambda() * model.power() * model.fading().moment(1) * c.i1;
    c.variance =
        model.lambda() * model.power() * model.power() * model.fading().moment(2) * c.i2;
    return c;
}

double pathloss_constant(const PathLoss& pathloss, const RadialIntensity& intensity)
{
    // With p = k p' the ratio scales by k^{-1/2}; undo it.
    const double i2 = pathloss_moment_integral(pathloss, intensity, 2);
    const double i3 = pathloss_moment_integral(pathloss, intensity, 3);
    return i3 / std::pow(i2, 1.5) * std::sqrt(intensity.normalisation());
}

double pathloss_constant_grid(const PathLoss& pathloss, const RadialIntensity& intensity,
                              double step)
{
    if (!(step > 0.0)) {
        throw DomainError("grid step must be > 0");
    }
    const double start = intensity.lower_edge();
    double s2 = 0.0;
    double s3 = 0.0;
    for (long long j = 0;; ++j) {
        const double t = start + static_cast<double>(j) * step;
        const double g = pathloss.eval_unchecked(t);
        const double w = intensity.density(t) / intensity.normalisation();
        const double a2 = g * g * w;
        const double a3 = a2 * g;
        s2 += a2;
        s3 += a3;
        if ((t > 10.0 && a2 < 1e-17 * s2) || j > 100'000'000) {
            break;
        }
    }
    return (s3 * step) / std::pow(s2 * step, 1.5);
}

double c_of_x(const ApproxConstants& constants, double x)
{
    return constants.shape() * berry_esseen_factor(x);
}

double c_of_x(const NetworkModel& model, double x)
{
    return c_of_x(campbell_moments(model), x);
}

CdfEnvelope::CdfEnvelope(double shape, double lambda)
    : shape_(shape), inv_sqrt_lambda_(lambda > 0.0 ? 1.0 / std::sqrt(lambda) : 0.0)
{
}

CdfEnvelope::CdfEnvelope(const ApproxConstants& constants)
    : CdfEnvelope(constants.shape(), constants.lambda)
{
    if (!(constants.lambda > 0.0)) {
        throw DomainError("envelope needs lambda > 0");
    }
}

CdfEnvelope CdfEnvelope::gaussian_only()
{
    return CdfEnvelope(0.0, 1.0);
}

double CdfEnvelope::half_width(double x) const
{
    return shape_ * berry_esseen_factor(x) * inv_sqrt_lambda_;
}

double CdfEnvelope::upper_raw(double x) const
{
    return normal_cdf(x) + half_width(x);
}

double CdfEnvelope::lower_raw(double x) const
{
    return normal_cdf(x) - half_width(x);
}

double CdfEnvelope::upper(double x) const
{
    return std::min(1.0, upper_raw(x));
}

double CdfEnvelope::lower(double x) const
{
    return std::max(0.0, lower_raw(x));
}

std::vector<double> CdfEnvelope::breakpoints(double lo, double hi) const
{
    std::vector<double> out;
    const double sw = std::cbrt(kNonUniformBerryEsseen / kUniformBerryEsseen - 1.0);
    for (double x : {-sw, sw}) {
        if (x > lo && x < hi) {
            out.push_back(x);
        }
    }
    // Clipping onsets are sign changes of upper_raw - 1 and lower_raw.
    const auto scan = [&](auto&& f) {
        constexpr double step = 0.01;
        double a = lo;
        bool sa = f(a) > 0.0;
        while (a < hi) {
            const double b = std::min(hi, a + step);
            const bool sb = f(b) > 0.0;
            if (sb != sa) {
                double l = a;
                double r = b;
                for (int i = 0; i < 60 && r - l > 1e-13; ++i) {
                    const double m = 0.5 * (l + r);
                    ((f(m) > 0.0) == sa ? l : r) = m;
                }
                out.push_back(0.5 * (l + r));
            }
            a = b;
            sa = sb;
        }
    };
    scan([this](double x) { return upper_raw(x) - 1.0; });
    scan([this](double x) { return lower_raw(x); });
    std::sort(out.begin(), out.end());
    return out;
}

BoundCurve cdf_bounds(const CdfEnvelope& envelope, std::span<const double> xs)
{
    BoundCurve curve;
    curve.xs.assign(xs.begin(), xs.end());
    curve.lower.reserve(xs.size());
    curve.gaussian.reserve(xs.size());
    curve.upper.reserve(xs.size());
    for (double x : xs) {
        curve.lower.push_back(envelope.lower(x));
        curve.gaussian.push_back(normal_cdf(x));
        curve.upper.push_back(envelope.upper(x));
    }
    return curve;
}

BoundCurve cdf_bounds(const NetworkModel& model, std::span<const double> xs)
{
    return cdf_bounds(CdfEnvelope(campbell_moments(model)), xs);
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points)
{
    if (points < 2 || !(hi > lo)) {
        throw DomainError("grid needs at least two points and hi > lo");
    }
    std::vector<double> xs(points);
    for (std::size_t i = 0; i < points; ++i) {
        xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return xs;
}

} // namespace pppkit
