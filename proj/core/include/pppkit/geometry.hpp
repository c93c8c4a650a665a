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

#include "pppkit/channel.hpp"
#include "pppkit/random.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace pppkit {

enum class IntensityKind {
    StationaryDisk, ///< p(t) = 2 pi t on t >= t_min
    LogRadial,      ///< p(t) = 2 pi / t on t >= r
    Custom
};

/**
 * Density p(t) (per unit lambda) of the distances from the receiver to the
 * transmitters, i.e. the mean measure of the distance-mapped point process.
 */
class RadialIntensity {
public:
    /// Stationary planar PPP with an interferer-free disk of radius t_min
    /// around the receiver (t_min = 0 is the plain stationary PPP).
    static RadialIntensity stationary(double t_min = 0.0);

    static RadialIntensity log_radial(double r);

    /// Arbitrary density on [lower, inf). `growth_epsilon` is the slack used
    /// when checking p(t) = O(t^(alpha - 1 - eps)) against a path loss.
    static RadialIntensity custom(std::function<double(double)> density, double lower,
                                  double growth_epsilon = 0.1);

    IntensityKind kind() const noexcept { return kind_; }

    /// Lower edge of the support (t_min, r, or the declared custom edge).
    double lower_edge() const noexcept { return lower_; }

    double growth_epsilon() const noexcept { return growth_epsilon_; }

    /// p(t); zero below the support.
    double density(double t) const;

    /// Integral of p over [0, t] (closed form for the built-ins).
    double measure(double t) const;

    /// Inverse of the normalised measure on [a, b]: the point s in [a, b] with
    /// measure(s) - measure(a) = u * (measure(b) - measure(a)).
    double inverse_measure(double u, double a, double b) const;

    /// Factor by which this density exceeds the geometry-normalised one used
    /// for path-loss constants: 2 pi for the built-ins, 1 for custom.
    double normalisation() const noexcept;

    std::string name() const;

private:
    RadialIntensity(IntensityKind kind, double lower, double growth_epsilon,
                    std::shared_ptr<const std::function<double(double)>> custom);

    IntensityKind kind_;
    double lower_;
    double growth_epsilon_;
    std::shared_ptr<const std::function<double(double)>> custom_;
};

/// lambda * integral_0^t p(s) ds; zero below the support.
double cumulative_measure(const RadialIntensity& intensity, double lambda, double t);

/// Exact PPP draw of distances on [lower edge, window_max]: Poisson count with
/// mean cumulative_measure(window_max), radii by the inverse-CDF transform.
std::vector<double> sample_radii(const RadialIntensity& intensity, double lambda,
                                 double window_max, RandomStream& rng);

/// (lambda, P, G, H, p) bundle defining the interference I = sum P H_k G(T_k).
class NetworkModel {
public:
    /// Validates alpha/growth compatibility and checks that the Campbell
    /// integrals of G, G^2 and G^3 against p are finite.
    NetworkModel(double lambda, double power, PathLoss pathloss, Fading fading,
                 RadialIntensity intensity);

    double lambda() const noexcept { return lambda_; }
    double power() const noexcept { return power_; }
    const PathLoss& pathloss() const noexcept { return pathloss_; }
    const Fading& fading() const noexcept { return fading_; }
    const RadialIntensity& intensity() const noexcept { return intensity_; }

    NetworkModel with_lambda(double lambda) const;
    NetworkModel with_power(double power) const;
    NetworkModel with_fading(Fading fading) const;

private:
    struct Unchecked {};
    NetworkModel(Unchecked, double lambda, double power, PathLoss pathloss, Fading fading,
                 RadialIntensity intensity);

    double lambda_;
    double power_;
    PathLoss pathloss_;
    Fading fading_;
    RadialIntensity intensity_;
};

/// Integral of G(t)^k p(t) over [from, inf) (per unit lambda, P and fading).
double pathloss_moment_integral(const PathLoss& pathloss, const RadialIntensity& intensity,
                                int k, double from = 0.0, double rel_tol = 1e-9);

enum class TailMoment {
    Mean,    ///< lambda P m_H int_R^inf G p relative to the full mean
    Variance ///< lambda P^2 m_H2 int_R^inf G^2 p relative to the full variance
};

/// Radius R whose discarded tail moment is below `tail_tolerance` times the
/// full moment. Doubling search followed by bisection on the quadrature tail.
double truncation_radius(const NetworkModel& model, double tail_tolerance,
                         TailMoment criterion = TailMoment::Mean);

} // namespace pppkit
