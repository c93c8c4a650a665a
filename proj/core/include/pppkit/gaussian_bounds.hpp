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

#include "pppkit/geometry.hpp"

#include <span>
#include <vector>

namespace pppkit {

/// Uniform Berry-Esseen constant (i.i.d. summands, third absolute moment).
inline constexpr double kUniformBerryEsseen = 0.4785;
/// Non-uniform Berry-Esseen constant, paired with 1 / (1 + |x|^3).
inline constexpr double kNonUniformBerryEsseen = 31.935;

/// Standard normal CDF via erfc; absolute error well below 1e-12.
double normal_cdf(double x);

/// min(0.4785, 31.935 / (1 + |x|^3)).
double berry_esseen_factor(double x);

/// Campbell moments of the interference and the shape constants that scale
/// the normal-approximation error.
struct ApproxConstants {
    double i1 = 0.0; ///< int G p   (p per unit lambda, geometry factors included)
    double i2 = 0.0; ///< int G^2 p
    double i3 = 0.0; ///< int G^3 p
    double path_constant = 0.0; ///< i3 / i2^{3/2}
    double fading_ratio = 0.0;  ///< m_H3 / m_H2^{3/2}
    double mean = 0.0;          ///< lambda P m_H i1
    double variance = 0.0;      ///< lambda P^2 m_H2 i2
    double lambda = 0.0;

    double stddev() const;

    /// c(x) / berry_esseen_factor(x): the x-independent part of c(x).
    double shape() const { return fading_ratio * path_constant; }
};

ApproxConstants campbell_moments(const NetworkModel& model);

/// int G^3 p' / (int G^2 p')^{3/2} with p' the geometry-normalised density
/// (t on [t_min, inf) for the stationary disk, 1/t on [r, inf) for the
/// log-radial model). For custom densities p' = p.
double pathloss_constant(const PathLoss& pathloss, const RadialIntensity& intensity);

/// Same ratio with both integrals replaced by left Riemann sums of step
/// `step` starting at the support edge. Printed tables that were produced
/// by coarse grid sums can be compared against this.
double pathloss_constant_grid(const PathLoss& pathloss, const RadialIntensity& intensity,
                              double step);

/// c(x) = fading_ratio * i3 / i2^{3/2} * min(0.4785, 31.935 / (1 + |x|^3)).
double c_of_x(const ApproxConstants& constants, double x);
double c_of_x(const NetworkModel& model, double x);

/// Normal approximation band Q-(x) <= F(x) <= Q+(x) for the centred and
/// normalised interference, Q+-(x) = Psi(x) +- c(x)/sqrt(lambda).
class CdfEnvelope {
public:
    explicit CdfEnvelope(const ApproxConstants& constants);

    /// Band of zero width: Q+ = Q- = Psi.
    static CdfEnvelope gaussian_only();

    /// c(x) / sqrt(lambda), before clipping.
    double half_width(double x) const;

    double upper_raw(double x) const;
    double lower_raw(double x) const;

    /// min(1, Q+(x)) and max(0, Q-(x)).
    double upper(double x) const;
    double lower(double x) const;

    /// Sorted points of [lo, hi] where upper() or lower() is not smooth: the
    /// Berry-Esseen branch switch and the onsets of clipping.
    std::vector<double> breakpoints(double lo = -60.0, double hi = 60.0) const;

private:
    CdfEnvelope(double shape, double lambda);

    double shape_;
    double inv_sqrt_lambda_;
};

struct BoundCurve {
    std::vector<double> xs;
    std::vector<double> lower;
    std::vector<double> gaussian;
    std::vector<double> upper;
};

/// Clipped envelope evaluated on `xs`.
BoundCurve cdf_bounds(const NetworkModel& model, std::span<const double> xs);
BoundCurve cdf_bounds(const CdfEnvelope& envelope, std::span<const double> xs);

/// `points` equally spaced values on [lo, hi] (defaults: 481 on [-6, 6]).
std::vector<double> linear_grid(double lo = -6.0, double hi = 6.0, std::size_t points = 481);

} // namespace pppkit
