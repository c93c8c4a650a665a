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

#include "pppkit/random.hpp"

#include <functional>
#include <memory>
#include <random>
#include <string>

namespace pppkit {

enum class PathLossKind {
    InverseShifted, ///< G(t) = 1 / (1 + t)^alpha
    InverseSum,     ///< G(t) = 1 / (1 + t^alpha)
    Custom
};

/**
 * Bounded, non-increasing attenuation G: [0, inf) -> [0, G(0)] decaying at
 * least as fast as t^-alpha with alpha > 2.
 *
 * Immutable once built; copies share the custom callable.
 */
class PathLoss {
public:
    static PathLoss inverse_shifted(double alpha);
    static PathLoss inverse_sum(double alpha);

    /// Wraps an opaque attenuation function. `supremum` is the declared bound
    /// on G; the function is probed at 1000 points for sign, bound and
    /// monotonicity before it is accepted.
    static PathLoss custom(std::function<double(double)> g, double alpha, double supremum);

    /// G(t); throws DomainError for negative or NaN t.
    double operator()(double t) const;

    /// G(t) without argument checks, for inner loops over validated radii.
    double eval_unchecked(double t) const noexcept;

    PathLossKind kind() const noexcept { return kind_; }
    double alpha() const noexcept { return alpha_; }
    double supremum() const noexcept { return supremum_; }

    /// "g1", "g2" or "custom".
    std::string name() const;

private:
    PathLoss(PathLossKind kind, double alpha,
             std::shared_ptr<const std::function<double(double)>> custom, double supremum);

    double power(double t) const noexcept;

    PathLossKind kind_;
    double alpha_;
    int integer_alpha_ = 0; // alpha when it is a small integer, else 0
    std::shared_ptr<const std::function<double(double)>> custom_;
    double supremum_;
};

inline double eval_pathloss(const PathLoss& model, double t) { return model(t); }

enum class FadingKind {
    Deterministic, ///< H = h0 almost surely
    NakagamiPower, ///< H ~ Gamma(shape m, scale 1/m): unit-mean power gain
    CustomMoments  ///< only (E[H], E[H^2], E[H^3]) are known
};

/// Distribution of the per-transmitter power fading coefficient H.
class Fading {
public:
    static Fading deterministic(double h0 = 1.0);
    static Fading nakagami(double m);
    static Fading from_moments(double m1, double m2, double m3);

    FadingKind kind() const noexcept { return kind_; }
    double h0() const noexcept { return h0_; }
    double shape() const noexcept { return m_; }

    /// E[H^k] for k in {1, 2, 3}.
    double moment(int k) const;

    /// E[H^3] / E[H^2]^{3/2}; at least 1 by Jensen, equal to 1 only for
    /// deterministic fading.
    double ratio() const;

    bool has_sampler() const noexcept { return kind_ != FadingKind::CustomMoments; }

    /// One draw. Throws UnsupportedError for moments-only models.
    double sample(RandomStream& rng) const;

    /// Density q(h); Nakagami only (deterministic fading is a point mass).
    double density(double h) const;

    /// Smallest h with P(H > h) <= tail_mass.
    double upper_quantile(double tail_mass) const;

    std::string name() const;

private:
    Fading(FadingKind kind, double h0, double m, double m1, double m2, double m3);

    FadingKind kind_;
    double h0_;
    double m_;
    double moments_[3];
    double log_norm_ = 0.0; ///< m log m - lgamma(m) for Nakagami
};

inline double fading_moment(const Fading& model, int k) { return model.moment(k); }
inline double fading_ratio(const Fading& model) { return model.ratio(); }

/// Reusable draw engine for inner loops; keeps the distribution object alive
/// across calls instead of rebuilding it per draw.
class FadingSampler {
public:
    explicit FadingSampler(const Fading& model);

    double operator()(RandomStream& rng)
    {
        return deterministic_ ? h0_ : gamma_(rng);
    }

private:
    bool deterministic_;
    double h0_;
    std::gamma_distribution<double> gamma_;
};

inline double sample_fading(const Fading& model, RandomStream& rng) { return model.sample(rng); }

} // namespace pppkit
