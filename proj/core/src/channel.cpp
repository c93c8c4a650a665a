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

#include "pppkit/channel.hpp"

#include "pppkit/error.hpp"

#include <boost/math/distributions/gamma.hpp>

#include <cmath>
#include <sstream>

namespace pppkit {

namespace {

constexpr int kProbePoints = 1000;

void check_alpha(double alpha)
{
    if (!(alpha > 2.0) || !std::isfinite(alpha)) {
        std::ostringstream os;
        os << "path-loss exponent must satisfy alpha > 2 (got " << alpha << ")";
        throw ValidationError(os.str());
    }
}

int small_integer(double alpha)
{
    if (alpha == std::floor(alpha) && alpha >= 1.0 && alpha <= 16.0) {
        return static_cast<int>(alpha);
    }
    return 0;
}

} // namespace

PathLoss::PathLoss(PathLossKind kind, double alpha,
                   std::shared_ptr<const std::function<double(double)>> custom, double supremum)
    : kind_(kind), alpha_(alpha), integer_alpha_(small_integer(alpha)),
      custom_(std::move(custom)), supremum_(supremum)
{
}

PathLoss PathLoss::inverse_shifted(double alpha)
{
    check_alpha(alpha);
    return PathLoss(PathLossKind::InverseShifted, alpha, nullptr, 1.0);
}

PathLoss PathLoss::inverse_sum(double alpha)
{
    check_alpha(alpha);
    return PathLoss(PathLossKind::InverseSum, alpha, nullptr, 1.0);
}

PathLoss PathLoss::custom(std::function<double(double)> g, double alpha, double supremum)
{
    check_alpha(alpha);
    detail::require(static_cast<bool>(g), "custom path loss needs a callable");
    detail::require(std::isfinite(supremum) && supremum > 0.0,
                    "custom path loss needs a finite positive supremum bound");

    // Probe t = 0 and 999 log-spaced points on [1e-3, 1e6].
    double previous = g(0.0);
    double t_prev = 0.0;
    for (int i = 0; i < kProbePoints; ++i) {
        const double t = i == 0 ? 0.0
                                : std::pow(10.0, -3.0 + 9.0 * (i - 1) / double(kProbePoints - 2));
        const double value = g(t);
        if (!std::isfinite(value) || value < 0.0) {
            std::ostringstream os;
            os << "custom path loss is negative or non-finite at t = " << t;
            throw ValidationError(os.str());
        }
        if (value > supremum * (1.0 + 1e-12)) {
            std::ostringstream os;
            os << "custom path loss exceeds its declared bound at t = " << t;
            throw ValidationError(os.str());
        }
        if (value > previous * (1.0 + 1e-12)) {
            std::ostringstream os;
            os << "custom path loss increases between t = " << t_prev << " and t = " << t;
            throw ValidationError(os.str());
        }
        previous = value;
        t_prev = t;
    }
    return PathLoss(PathLossKind::Custom, alpha,
                    std::make_shared<const std::function<double(double)>>(std::move(g)),
                    supremum);
}

double PathLoss::power(double t) const noexcept
{
    if (integer_alpha_ != 0) {
        double r = t;
        for (int i = 1; i < integer_alpha_; ++i) {
            r *= t;
        }
        return r;
    }
    return std::pow(t, alpha_);
}

double PathLoss::eval_unchecked(double t) const noexcept
{
    switch (kind_) {
    case PathLossKind::InverseShifted:
        return 1.0 / power(1.0 + t);
    case PathLossKind::InverseSum:
        return 1.0 / (1.0 + power(t));
    case PathLossKind::Custom:
        return (*custom_)(t);
    }
    return 0.0;
}

double PathLoss::operator()(double t) const
{
    if (!(t >= 0.0)) {
        std::ostringstream os;
        os << "path loss evaluated at negative distance " << t;
        throw DomainError(os.str());
    }
    return eval_unchecked(t);
}

std::string PathLoss::name() const
{
    switch (kind_) {
    case PathLossKind::InverseShifted:
        return "g1";
    case PathLossKind::InverseSum:
        return "g2";
    case PathLossKind::Custom:
        return "custom";
    }
    return "?";
}

Fading::Fading(FadingKind kind, double h0, double m, double m1, double m2, double m3)
    : kind_(kind), h0_(h0), m_(m), moments_{m1, m2, m3}
{
}

Fading Fading::deterministic(double h0)
{
    detail::require(std::isfinite(h0) && h0 > 0.0, "deterministic fading needs h0 > 0");
    return Fading(FadingKind::Deterministic, h0, 0.0, h0, h0 * h0, h0 * h0 * h0);
}

Fading Fading::nakagami(double m)
{
    detail::require(std::isfinite(m) && m >= 0.5, "Nakagami shape must satisfy m >= 0.5");
    // E[H^k] = Gamma(m + k) / (Gamma(m) m^k) for the unit-mean Gamma(m, 1/m).
    const double m2 = (m + 1.0) / m;
    const double m3 = (m + 1.0) * (m + 2.0) / (m * m);
    Fading f(FadingKind::NakagamiPower, 0.0, m, 1.0, m2, m3);
    f.log_norm_ = m * std::log(m) - std::lgamma(m);
    return f;
}

Fading Fading::from_moments(double m1, double m2, double m3)
{
    detail::require(std::isfinite(m1) && std::isfinite(m2) && std::isfinite(m3),
                    "fading moments must be finite");
    detail::require(m1 > 0.0 && m2 > 0.0 && m3 > 0.0, "fading moments must be positive");
    detail::require(m2 >= m1 * m1 * (1.0 - 1e-12), "fading moments violate E[H^2] >= E[H]^2");
    detail::require(m3 >= std::pow(m2, 1.5) * (1.0 - 1e-12),
                    "fading moments violate E[H^3] >= E[H^2]^(3/2)");
    return Fading(FadingKind::CustomMoments, 0.0, 0.0, m1, m2, m3);
}

double Fading::moment(int k) const
{
    if (k < 1 || k > 3) {
        std::ostringstream os;
        os << "fading moment order must be 1, 2 or 3 (got " << k << ")";
        throw DomainError(os.str());
    }
    return moments_[k - 1];
}

double Fading::ratio() const
{
    if (kind_ == FadingKind::Deterministic) {
        return 1.0;
    }
    return moments_[2] / std::pow(moments_[1], 1.5);
}

double Fading::sample(RandomStream& rng) const
{
    FadingSampler sampler(*this);
    return sampler(rng);
}

double Fading::density(double h) const
{
    if (kind_ != FadingKind::NakagamiPower) {
        throw UnsupportedError("fading density is only available for Nakagami fading");
    }
    if (h <= 0.0) {
        return 0.0;
    }
    return std::exp(log_norm_ + (m_ - 1.0) * std::log(h) - m_ * h);
}

double Fading::upper_quantile(double tail_mass) const
{
    if (!(tail_mass > 0.0 && tail_mass < 1.0)) {
        throw DomainError("tail mass must lie in (0, 1)");
    }
    switch (kind_) {
    case FadingKind::Deterministic:
        return h0_;
    case FadingKind::NakagamiPower:
        return boost::math::quantile(boost::math::complement(
            boost::math::gamma_distribution<double>(m_, 1.0 / m_), tail_mass));
    case FadingKind::CustomMoments:
        break;
    }
    throw UnsupportedError("moments-only fading has no quantile function");
}

std::string Fading::name() const
{
    std::ostringstream os;
    switch (kind_) {
    case FadingKind::Deterministic:
        os << "deterministic(h0=" << h0_ << ")";
        break;
    case FadingKind::NakagamiPower:
        os << "nakagami(m=" << m_ << ")";
        break;
    case FadingKind::CustomMoments:
        os << "moments(" << moments_[0] << "," << moments_[1] << "," << moments_[2] << ")";
        break;
    }
    return os.str();
}

FadingSampler::FadingSampler(const Fading& model)
    : deterministic_(model.kind() == FadingKind::Deterministic), h0_(model.h0()),
      gamma_(model.kind() == FadingKind::NakagamiPower ? model.shape() : 1.0,
             model.kind() == FadingKind::NakagamiPower ? 1.0 / model.shape() : 1.0)
{
    if (!model.has_sampler()) {
        throw UnsupportedError("moments-only fading cannot be sampled");
    }
}

} // namespace pppkit
