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

// Independent reference computations for tests. Nothing here calls into
// the library's numerics; only plain loops over std:: math.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

/// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, std::size_t n)
{
    if (n % 2) {
        ++n;
    }
    const double h = (b - a) / double(n);
    double s = f(a) + f(b);
    for (std::size_t i = 1; i < n; ++i) {
        s += f(a + h * double(i)) * (i % 2 ? 4.0 : 2.0);
    }
    return s * h / 3.0;
}

/// Simpson over [a, inf): [a, a + split] directly, the rest through
/// t = 1/s on (0, 1/(a + split)]. The s = 0 endpoint is evaluated at a tiny
/// positive s, where the mapped integrand has reached its limit.
inline double simpson_half_line(const std::function<double(double)>& f, double a, std::size_t n,
                                double split = 20.0)
{
    const double c = a + split;
    const double head = simpson(f, a, c, n);
    auto mapped = [&](double s) {
        s = std::max(s, 1e-9 / c);
        const double t = 1.0 / s;
        return f(t) * t * t;
    };
    return head + simpson(mapped, 0.0, 1.0 / c, n);
}

/// Standard normal CDF from the Taylor series of erf, in long double.
/// Accurate to ~1e-15 for |x| <= 6.
inline double normal_cdf_series(double x)
{
    const long double z = static_cast<long double>(x) / std::numbers::sqrt2_v<long double>;
    long double term = z;
    long double sum = z;
    for (int n = 1; n < 400; ++n) {
        term *= -z * z / n;
        const long double add = term / (2 * n + 1);
        sum += add;
        if (std::fabs(add) < 1e-22L * std::fabs(sum)) {
            break;
        }
    }
    const long double erf = 2.0L / std::sqrt(std::numbers::pi_v<long double>) * sum;
    return static_cast<double>(0.5L * (1.0L + erf));
}

/// Radius draw with density proportional to p on [lo, hi] by rejection from
/// the uniform proposal; p_max must bound p on the interval.
inline double rejection_radius(const std::function<double(double)>& p, double lo, double hi,
                               double p_max, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
        const double t = lo + (hi - lo) * u(rng);
        if (u(rng) * p_max <= p(t)) {
            return t;
        }
    }
}

/// Two-sample KS statistic by brute-force merge.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double worst = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= v) {
            ++i;
        }
        while (j < b.size() && b[j] <= v) {
            ++j;
        }
        worst = std::max(worst, std::abs(double(i) / double(a.size()) - double(j) / double(b.size())));
    }
    return worst;
}

/// Critical value of the two-sample KS statistic at level 1%.
inline double ks_two_sample_critical_1pct(std::size_t n, std::size_t m)
{
    return 1.628 * std::sqrt(double(n + m) / (double(n) * double(m)));
}

/// Critical value of the one-sample KS statistic at level 1% (asymptotic).
inline double ks_critical_1pct(std::size_t n)
{
    return 1.628 / std::sqrt(double(n));
}

/// E[e^{-a H}] for Nakagami power fading with shape m (Gamma(m, 1/m)).
inline double nakagami_laplace(double a, double m)
{
    return std::pow(1.0 + a / m, -m);
}

/// E[log(1 + I)] for I = sum_k A H_k G(T_k) over a PPP with radial density
/// lambda p(t) on [edge, inf), via log(1 + x) = int_0^inf (1 - e^{-s x}) e^{-s} / s ds
/// and the Laplace functional exp(-lambda int (1 - E e^{-s A H G(t)}) p(t) dt).
inline double ergodic_log1p(const std::function<double(double)>& G,
                            const std::function<double(double)>& p, double edge, double lambda,
                            double amplitude, const std::function<double(double)>& fading_laplace,
                            std::size_t n_inner = 4000, std::size_t n_outer = 4000)
{
    auto laplace = [&](double s) {
        auto inner = [&](double t) { return (1.0 - fading_laplace(s * amplitude * G(t))) * p(t); };
        return std::exp(-lambda * simpson_half_line(inner, edge, n_inner));
    };
    // s in (0, 60]; map s = v^2 to resolve the small-s region.
    auto outer = [&](double v) {
        const double s = std::max(v * v, 1e-12);
        return (1.0 - laplace(s)) * std::exp(-s) / s * 2.0 * v;
    };
    return simpson(outer, 0.0, std::sqrt(60.0), n_outer);
}

/// Poisson pmf by recursion.
inline std::vector<double> poisson_pmf(double mean, std::size_t kmax)
{
    std::vector<double> pmf(kmax + 1);
    pmf[0] = std::exp(-mean);
    for (std::size_t k = 1; k <= kmax; ++k) {
        pmf[k] = pmf[k - 1] * mean / double(k);
    }
    return pmf;
}

} // namespace oracle
