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

#include "pppkit/quadrature.hpp"

#include "pppkit/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pppkit::quadrature {

Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, unsigned max_depth)
{
    if (!(b > a)) {
        return {};
    }
    double error = 0.0;
    double l1 = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, max_depth, rel_tol, &error, &l1);
    if (!std::isfinite(value) || !std::isfinite(error)) {
        std::ostringstream os;
        os << "quadrature produced a non-finite value on [" << a << ", " << b << "]";
        throw ValidationError(os.str());
    }
    return {value, error};
}

namespace {

void refine(const std::function<double(double)>& f, double a, double b, double abs_tol,
            double rel_tol, unsigned depth, Result& acc)
{
    double error = 0.0;
    const double value =
        boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &error);
    if (depth == 0 || error <= std::max(abs_tol, rel_tol * std::abs(value))) {
        acc.value += value;
        acc.error += error;
        return;
    }
    const double m = 0.5 * (a + b);
    if (!(m > a && m < b)) {
        acc.value += value;
        acc.error += error;
        return;
    }
    refine(f, a, m, 0.5 * abs_tol, rel_tol, depth - 1, acc);
    refine(f, m, b, 0.5 * abs_tol, rel_tol, depth - 1, acc);
}

} // namespace

Result integrate_absolute(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol, unsigned max_depth)
{
    Result acc;
    if (!(b > a)) {
        return acc;
    }
    refine(f, a, b, abs_tol, rel_tol, max_depth, acc);
    if (!std::isfinite(acc.value) || !std::isfinite(acc.error)) {
        std::ostringstream os;
        os << "quadrature produced a non-finite value on [" << a << ", " << b << "]";
        throw ValidationError(os.str());
    }
    return acc;
}

Result integrate_to_infinity(const std::function<double(double)>& f, double a,
                             double rel_tol)
{
    // The head is either empty or at least one unit wide; a sliver like
    // [1 - 1e-9, 1] has no attainable relative accuracy.
    const double split = a >= 1.0 ? a : a + 1.0;
    Result head = a >= 1.0 ? Result{0.0, 0.0} : integrate(f, a, split, rel_tol);

    auto mapped = [&f](double u) {
        const double t = 1.0 / u;
        return f(t) * t * t;
    };
    Result tail = integrate(mapped, 0.0, 1.0 / split, rel_tol);

    Result total{head.value + tail.value, head.error + tail.error};
    // A divergent tail shows up as an error estimate that never shrinks.
    const double scale = std::max(std::abs(total.value), 1e-300);
    if (total.error > 1e-4 * scale + 1e-300) {
        std::ostringstream os;
        os << "integral over [" << a << ", inf) did not converge (value " << total.value
           << ", error estimate " << total.error << ")";
        throw ValidationError(os.str());
    }
    return total;
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double abs_tol, int max_iter)
{
    double flo = f(lo);
    if (flo == 0.0) {
        return lo;
    }
    for (int i = 0; i < max_iter && (hi - lo) > abs_tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) {
            return mid;
        }
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace pppkit::quadrature
