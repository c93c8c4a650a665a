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

#include <functional>

namespace pppkit::quadrature {

struct Result {
    double value = 0.0;
    double error = 0.0;
};

/// Adaptive Gauss-Kronrod (15-point) on a finite interval [a, b].
/// Throws ValidationError if the result is not finite.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-9, unsigned max_depth = 25);

/// Adaptive GK15 on [a, b] with an absolute error floor: a piece is accepted
/// once its error estimate is below max(abs_tol share, rel_tol |piece|).
/// Suited to integrands whose size is known a priori, e.g. probabilities.
Result integrate_absolute(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol = 1e-10, unsigned max_depth = 30);

/// Integral over [a, inf). For a < 1 the range is split at a + 1, otherwise
/// at a; the tail beyond the split s is mapped onto (0, 1/s] through u = 1/t. Throws ValidationError when
/// the error estimate indicates a non-convergent (or non-finite) integral.
Result integrate_to_infinity(const std::function<double(double)>& f, double a,
                             double rel_tol = 1e-9);

/// Root of a continuous function bracketed by [lo, hi] (f(lo), f(hi) of
/// opposite signs). Bisection, terminated on |hi - lo| <= abs_tol.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double abs_tol = 1e-12, int max_iter = 200);

} // namespace pppkit::quadrature
