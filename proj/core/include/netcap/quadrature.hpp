// Copyright 2026 netcap authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETCAP_QUADRATURE_HPP_
#define NETCAP_QUADRATURE_HPP_

#include <functional>

namespace netcap {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  unsigned max_depth = 30;
};

struct QuadratureResult {
  double value;
  double error;  // estimated absolute error
};

// Adaptive Gauss-Kronrod on a finite interval.
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const QuadratureSpec& spec = {});

// Integral of f over (0, inf) through u = r^2 / (1 + r^2). Suited to
// integrands that vanish like r near 0 and decay at least like r^-3 with
// possible log factors (ratio densities); the substitution stretches the
// far tail so adaptive refinement near u -> 1 resolves it.
QuadratureResult integrate_semi_infinite_sq(
    const std::function<double(double)>& f, const QuadratureSpec& spec = {});

// Integral of f over (0, inf) through t = u / (1 - u); generic rational
// compactification.
QuadratureResult integrate_semi_infinite(
    const std::function<double(double)>& f, const QuadratureSpec& spec = {});

// As above but throws QuadratureError when the achieved error estimate
// exceeds the tolerance.
double integrate_semi_infinite_sq_checked(
    const std::function<double(double)>& f, const QuadratureSpec& spec = {},
    const char* label = "semi-infinite (sq map)");
double integrate_semi_infinite_checked(
    const std::function<double(double)>& f, const QuadratureSpec& spec = {},
    const char* label = "semi-infinite");

}  // namespace netcap

#endif  // NETCAP_QUADRATURE_HPP_
