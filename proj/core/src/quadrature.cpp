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

#include "netcap/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "netcap/errors.hpp"

namespace netcap {

namespace {

using GK15 = boost::math::quadrature::gauss_kronrod<double, 15>;

// The compactified integrands carry integrable log singularities at the
// endpoints (r -> 0 and the stretched far tail), which double-exponential
// nodes absorb; plain adaptive bisection stalls on them.
QuadratureResult run_unit_interval(const std::function<double(double)>& f,
                                   const QuadratureSpec& spec) {
  static thread_local boost::math::quadrature::tanh_sinh<double> integrator(15);
  double error = 0.0;
  double l1 = 0.0;
  const double target = std::min(spec.abs_tol, 1e-12);
  const double value = integrator.integrate(f, 0.0, 1.0, target, &error, &l1);
  return {value, error};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const QuadratureSpec& spec) {
  double error = 0.0;
  const double value =
      GK15::integrate(f, lo, hi, spec.max_depth, std::min(spec.abs_tol, 1e-10), &error);
  return {value, error};
}

QuadratureResult integrate_semi_infinite_sq(
    const std::function<double(double)>& f, const QuadratureSpec& spec) {
  // u = r^2/(1+r^2):  r = sqrt(u/(1-u)),  dr = du / (2 r (1-u)^2).
  const auto g = [&f](double u) {
    const double om = 1.0 - u;
    const double r = std::sqrt(u / om);
    if (!(r > 0.0) || !std::isfinite(r)) return 0.0;
    const double value = f(r) / (2.0 * r * om * om);
    return std::isfinite(value) ? value : 0.0;
  };
  return run_unit_interval(g, spec);
}

QuadratureResult integrate_semi_infinite(
    const std::function<double(double)>& f, const QuadratureSpec& spec) {
  // t = u/(1-u),  dt = du / (1-u)^2.
  const auto g = [&f](double u) {
    const double om = 1.0 - u;
    const double t = u / om;
    if (!std::isfinite(t)) return 0.0;
    const double value = f(t) / (om * om);
    return std::isfinite(value) ? value : 0.0;
  };
  return run_unit_interval(g, spec);
}

namespace {

double checked(const QuadratureResult& result, const QuadratureSpec& spec,
               const char* what) {
  if (!(result.error <= spec.abs_tol) || !std::isfinite(result.value)) {
    throw QuadratureError(std::string(what) + ": quadrature error estimate " +
                              std::to_string(result.error) +
                              " exceeds tolerance " + std::to_string(spec.abs_tol),
                          result.error);
  }
  return result.value;
}

}  // namespace

double integrate_semi_infinite_sq_checked(
    const std::function<double(double)>& f, const QuadratureSpec& spec,
    const char* label) {
  return checked(integrate_semi_infinite_sq(f, spec), spec, label);
}

double integrate_semi_infinite_checked(
    const std::function<double(double)>& f, const QuadratureSpec& spec,
    const char* label) {
  return checked(integrate_semi_infinite(f, spec), spec, label);
}

}  // namespace netcap
