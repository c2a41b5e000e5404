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

#include "netcap/capacity_bounds.hpp"

#include <cmath>
#include <numbers>

#include "netcap/errors.hpp"

namespace netcap {

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kKRaw: return "K";
    case BoundKind::kProposition: return "proposition";
    case BoundKind::kGeometric: return "geometric";
    case BoundKind::kExponentialProof: return "exponential-proof";
    case BoundKind::kExponentialStated: return "exponential-stated";
  }
  return "unknown";
}

CapacityBound bound_K(const EtaBounds& bounds, double eta_star2) {
  if (!(eta_star2 >= bounds.eta_min2 && eta_star2 <= bounds.eta_max2)) {
    throw ModelError("eta_star^2 must lie in [eta_min^2, eta_max^2]");
  }
  const double value = std::log(std::numbers::pi) - 1.0 - std::log(2.0) +
                       std::log(eta_star2) +
                       0.5 * std::log(bounds.eta_max2 / bounds.eta_min2) +
                       2.0 * bounds.eta_max2 / eta_star2;
  return {value, BoundKind::kKRaw};
}

CapacityBound bound_K_worst_case(const EtaBounds& bounds) {
  return bound_K(bounds, bounds.eta_min2);
}

CapacityBound proposition_bound(const EtaBounds& bounds) {
  const double ratio = bounds.eta_max2 / bounds.eta_min2;
  const double value = std::log(std::numbers::pi / 2.0) + 2.0 * (ratio - 0.5) +
                       std::log(bounds.eta_max2) + 0.5 * std::log(ratio);
  return {value, BoundKind::kProposition};
}

CapacityBound geometric_bound(double rho) {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw ModelError("geometric bound requires rho in (0,1)");
  }
  const double inv = 1.0 / rho;
  const double value = std::log(std::numbers::pi / 2.0) + 2.0 * (inv - 0.5) +
                       1.5 * std::log(inv);
  return {value, BoundKind::kGeometric};
}

ExponentialBoundPair exponential_bound(double rho) {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw ModelError("exponential bound requires rho in (0,1)");
  }
  return {
      .proof = {std::log(1.0 / rho), BoundKind::kExponentialProof},
      .stated = {1.0 / rho, BoundKind::kExponentialStated},
  };
}

}  // namespace netcap
