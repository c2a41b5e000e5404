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

#ifndef NETCAP_CAPACITY_BOUNDS_HPP_
#define NETCAP_CAPACITY_BOUNDS_HPP_

#include <string>

#include "netcap/eta.hpp"

namespace netcap {

// Every bound here is a constant in nats per channel use: none of them
// depends on the SNR, which is the whole point.
enum class BoundKind {
  kKRaw,               // per-use entropy-difference constant
  kProposition,        // relaxed closed form in (eta_min2, eta_max2)
  kGeometric,          // proposition specialized to alpha_ell = rho^ell
  kExponentialProof,   // what the exponential-decay derivation yields: log(1/rho)
  kExponentialStated,  // the displayed exponential-decay bound: 1/rho
};

std::string to_string(BoundKind kind);

struct CapacityBound {
  double nats;
  BoundKind kind;
};

inline double nats_to_bits(double nats) { return nats / 0.6931471805599453; }

// log(pi) - 1 - log 2 + log s + (1/2) log(eta_max2/eta_min2) + 2 eta_max2/s
// at s = eta_star2. Requires eta_star2 inside [eta_min2, eta_max2].
CapacityBound bound_K(const EtaBounds& bounds, double eta_star2);

// The s-dependent part log s + 2 eta_max2 / s falls on the whole
// admissible interval, so its supremum sits at s = eta_min2; reporting
// uses that value, which upper-bounds bound_K for every admissible s.
CapacityBound bound_K_worst_case(const EtaBounds& bounds);

// log(pi/2) + 2 (eta_max2/eta_min2 - 1/2) + log eta_max2
//           + (1/2) log(eta_max2/eta_min2).
// Dominates bound_K at every admissible eta_star2.
CapacityBound proposition_bound(const EtaBounds& bounds);

// Proposition bound under alpha_ell = rho^ell, where eta_min2 = 1 and
// eta_max2 = 1/rho:  log(pi/2) + 2 (1/rho - 1/2) + (3/2) log(1/rho).
CapacityBound geometric_bound(double rho);

// The exponential-decay special case carries two numbers: the displayed
// bound 1/rho and the log(1/rho) the derivation chain actually produces.
// Both are surfaced; comparisons use the derived one.
struct ExponentialBoundPair {
  CapacityBound proof;   // log(1/rho)
  CapacityBound stated;  // 1/rho
};

ExponentialBoundPair exponential_bound(double rho);

}  // namespace netcap

#endif  // NETCAP_CAPACITY_BOUNDS_HPP_
