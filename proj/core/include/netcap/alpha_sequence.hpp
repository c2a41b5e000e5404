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

#ifndef NETCAP_ALPHA_SEQUENCE_HPP_
#define NETCAP_ALPHA_SEQUENCE_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace netcap {

enum class AlphaModel { kExponential, kPolynomial, kExplicit };

std::string to_string(AlphaModel model);

// Fading-variance profile of the interferer links. Index 0 is the direct
// link (variance alpha0, 1 by default), index ell >= 1 the ell-th strongest
// interferer. Every model is an infinite sequence: successive values are
// nonincreasing from index 1 on and successive ratios never drop below
// rho() (the decay-ratio floor), which is what keeps the variance-ratio
// bounds of the analysis finite.
//
// Explicit lists keep their listed prefix and continue geometrically at
// ratio rho() past the end; without that continuation the ratio floor
// would be violated at the seam.
class AlphaSequence {
 public:
  // alpha_ell = rho^ell, the canonical exponential-decay profile.
  static AlphaSequence exponential(double rho, double alpha0 = 1.0);

  // alpha_ell = ell^-beta, beta > 0; decays more slowly than exponential.
  // The ratio floor is (1/2)^beta, attained at ell = 1.
  static AlphaSequence polynomial(double beta, double alpha0 = 1.0);

  // Listed head values for ell = 1..values.size(). The decay floor is the
  // infimum of successive ratios, clamped to rho_ceiling so it stays
  // strictly below 1 for constant lists.
  static AlphaSequence explicit_values(std::vector<double> values,
                                       double alpha0 = 1.0,
                                       double rho_ceiling = kDefaultRhoCeiling);

  // Variance at index ell; value(0) == alpha0().
  double value(std::size_t ell) const;

  double alpha0() const noexcept { return alpha0_; }
  double rho() const noexcept { return rho_; }
  AlphaModel model() const noexcept { return model_; }

  // Decay exponent for the polynomial model.
  double beta() const noexcept { return beta_; }

  // Length of the listed head (explicit model only, 0 otherwise).
  std::size_t explicit_length() const noexcept { return values_.size(); }

  // Sum_{ell > L} value(ell). Closed form for exponential and explicit
  // tails; partial sum plus an integral bracket for polynomial. Throws
  // TruncationError if the polynomial tail cannot be pinned down within
  // the term cap.
  double tail_sum(std::size_t truncation) const;

  static constexpr double kDefaultRhoCeiling = 1.0 - 1e-9;
  static constexpr std::size_t kPolynomialTermCap = 1'000'000;

 private:
  AlphaSequence() = default;

  AlphaModel model_ = AlphaModel::kExponential;
  double alpha0_ = 1.0;
  double rho_ = 0.5;
  double beta_ = 0.0;
  std::vector<double> values_;  // explicit head, empty otherwise
};

// Smallest interferer count L whose omitted tail variance satisfies
// power * sum_{ell > L} alpha_ell <= eps * sigma2. Explicit lists always
// truncate to their listed length: the listed interferers are the network.
std::size_t truncation_length(const AlphaSequence& alphas, double power,
                              double sigma2, double eps);

}  // namespace netcap

#endif  // NETCAP_ALPHA_SEQUENCE_HPP_
