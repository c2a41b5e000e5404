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

#include "netcap/alpha_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "netcap/errors.hpp"

namespace netcap {

std::string to_string(AlphaModel model) {
  switch (model) {
    case AlphaModel::kExponential: return "exponential";
    case AlphaModel::kPolynomial: return "polynomial";
    case AlphaModel::kExplicit: return "explicit";
  }
  return "unknown";
}

AlphaSequence AlphaSequence::exponential(double rho, double alpha0) {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw ModelError("exponential alpha model requires rho in (0,1), got " +
                     std::to_string(rho));
  }
  if (!(alpha0 > 0.0)) {
    throw ModelError("alpha0 must be positive");
  }
  AlphaSequence seq;
  seq.model_ = AlphaModel::kExponential;
  seq.rho_ = rho;
  seq.alpha0_ = alpha0;
  return seq;
}

AlphaSequence AlphaSequence::polynomial(double beta, double alpha0) {
  if (!(beta > 0.0)) {
    throw ModelError("polynomial alpha model requires beta > 0, got " +
                     std::to_string(beta));
  }
  if (!(alpha0 > 0.0)) {
    throw ModelError("alpha0 must be positive");
  }
  AlphaSequence seq;
  seq.model_ = AlphaModel::kPolynomial;
  seq.beta_ = beta;
  seq.alpha0_ = alpha0;
  // Successive ratios (ell/(ell+1))^beta increase toward 1; the floor is
  // the first one.
  seq.rho_ = std::pow(0.5, beta);
  return seq;
}

AlphaSequence AlphaSequence::explicit_values(std::vector<double> values,
                                             double alpha0,
                                             double rho_ceiling) {
  if (values.empty()) {
    throw ModelError("explicit alpha list must not be empty");
  }
  if (!(alpha0 > 0.0)) {
    throw ModelError("alpha0 must be positive");
  }
  if (!(rho_ceiling > 0.0 && rho_ceiling < 1.0)) {
    throw ModelError("rho ceiling must lie in (0,1)");
  }
  double ratio_inf = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw ModelError("explicit alpha list entries must be positive finite, entry " +
                       std::to_string(i + 1) + " is " + std::to_string(values[i]));
    }
    if (i > 0) {
      if (values[i] > values[i - 1]) {
        throw ModelError("explicit alpha list must be nonincreasing, entries " +
                         std::to_string(i) + ".." + std::to_string(i + 1) +
                         " increase");
      }
      ratio_inf = std::min(ratio_inf, values[i] / values[i - 1]);
    }
  }
  if (values.size() > 1 && !(ratio_inf > 0.0)) {
    throw ModelError("explicit alpha list has ratio infimum 0; decay-ratio floor unsatisfiable");
  }
  AlphaSequence seq;
  seq.model_ = AlphaModel::kExplicit;
  seq.alpha0_ = alpha0;
  seq.values_ = std::move(values);
  seq.rho_ = std::min(ratio_inf, rho_ceiling);
  return seq;
}

double AlphaSequence::value(std::size_t ell) const {
  if (ell == 0) return alpha0_;
  switch (model_) {
    case AlphaModel::kExponential:
      return std::pow(rho_, static_cast<double>(ell));
    case AlphaModel::kPolynomial:
      return std::pow(static_cast<double>(ell), -beta_);
    case AlphaModel::kExplicit:
      if (ell <= values_.size()) return values_[ell - 1];
      return values_.back() *
             std::pow(rho_, static_cast<double>(ell - values_.size()));
  }
  return 0.0;
}

double AlphaSequence::tail_sum(std::size_t truncation) const {
  switch (model_) {
    case AlphaModel::kExponential:
      // sum_{ell > L} rho^ell = rho^{L+1} / (1 - rho)
      return std::pow(rho_, static_cast<double>(truncation + 1)) / (1.0 - rho_);
    case AlphaModel::kExplicit: {
      double head = 0.0;
      for (std::size_t ell = truncation + 1; ell <= values_.size(); ++ell) {
        head += values_[ell - 1];
      }
      const std::size_t from = std::max(truncation, values_.size());
      const double geo_start = value(from + 1);
      return head + geo_start / (1.0 - rho_);
    }
    case AlphaModel::kPolynomial: {
      if (beta_ <= 1.0) {
        throw TruncationError(
            "polynomial alpha tail diverges for beta <= 1",
            std::numeric_limits<double>::infinity());
      }
      // Sum a window of terms, then bracket the rest by the integral bound
      // integral_x0^inf x^-beta dx = x0^(1-beta)/(beta-1).
      constexpr std::size_t kWindow = 10'000;
      double sum = 0.0;
      for (std::size_t ell = truncation + 1; ell <= truncation + kWindow; ++ell) {
        sum += std::pow(static_cast<double>(ell), -beta_);
      }
      const double rest_hi =
          std::pow(static_cast<double>(truncation + kWindow), 1.0 - beta_) /
          (beta_ - 1.0);
      return sum + rest_hi;
    }
  }
  return 0.0;
}

std::size_t truncation_length(const AlphaSequence& alphas, double power,
                              double sigma2, double eps) {
  if (!(eps > 0.0)) throw ModelError("truncation eps must be positive");
  if (!(sigma2 > 0.0)) throw ModelError("sigma2 must be positive");
  if (power < 0.0) throw ModelError("power must be nonnegative");

  if (alphas.model() == AlphaModel::kExplicit) {
    return alphas.explicit_length();
  }
  const double target = eps * sigma2;
  if (power == 0.0) return 0;

  if (alphas.model() == AlphaModel::kExponential) {
    const double rho = alphas.rho();
    // Closed form: smallest L with power * rho^{L+1}/(1-rho) <= target.
    const double raw =
        std::log(target * (1.0 - rho) / power) / std::log(rho) - 1.0;
    std::size_t L = raw <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(raw));
    while (power * alphas.tail_sum(L) > target) ++L;
    while (L > 0 && power * alphas.tail_sum(L - 1) <= target) --L;
    return L;
  }

  // Polynomial: grow L until the bracketed tail fits, up to the term cap.
  if (alphas.beta() <= 1.0) {
    throw TruncationError("polynomial alpha tail diverges for beta <= 1; cannot meet eps",
                          std::numeric_limits<double>::infinity());
  }
  std::size_t lo = 0;
  std::size_t hi = 1;
  while (power * alphas.tail_sum(hi) > target) {
    lo = hi;
    hi *= 2;
    if (hi > AlphaSequence::kPolynomialTermCap) {
      const double achieved =
          power * alphas.tail_sum(AlphaSequence::kPolynomialTermCap);
      throw TruncationError(
          "polynomial alpha tail needs more than " +
              std::to_string(AlphaSequence::kPolynomialTermCap) +
              " terms to reach eps; achieved tail mass " + std::to_string(achieved),
          achieved);
    }
  }
  while (lo + 1 < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (power * alphas.tail_sum(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (power * alphas.tail_sum(lo) <= target) return lo;
  return hi;
}

}  // namespace netcap
