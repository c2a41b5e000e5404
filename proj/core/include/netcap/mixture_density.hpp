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

#ifndef NETCAP_MIXTURE_DENSITY_HPP_
#define NETCAP_MIXTURE_DENSITY_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace netcap {

// Conditioned on every input, each output symbol is circular Gaussian, so
// output blocks follow product-form Gaussian mixtures whose components
// are the sampled conditional-variance vectors. These two classes hold a
// frozen component set and evaluate log mixture densities; they are the
// two inner loops every entropy estimate runs N x M times.
//
// Components are stored in two halves by draw order, each deduplicated
// into weighted unique vectors (discrete input laws collapse to a handful
// of atoms). Every evaluation also returns the first-half-only value,
// which the estimator compares against the full value to decide whether
// the mixture resolution M needs doubling.

struct MixtureLogDensity {
  double full;
  double half;
};

// Mixture of products of CN(0, s_k): component j contributes
// prod_k exp(-v_k / s_{j,k}) / (pi s_{j,k}) with v_k = |y_k|^2.
class GaussianMixtureDensity {
 public:
  // variances: M x dim, row-major, in draw order.
  GaussianMixtureDensity(std::vector<double> variances, int dim);

  int dim() const noexcept { return dim_; }
  std::size_t components() const noexcept { return raw_total_; }
  bool degenerate() const noexcept;
  std::size_t scratch_size() const noexcept;

  // Exact entropy sum_k log(pi e s_k) of the single distinct component;
  // only meaningful when degenerate().
  double exact_entropy() const;

  MixtureLogDensity log_density(std::span<const double> v,
                                std::vector<double>& scratch) const;

 private:
  struct Pack {
    std::vector<double> inv;   // unique x dim, 1/s
    std::vector<double> coef;  // unique: log(count) - sum_k log s_{j,k}
    std::vector<double> rep;   // representative variance vector (first unique row)
    std::size_t raw = 0;
    std::size_t unique = 0;
  };

  Pack packs_[2];
  int dim_ = 1;
  std::size_t raw_total_ = 0;
};

// Mixture whose component variances are a frozen base plus a
// per-evaluation offset: component j contributes
// prod_k CN-density(v_k; t_{j,k} + a_k). Models the conditional output
// law with the direct input clamped (offset a_k = alpha0 |x_k|^2) and
// only the interferers mixed.
class ShiftedMixtureDensity {
 public:
  // base: M x dim, row-major, in draw order (noise variance included).
  ShiftedMixtureDensity(std::vector<double> base, int dim);

  int dim() const noexcept { return dim_; }
  std::size_t components() const noexcept { return raw_total_; }
  bool degenerate() const noexcept;
  std::size_t scratch_size() const noexcept;

  // Degenerate fast path: log density collapses to the single-component
  // Gaussian, whose negative expectation is sum_k log(pi e (t_k + a_k)).
  double exact_conditional_entropy(std::span<const double> offset) const;

  MixtureLogDensity log_density(std::span<const double> v,
                                std::span<const double> offset,
                                std::vector<double>& scratch) const;

 private:
  struct Pack {
    std::vector<double> base;     // unique x dim
    std::vector<double> log_w;    // unique: log(count)
    std::size_t raw = 0;
    std::size_t unique = 0;
  };

  Pack packs_[2];
  int dim_ = 1;
  std::size_t raw_total_ = 0;
};

}  // namespace netcap

#endif  // NETCAP_MIXTURE_DENSITY_HPP_
