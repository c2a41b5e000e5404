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

#ifndef NETCAP_RNG_HPP_
#define NETCAP_RNG_HPP_

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace netcap {

// splitmix64 step (Sebastiano Vigna, public domain). Used both to expand
// seeds into generator state and to derive child stream keys.
inline std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256++ seeded through splitmix64. Streams form a tree: child(i)
// derives a statistically independent generator from (key, i), so Monte
// Carlo work can be split into numbered chunks whose draws do not depend
// on scheduling. Same key, same chunk numbering -> identical draws.
class Rng {
 public:
  explicit Rng(std::uint64_t key) noexcept : key_(key) {
    std::uint64_t sm = key;
    for (auto& word : state_) word = splitmix64(sm);
  }

  // Child stream `i` of this generator's key. Derivation uses the key
  // only, never the evolving state, so the call order does not matter.
  Rng child(std::uint64_t i) const noexcept {
    std::uint64_t sm = key_ ^ (0x9e3779b97f4a7c15ULL + i);
    std::uint64_t derived = splitmix64(sm);
    sm = derived + i;
    return Rng(splitmix64(sm));
  }

  std::uint64_t key() const noexcept { return key_; }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on (0, 1]; safe as an argument of log().
  double uniform() noexcept {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1p-53;
  }

  // Uniform on [0, 1).
  double uniform_co() noexcept {
    return static_cast<double>(next() >> 11) * 0x1p-53;
  }

  // Exponential with mean 1.
  double exponential() noexcept { return -std::log(uniform()); }

  // Circularly-symmetric complex Gaussian CN(0, variance): the modulus
  // squared is Exp(variance), the phase is uniform.
  std::complex<double> complex_normal(double variance) noexcept {
    const double mag = std::sqrt(-variance * std::log(uniform()));
    const double phase = 2.0 * std::numbers::pi * uniform_co();
    return {mag * std::cos(phase), mag * std::sin(phase)};
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_;
  std::uint64_t key_;
};

}  // namespace netcap

#endif  // NETCAP_RNG_HPP_
