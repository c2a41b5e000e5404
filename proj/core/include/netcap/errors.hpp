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

#ifndef NETCAP_ERRORS_HPP_
#define NETCAP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace netcap {

// Invalid model parameters (rho out of range, non-monotone alpha list, ...).
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Truncation could not reach the requested tail mass within the term cap.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double achieved_tail_mass)
      : std::runtime_error(what), achieved_tail_mass_(achieved_tail_mass) {}
  double achieved_tail_mass() const noexcept { return achieved_tail_mass_; }

 private:
  double achieved_tail_mass_;
};

// Adaptive quadrature finished above the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

// Config file problems; carries the 1-based line the problem was found on
// (0 when the problem is not tied to a single line).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace netcap

#endif  // NETCAP_ERRORS_HPP_
