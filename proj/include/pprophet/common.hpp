// Copyright 2026 The Poisson Prophet Authors.
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

#ifndef PPROPHET_COMMON_HPP_
#define PPROPHET_COMMON_HPP_

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pprophet {

inline constexpr const char* kVersion = "0.3.0";

// Relative slack used when deciding acceptance ties and best-threshold ties.
inline constexpr double kTieTolerance = 1e-12;

// Absolute slack for inequality checks in bound verification.
inline constexpr double kBoundSlack = 1e-9;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Raised when an operation is called outside its domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an iterative solver or quadrature fails to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

inline void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(name) + " must be finite");
  }
}

// 1 - exp(-x) without cancellation for small x.
inline double one_minus_exp_neg(double x) { return -std::expm1(-x); }

}  // namespace detail
}  // namespace pprophet

#endif  // PPROPHET_COMMON_HPP_
