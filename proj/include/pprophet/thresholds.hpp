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

#ifndef PPROPHET_THRESHOLDS_HPP_
#define PPROPHET_THRESHOLDS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "pprophet/common.hpp"
#include "pprophet/distributions.hpp"

namespace pprophet {

// gamma(t) = t / (1 - e^{-t}).
inline double gamma_t(double t) {
  detail::require(t > 0.0, "gamma_t needs t > 0");
  return t / detail::one_minus_exp_neg(t);
}

// beta(t) = 1 - (1 + log gamma(t)) / gamma(t), the maximum of h_t on [0,1].
inline double beta_t(double t) {
  detail::require(t > 0.0, "beta_t needs t > 0");
  if (t < 1e-3) {
    // Taylor expansion; the closed form cancels catastrophically here.
    const double t2 = t * t;
    return t2 * (1.0 / 8.0 +
                 t * (-1.0 / 16.0 +
                      t * (11.0 / 576.0 +
                           t * (-5.0 / 1152.0 + t * (41.0 / 51840.0)))));
  }
  // gamma - 1 = (t - (1 - e^{-t})) / (1 - e^{-t}).
  const double q = detail::one_minus_exp_neg(t);
  const double u = (t + std::expm1(-t)) / q;
  const double g = 1.0 + u;
  return (u - std::log1p(u)) / g;
}

// h_t(x) = 1 - e^{-tx} - (1 - e^{-t}) x.
inline double h_t(double t, double x) {
  detail::require(t > 0.0, "h_t needs t > 0");
  detail::require(x >= 0.0 && x <= 1.0, "h_t needs x in [0,1]");
  return detail::one_minus_exp_neg(t * x) - detail::one_minus_exp_neg(t) * x;
}

// gamma(t), beta(t) and the maximizer of h_t, bundled for a horizon t.
struct BetaBundle {
  double t = 0.0;
  double gamma = 0.0;
  double beta = 0.0;
  double argmax_x = 0.0;
};

inline BetaBundle beta_bundle(double t) {
  detail::require(t > 0.0, "beta_bundle needs t > 0");
  const double q = detail::one_minus_exp_neg(t);
  const double u = (t + std::expm1(-t)) / q;
  return BetaBundle{t, 1.0 + u, beta_t(t), std::log1p(u) / t};
}

// W_c(t) = [1 - exp(-t P(X >= c))] E(X | X >= c).
inline double threshold_value(const FiniteDist& d, double c, double t) {
  detail::require(t > 0.0, "threshold_value needs t > 0");
  detail::require(c >= 0.0 && std::isfinite(c),
                  "threshold must be finite and nonnegative");
  double mass = 0.0;
  double first_moment = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.atom(i) >= c) {
      mass += d.prob(i);
      first_moment += d.prob(i) * d.atom(i);
    }
  }
  if (!(mass > 0.0)) {
    throw DomainError("unreachable threshold: P(X >= c) = 0");
  }
  return detail::one_minus_exp_neg(t * mass) * (first_moment / mass);
}

struct ThresholdChoice {
  double c = 0.0;
  double value = 0.0;
};

// sup_c W_c(t). W_c is constant in c between consecutive atoms, so the atoms
// are the only candidates. Near-ties resolve to the smallest atom.
inline ThresholdChoice best_threshold(const FiniteDist& d, double t) {
  std::vector<double> values(d.size());
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.size(); ++i) {
    values[i] = threshold_value(d, d.atom(i), t);
    best = std::max(best, values[i]);
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (values[i] >= best - kTieTolerance * std::abs(best)) {
      return ThresholdChoice{d.atom(i), values[i]};
    }
  }
  return ThresholdChoice{d.max_atom(), best};
}

// The minimax threshold c* = b beta(t) / (beta(t) + 1 - e^{-t}) for
// [a,b]-valued observations.
inline double minimax_threshold(double a, double b, double t) {
  detail::require(a >= 0.0, "minimax_threshold needs a >= 0");
  detail::require(b > a, "minimax_threshold needs b > a");
  const double beta = beta_t(t);
  return b * beta / (beta + detail::one_minus_exp_neg(t));
}

// Guaranteed bound [b - max(a, c*)] beta(t) on M(t) - W_{c*}(t).
inline double minimax_guarantee(double a, double b, double t) {
  const double cstar = minimax_threshold(a, b, t);
  return (b - std::max(a, cstar)) * beta_t(t);
}

// Upper bound on M(t) - V(t) for [a,b]-valued observations.
inline double difference_bound(double a, double b, double t) {
  detail::require(a >= 0.0, "difference_bound needs a >= 0");
  detail::require(b > a, "difference_bound needs b > a");
  const double beta = beta_t(t);
  const double q = detail::one_minus_exp_neg(t);
  return std::min((b - a) * beta, b * beta * q / (beta + q));
}

// Checks on a log-spaced grid over [1e-6, 50] that
// f(x) = (1 - e^{-x})(1 + gamma/x) has no interior local minimum.
inline bool endpoint_min_check(double gamma, int grid = 10'000) {
  detail::require(gamma > 0.0, "endpoint_min_check needs gamma > 0");
  detail::require(grid >= 1000, "endpoint_min_check needs grid >= 1000");
  const double lo = std::log(1e-6);
  const double hi = std::log(50.0);
  auto f = [gamma](double x) {
    return detail::one_minus_exp_neg(x) * (1.0 + gamma / x);
  };
  std::vector<double> fx(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    const double x = std::exp(lo + (hi - lo) * i / (grid - 1));
    fx[static_cast<std::size_t>(i)] = f(x);
  }
  for (std::size_t i = 1; i + 1 < fx.size(); ++i) {
    const double noise = 1e-12 * std::abs(fx[i]);
    if (fx[i - 1] > fx[i] + noise && fx[i + 1] > fx[i] + noise) return false;
  }
  return true;
}

}  // namespace pprophet

#endif  // PPROPHET_THRESHOLDS_HPP_
