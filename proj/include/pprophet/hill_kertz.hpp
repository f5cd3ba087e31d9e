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

#ifndef PPROPHET_HILL_KERTZ_HPP_
#define PPROPHET_HILL_KERTZ_HPP_

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "pprophet/common.hpp"
#include "pprophet/quadrature.hpp"

namespace pprophet {

// The sharp i.i.d. prophet constants for n observations: the ratio constant
// a_n = 1 + alpha_n and the difference constant b_n = beta_n.
struct HKConstants {
  std::int64_t n = 0;
  double alpha_n = 0.0;
  double beta_n = 0.0;
  double tol = 0.0;  // achieved bracket width

  double a_n() const { return 1.0 + alpha_n; }
  double b_n() const { return beta_n; }
};

inline constexpr double kHKDefaultTol = 1e-12;
inline constexpr int kBisectionCap = 200;

// phi_n(w, x) = (n/(n-1)) w^((n-1)/n) + x/(n-1).
inline double phi(std::int64_t n, double w, double x) {
  detail::require(n >= 2, "phi needs n >= 2");
  detail::require(w >= 0.0 && x >= 0.0, "phi needs w, x >= 0");
  const double nm1 = static_cast<double>(n - 1);
  const double nd = static_cast<double>(n);
  if (w == 0.0) return x / nm1;
  return (nd / nm1) * std::exp((nm1 / nd) * std::log(w)) + x / nm1;
}

namespace detail {

// (eta_{j-1,n}(alpha), eta_{j,n}(alpha)) for j >= 1. Iterative, O(j).
inline std::pair<double, double> eta_pair(std::int64_t j, std::int64_t n,
                                          double alpha) {
  double prev = 0.0;
  double cur = phi(n, 0.0, alpha);
  for (std::int64_t i = 1; i <= j; ++i) {
    prev = cur;
    cur = phi(n, cur, alpha);
  }
  return {prev, cur};
}

// Bisection for an increasing function crossing zero on (lo, hi).
template <typename F>
std::pair<double, double> bisect_increasing(const F& f, double lo, double hi,
                                            double tol, const char* what) {
  for (int iter = 0; iter < kBisectionCap; ++iter) {
    if (hi - lo <= tol) return {0.5 * (lo + hi), hi - lo};
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo <= tol) return {0.5 * (lo + hi), hi - lo};
  throw NumericalError(std::string(what) + ": bisection did not converge");
}

}  // namespace detail

// eta_{0,n}(alpha) = phi_n(0, alpha), eta_{j,n} = phi_n(eta_{j-1,n}, alpha).
inline double eta(std::int64_t j, std::int64_t n, double alpha) {
  detail::require(j >= 0, "eta needs j >= 0");
  detail::require(alpha >= 0.0, "eta needs alpha >= 0");
  return detail::eta_pair(j, n, alpha).second;
}

// Unique alpha in (0,1) with eta_{n-1,n}(alpha) = 1.
inline double solve_alpha_n(std::int64_t n, double tol = kHKDefaultTol) {
  detail::require(n >= 2, "solve_alpha_n needs n >= 2");
  detail::require(tol > 0.0, "solve_alpha_n needs tol > 0");
  return detail::bisect_increasing(
             [n](double a) { return eta(n - 1, n, a) - 1.0; }, 0.0, 1.0, tol,
             "solve_alpha_n")
      .first;
}

// Unique beta in (0,1) with (n-1)[eta_{n,n}(beta) - eta_{n-1,n}(beta)] = 1.
inline double solve_beta_n(std::int64_t n, double tol = kHKDefaultTol) {
  detail::require(n >= 2, "solve_beta_n needs n >= 2");
  detail::require(tol > 0.0, "solve_beta_n needs tol > 0");
  const double nm1 = static_cast<double>(n - 1);
  return detail::bisect_increasing(
             [n, nm1](double b) {
               const auto [e_prev, e_cur] = detail::eta_pair(n, n, b);
               return nm1 * (e_cur - e_prev) - 1.0;
             },
             0.0, 1.0, tol, "solve_beta_n")
      .first;
}

inline HKConstants hill_kertz_constants(std::int64_t n,
                                        double tol = kHKDefaultTol) {
  return HKConstants{n, solve_alpha_n(n, tol), solve_beta_n(n, tol), tol};
}

// Memoized hill_kertz_constants at the default tolerance. Large n is
// expensive (O(n) per bisection step), and sweeps reuse the same few n.
inline HKConstants hill_kertz_cached(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, HKConstants> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const HKConstants hk = hill_kertz_constants(n);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, hk);
  return hk;
}

// Integral of 1/(y - y ln y + alpha) over [0, 1]. The y ln y term vanishes
// at y = 0, where the integrand is 1/alpha.
inline double alpha_zero_integral(double alpha, double abs_tol = 1e-13) {
  detail::require(alpha > 0.0, "alpha_zero_integral needs alpha > 0");
  auto integrand = [alpha](double y) {
    const double ylogy = y > 0.0 ? y * std::log(y) : 0.0;
    return 1.0 / (y - ylogy + alpha);
  };
  const QuadratureResult q = adaptive_simpson(integrand, 0.0, 1.0, abs_tol);
  if (!q.converged) {
    throw NumericalError("alpha_zero_integral: quadrature did not converge");
  }
  return q.value;
}

// The limit of alpha_n: the alpha for which the integral above equals 1.
inline double alpha_zero(double tol = kHKDefaultTol) {
  detail::require(tol > 0.0, "alpha_zero needs tol > 0");
  // The integral decreases in alpha; negate to bisect an increasing function.
  return detail::bisect_increasing(
             [](double a) { return 1.0 - alpha_zero_integral(a); }, 1e-3, 1.0,
             tol, "alpha_zero")
      .first;
}

inline double alpha_zero_cached() {
  static const double value = alpha_zero();
  return value;
}

}  // namespace pprophet

#endif  // PPROPHET_HILL_KERTZ_HPP_
