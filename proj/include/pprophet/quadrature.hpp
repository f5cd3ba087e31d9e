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

#ifndef PPROPHET_QUADRATURE_HPP_
#define PPROPHET_QUADRATURE_HPP_

#include <cmath>
#include <functional>

#include "pprophet/common.hpp"

namespace pprophet {

struct QuadratureResult {
  double value = 0.0;
  int evaluations = 0;
  bool converged = true;
};

namespace detail {

template <typename F>
double adaptive_simpson_step(const F& f, double a, double b, double fa,
                             double fm, double fb, double whole, double tol,
                             int depth, QuadratureResult& out) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  out.evaluations += 2;
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) {
    out.converged = false;
    return left + right + delta / 15.0;
  }
  return adaptive_simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol,
                               depth - 1, out) +
         adaptive_simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol,
                               depth - 1, out);
}

}  // namespace detail

// Adaptive Simpson quadrature with interval halving and Richardson
// correction. The tolerance is absolute and split between halves.
template <typename F>
QuadratureResult adaptive_simpson(const F& f, double a, double b,
                                  double abs_tol, int max_depth = 50) {
  QuadratureResult out;
  if (a == b) return out;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  out.evaluations = 3;
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  out.value = detail::adaptive_simpson_step(f, a, b, fa, fm, fb, whole,
                                            abs_tol, max_depth, out);
  return out;
}

}  // namespace pprophet

#endif  // PPROPHET_QUADRATURE_HPP_
