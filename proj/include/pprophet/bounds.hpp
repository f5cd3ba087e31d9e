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

#ifndef PPROPHET_BOUNDS_HPP_
#define PPROPHET_BOUNDS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pprophet/common.hpp"
#include "pprophet/dist_spec.hpp"
#include "pprophet/distributions.hpp"
#include "pprophet/hill_kertz.hpp"
#include "pprophet/poisson_stopping.hpp"
#include "pprophet/rng.hpp"
#include "pprophet/thresholds.hpp"

namespace pprophet {

// Uniform-in-t ratio bound 1 + alpha_0.
inline double ratio_bound_long() { return 1.0 + alpha_zero_cached(); }

// M(t) - V(t) <= b_n + (1 - e^{-t}) [1 - n (1 - e^{-t/n}) / t] for
// [0,1]-valued observations, any n >= 2.
inline double diff_bound_precise(double t, std::int64_t n, double beta_n) {
  detail::require(t > 0.0, "diff_bound_precise needs t > 0");
  detail::require(n >= 2, "diff_bound_precise needs n >= 2");
  const auto nd = static_cast<double>(n);
  const double bracket =
      1.0 - nd * detail::one_minus_exp_neg(t / nd) / t;
  return beta_n + detail::one_minus_exp_neg(t) * bracket;
}

inline double diff_bound_precise(double t, std::int64_t n) {
  detail::require(n >= 2, "diff_bound_precise needs n >= 2");
  return diff_bound_precise(t, n, hill_kertz_cached(n).beta_n);
}

// f(t) = 2 - (1 - e^{-t}) / t.
inline double short_ratio_f(double t) {
  detail::require(t > 0.0, "short_ratio_f needs t > 0");
  return 2.0 - detail::one_minus_exp_neg(t) / t;
}

// g(t) = (2 - e^{-t}) / (2 - log(1 + t) / t).
inline double short_ratio_g(double t) {
  detail::require(t > 0.0, "short_ratio_g needs t > 0");
  return (2.0 - std::exp(-t)) / (2.0 - std::log1p(t) / t);
}

// The short-range difference bound for [0,1]-valued observations.
inline double hat_f(double t) {
  detail::require(t > 0.0, "hat_f needs t > 0");
  const double beta = beta_t(t);
  const double q = detail::one_minus_exp_neg(t);
  return beta * q / (beta + q);
}

// M(t) - V(t) for the two-point law P(X = 1) = 1/(e^t + 1),
// P(X = (1 - e^{-t})/2) = e^t/(e^t + 1).
inline double hat_g(double t) {
  detail::require(t > 0.0, "hat_g needs t > 0");
  const double e = std::exp(-t);
  return 0.5 * ((1.0 + e) * detail::one_minus_exp_neg(t / (std::exp(t) + 1.0)) -
                e * detail::one_minus_exp_neg(t));
}

// The law behind hat_g; its single critical time equals t.
inline FiniteDist hat_g_law(double t) {
  detail::require(t > 0.0, "hat_g_law needs t > 0");
  const double top = 1.0 / (std::exp(t) + 1.0);
  return FiniteDist::from_weights(
      std::vector<double>{0.5 * detail::one_minus_exp_neg(t), 1.0},
      std::vector<double>{1.0 - top, top});
}

enum class SharpnessKind { kRatio, kDifference };

// Horizon beyond which the n-observation extremal laws embed into the
// Poisson model: log((n-1)/alpha_n) or log((n-1)/beta_n).
inline double sharpness_threshold(const HKConstants& hk, SharpnessKind kind) {
  detail::require(hk.n >= 2, "sharpness_threshold needs n >= 2");
  const double c = kind == SharpnessKind::kRatio ? hk.alpha_n : hk.beta_n;
  return std::log(static_cast<double>(hk.n - 1) / c);
}

inline double sharpness_threshold(std::int64_t n, SharpnessKind kind) {
  detail::require(n >= 2, "sharpness_threshold needs n >= 2");
  return sharpness_threshold(hill_kertz_cached(n), kind);
}

struct SharpTwoPoint {
  FiniteDist dist;
  double epsilon = 0.0;
  double ratio = 0.0;  // M(t) / sup_c W_c(t), closed form
};

// Two-point law {eps, 1} with P(X = 1) = p for which both thresholds give
// the same value; its ratio approaches f(t) from below as p -> 0.
inline SharpTwoPoint sharp_two_point(double t, double p) {
  detail::require(t > 0.0, "sharp_two_point needs t > 0");
  detail::require(p > 0.0 && p < 1.0, "sharp_two_point needs p in (0,1)");
  const double q = detail::one_minus_exp_neg(t);
  const double qp = detail::one_minus_exp_neg(t * p);
  const double eps = (qp - p * q) / ((1.0 - p) * q);
  // e^{-tp} - e^{-t} = (1 - e^{-t}) - (1 - e^{-tp}).
  const double ratio = 1.0 + eps * (q - qp) / qp;
  return SharpTwoPoint{
      FiniteDist::from_weights(std::vector<double>{eps, 1.0},
                               std::vector<double>{1.0 - p, p}),
      eps, ratio};
}

// Limit of M/V for atoms {1, K}, P(X = K) = a/(tK), as K -> inf. Needs
// log(1 + t/a) < t.
inline double heavy_two_point_limit(double t, double a) {
  detail::require(t > 0.0 && a > 0.0, "heavy_two_point_limit needs t, a > 0");
  detail::require(std::log1p(t / a) < t,
                  "heavy_two_point_limit needs log(1 + t/a) < t");
  return (a + 1.0 - std::exp(-t)) / (a + 1.0 - (a / t) * std::log1p(t / a));
}

inline FiniteDist heavy_two_point_law(double t, double a, double k) {
  detail::require(t > 0.0 && a > 0.0, "heavy_two_point_law needs t, a > 0");
  detail::require(k > 1.0 && a / (t * k) < 1.0,
                  "heavy_two_point_law needs K > 1 and a/(tK) < 1");
  const double top = a / (t * k);
  return FiniteDist::from_weights(std::vector<double>{1.0, k},
                                  std::vector<double>{1.0 - top, top});
}

// Limit of M/V for atoms {1, K, K^2}, P(X >= K) = a/t,
// P(X = K^2) = b/(tK), as K -> inf; constant in t once t > a. Needs
// log(1 + a/b) < a.
inline double heavy_three_point_limit(double a, double b) {
  detail::require(a > 0.0 && b > 0.0, "heavy_three_point_limit needs a, b > 0");
  detail::require(std::log1p(a / b) < a,
                  "heavy_three_point_limit needs log(1 + a/b) < a");
  return (1.0 + b - std::exp(-a)) / (1.0 + b - (b / a) * std::log1p(a / b));
}

inline FiniteDist heavy_three_point_law(double t, double a, double b, double k) {
  detail::require(a > 0.0 && b > 0.0, "heavy_three_point_law needs a, b > 0");
  detail::require(a < t, "heavy_three_point_law needs a < t");
  detail::require(k > 1.0 && b / k < a,
                  "heavy_three_point_law needs K > 1 and b/K < a");
  const double r2 = a / t;
  const double r3 = b / (t * k);
  return FiniteDist::from_weights(std::vector<double>{1.0, k, k * k},
                                  std::vector<double>{1.0 - r2, r2 - r3, r3});
}

struct TwoPointSearchResult {
  double ratio = 0.0;
  double low_atom = 0.0;  // upper atom is 1
  double top_prob = 0.0;
};

// Grid search of M(t)/V(t) over laws {x, 1}. Exploratory only; no
// optimality claim attaches to the result.
inline TwoPointSearchResult two_point_ratio_search(double t, int grid = 200) {
  detail::require(t > 0.0, "two_point_ratio_search needs t > 0");
  detail::require(grid >= 2, "two_point_ratio_search needs grid >= 2");
  TwoPointSearchResult best;
  for (int i = 0; i < grid; ++i) {
    const double x = (i + 0.5) / grid;
    for (int j = 0; j < grid; ++j) {
      const double p = std::pow(10.0, -6.0 + 6.0 * (j + 0.5) / grid);
      if (p >= 1.0) continue;
      const FiniteDist d = FiniteDist::from_weights(
          std::vector<double>{x, 1.0}, std::vector<double>{1.0 - p, p});
      const double ratio = expected_max(d, t) / ValueProfile(d).value(t);
      if (ratio > best.ratio) best = TwoPointSearchResult{ratio, x, p};
    }
  }
  return best;
}

// One inequality evaluated on one instance.
struct BoundCheck {
  std::string name;
  double bound = 0.0;
  double achieved = 0.0;
  double margin = 0.0;  // bound - achieved
  bool strict = false;
  bool violated = false;
};

struct BoundReport {
  std::string instance;  // distribution spec, re-parseable
  double t = 0.0;
  double prophet = 0.0;         // M(t)
  double optimal = 0.0;         // V(t)
  double best_threshold = 0.0;  // sup_c W_c(t)
  std::vector<BoundCheck> checks;
  bool violated = false;
};

class BoundViolation : public std::runtime_error {
 public:
  explicit BoundViolation(BoundReport report)
      : std::runtime_error("bound violated on instance " + report.instance +
                           " at t = " + format_double(report.t)),
        report_(std::move(report)) {}
  const BoundReport& report() const { return report_; }

 private:
  BoundReport report_;
};

// Random law: 2-8 atoms, log-uniform on [1e-3, 1e3], flat Dirichlet weights.
inline FiniteDist random_instance(UniformSource& u) {
  const int count = 2 + static_cast<int>(u() * 7.0);
  std::vector<double> atoms;
  std::vector<double> weights;
  for (int i = 0; i < count; ++i) {
    atoms.push_back(std::pow(10.0, -3.0 + 6.0 * u()));
    weights.push_back(u.exponential());
  }
  return FiniteDist::from_weights(atoms, weights);
}

// Evaluates every Poisson-model inequality on (d, t).
inline BoundReport evaluate_bounds(const FiniteDist& d, double t,
                                   double precise_beta,
                                   std::int64_t precise_n) {
  BoundReport rep;
  rep.instance = format_dist_spec(d);
  rep.t = t;
  const ValueProfile profile(d);
  rep.prophet = expected_max(d, t);
  rep.optimal = profile.value(t);
  rep.best_threshold = best_threshold(d, t).value;
  const double m = rep.prophet;
  const double v = rep.optimal;
  const double a = d.min_atom();
  const double b = d.max_atom();

  auto add = [&rep](std::string name, double bound, double achieved,
                    bool strict) {
    BoundCheck c{std::move(name), bound, achieved, bound - achieved, strict,
                 false};
    c.violated = strict ? !(c.margin > 0.0) : c.margin < -kBoundSlack;
    rep.violated = rep.violated || c.violated;
    rep.checks.push_back(std::move(c));
  };

  add("optimal_le_prophet", m, v, false);
  add("threshold_le_optimal", v, rep.best_threshold, false);
  add("ratio_long_range", ratio_bound_long() * v, m, false);
  add("ratio_short_range_optimal", short_ratio_f(t), m / v, true);
  add("ratio_short_range_threshold", short_ratio_f(t),
      m / rep.best_threshold, true);
  const double cstar = minimax_threshold(a, b, t);
  add("minimax_threshold_difference", minimax_guarantee(a, b, t),
      m - threshold_value(d, cstar, t), false);
  add("difference_short_range", difference_bound(a, b, t), m - v, false);
  // Rescaled to [0,1].
  add("difference_long_range_precise",
      diff_bound_precise(t, precise_n, precise_beta), (m - v) / b, false);
  return rep;
}

struct SweepConfig {
  std::int64_t count = 1000;
  std::uint64_t seed = 1;
  std::vector<double> t_grid{0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0};
  std::int64_t precise_n = 1'000'000;
  bool stop_on_violation = true;
};

// Random-instance sweep over every inequality. Instance i draws from its own
// substream of the seed. Reports are ordered by (instance, t).
inline std::vector<BoundReport> verify_sweep(const SweepConfig& cfg) {
  detail::require(cfg.count >= 1, "verify_sweep needs count >= 1");
  detail::require(!cfg.t_grid.empty(), "verify_sweep needs a t grid");
  for (double t : cfg.t_grid) {
    detail::require(t > 0.0, "verify_sweep needs positive horizons");
  }
  const double beta = hill_kertz_cached(cfg.precise_n).beta_n;
  std::vector<BoundReport> out;
  for (std::int64_t i = 0; i < cfg.count; ++i) {
    UniformSource u(Xoshiro256::substream(cfg.seed, static_cast<std::uint64_t>(i)));
    const FiniteDist d = random_instance(u);
    for (double t : cfg.t_grid) {
      BoundReport rep = evaluate_bounds(d, t, beta, cfg.precise_n);
      if (rep.violated && cfg.stop_on_violation) {
        throw BoundViolation(std::move(rep));
      }
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace pprophet

#endif  // PPROPHET_BOUNDS_HPP_
