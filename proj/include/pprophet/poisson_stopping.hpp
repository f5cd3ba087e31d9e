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

#ifndef PPROPHET_POISSON_STOPPING_HPP_
#define PPROPHET_POISSON_STOPPING_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "pprophet/common.hpp"
#include "pprophet/distributions.hpp"

namespace pprophet {

// Parameters of V on [t_{k-1}*, t_k*]:
//   V(t) = E_k - (E_k - a_{k-1}) exp(-r_k (t - t_{k-1}*)).
struct ValueSegment {
  double etail = 0.0;       // E_k
  double lower_atom = 0.0;  // a_{k-1}, with a_0 = 0
  double rate = 0.0;        // r_k
  double start = 0.0;       // t_{k-1}*
};

// Closed-form optimal stopping value under unit-rate Poisson arrivals for a
// finitely supported law. Immutable once built.
class ValueProfile {
 public:
  explicit ValueProfile(FiniteDist dist);

  const FiniteDist& dist() const { return dist_; }
  const TailStats& stats() const { return stats_; }
  // t_1*..t_{n-1}*; atom a_i (1-based) is accepted iff remaining <= t_i*.
  const std::vector<double>& tstar() const { return tstar_; }
  // t_k* for k = 0..n, with t_0* = 0 and t_n* = +inf.
  double critical_time(std::size_t k) const {
    if (k == 0) return 0.0;
    if (k >= dist_.size()) return kInfinity;
    return tstar_[k - 1];
  }
  const std::vector<ValueSegment>& segments() const { return segments_; }

  double value(double t) const;

 private:
  FiniteDist dist_;
  TailStats stats_;
  std::vector<double> tstar_;
  std::vector<ValueSegment> segments_;
};

inline ValueProfile::ValueProfile(FiniteDist dist)
    : dist_(std::move(dist)), stats_(tail_stats(dist_)) {
  const std::size_t n = dist_.size();
  double prev = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    segments_.push_back(
        ValueSegment{stats_.etail[k - 1], stats_.a(k - 1), stats_.r[k - 1],
                     prev});
    if (k == n) break;
    // log(mu_{k-1}/mu_k) with mu_{k-1} - mu_k = r_k (a_k - a_{k-1}).
    const double gap = stats_.r[k - 1] * (stats_.a(k) - stats_.a(k - 1));
    const double t = prev + std::log1p(gap / stats_.mu[k]) / stats_.r[k - 1];
    tstar_.push_back(t);
    prev = t;
  }
}

inline double ValueProfile::value(double t) const {
  detail::require(t >= 0.0, "negative horizon");
  // Segment k covers [t_{k-1}*, t_k*]; pick the last segment starting <= t.
  const auto it = std::upper_bound(tstar_.begin(), tstar_.end(), t);
  const auto& seg = segments_[static_cast<std::size_t>(it - tstar_.begin())];
  if (std::isinf(t)) return seg.etail;
  return seg.lower_atom + (seg.etail - seg.lower_atom) *
                              detail::one_minus_exp_neg(seg.rate *
                                                        (t - seg.start));
}

inline ValueProfile critical_times(const FiniteDist& d) {
  return ValueProfile(d);
}

inline double optimal_value(const ValueProfile& profile, double t) {
  return profile.value(t);
}

// M(t) = sum_i (a_i - a_{i-1}) (1 - exp(-r_i t)).
inline double expected_max(const FiniteDist& d, double t) {
  detail::require(t >= 0.0, "negative horizon");
  double m = 0.0;
  double r = 1.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    m += (d.atom(i) - prev) * detail::one_minus_exp_neg(r * t);
    r -= d.prob(i);
    prev = d.atom(i);
  }
  return m;
}

// E(X_s^* - c)^+ where X_s^* is the maximum of the observations arriving by
// time s (zero when there are none). P(X_s^* > z) = 1 - exp(-s P(X > z)).
inline double prophet_mean_excess(const FiniteDist& d, double s, double c) {
  detail::require(s >= 0.0, "negative horizon");
  detail::require(c >= 0.0, "negative threshold");
  double m = 0.0;
  double r = 1.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double lo = std::max(prev, c);
    if (d.atom(i) > lo) m += (d.atom(i) - lo) * detail::one_minus_exp_neg(r * s);
    r -= d.prob(i);
    prev = d.atom(i);
  }
  return m;
}

inline constexpr double kOdeDefaultTol = 1e-10;

// V' = E(X - V)^+, V(0) = 0, integrated segment by segment. While V lies in
// [a_{k-1}, a_k) the right side is r_k (E_k - V), so each piece is an exact
// exponential relaxation towards E_k.
inline double value_ode(const FiniteDist& d, double t) {
  detail::require(t >= 0.0, "negative horizon");
  const TailStats s = tail_stats(d);
  const std::size_t n = s.size();
  double v = 0.0;
  double elapsed = 0.0;
  std::size_t k = 1;
  while (k < n && v >= s.a(k)) ++k;
  while (true) {
    const double rk = s.r[k - 1];
    const double ek = s.etail[k - 1];
    if (k == n) {
      return ek - (ek - v) * std::exp(-rk * (t - elapsed));
    }
    // Time to climb from v to a_k: (1/r_k) log((E_k - v)/(E_k - a_k)).
    const double to_next = std::log((ek - v) * rk / s.mu[k]) / rk;
    if (elapsed + to_next >= t) {
      return ek - (ek - v) * std::exp(-rk * (t - elapsed));
    }
    elapsed += to_next;
    v = s.a(k);
    ++k;
  }
}

// General mean-excess callback: classical RK4 with step doubling error
// control. The callback must be nonincreasing and convex in its argument.
inline double value_ode(const std::function<double(double)>& excess, double t,
                        double abs_tol = kOdeDefaultTol) {
  detail::require(t >= 0.0, "negative horizon");
  detail::require(abs_tol > 0.0, "abs_tol must be positive");
  auto rhs = [&excess](double v) {
    const double y = excess(v);
    if (!std::isfinite(y)) throw DomainError("non-finite mean excess");
    return y;
  };
  auto rk4 = [&rhs](double v, double h) {
    const double k1 = rhs(v);
    const double k2 = rhs(v + 0.5 * h * k1);
    const double k3 = rhs(v + 0.5 * h * k2);
    const double k4 = rhs(v + h * k3);
    return v + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };
  double v = 0.0;
  double s = 0.0;
  double h = std::min(t, 1e-3);
  const double per_time = abs_tol / std::max(t, 1.0);
  int steps = 0;
  while (s < t) {
    if (++steps > 50'000'000) throw NumericalError("value_ode: step limit");
    h = std::min(h, t - s);
    const double full = rk4(v, h);
    const double half = rk4(rk4(v, 0.5 * h), 0.5 * h);
    const double err = std::abs(half - full) / 15.0;
    if (err <= per_time * h || h < 1e-14) {
      v = half + (half - full) / 15.0;
      s += h;
      const double grow = err > 0.0 ? 0.9 * std::pow(per_time * h / err, 0.2)
                                    : 4.0;
      h *= std::clamp(grow, 0.2, 4.0);
    } else {
      h *= std::clamp(0.9 * std::pow(per_time * h / err, 0.25), 0.1, 0.5);
    }
  }
  return v;
}

namespace detail {

inline bool at_least_with_tie(double x, double bound) {
  return x >= bound - kTieTolerance * (1.0 + std::abs(bound));
}

}  // namespace detail

// Accept iff value >= V(remaining); ties (within kTieTolerance, relative) go
// to acceptance. For an atom a_i this is remaining <= t_i* or i = n, which is
// evaluated directly so that the boundary is not subject to roundoff in V.
inline bool optimal_accept(const ValueProfile& profile, double value,
                           double remaining) {
  detail::require(remaining >= 0.0, "negative remaining time");
  const auto& atoms = profile.dist().atoms();
  const double tol = detail::merge_tolerance(atoms.back());
  const auto it = std::lower_bound(atoms.begin(), atoms.end(), value - tol);
  if (it != atoms.end() && std::abs(*it - value) <= tol) {
    const auto i = static_cast<std::size_t>(it - atoms.begin()) + 1;
    if (i == atoms.size()) return true;
    return detail::at_least_with_tie(profile.critical_time(i), remaining);
  }
  return detail::at_least_with_tie(value, profile.value(remaining));
}

// Accept-or-reject rule given the observed value and the time remaining.
using AcceptanceFunction = std::function<bool(double value, double remaining)>;

struct OptimalPolicy {
  ValueProfile profile;
};
struct ThresholdPolicy {
  double c = 0.0;
};
struct CustomPolicy {
  AcceptanceFunction accept;
};

// A stopping policy for the Poisson model over a fixed horizon.
struct PolicySpec {
  std::variant<OptimalPolicy, ThresholdPolicy, CustomPolicy> kind;
  double horizon = 0.0;

  static PolicySpec optimal(const FiniteDist& d, double horizon) {
    detail::require(horizon > 0.0, "policy horizon must be positive");
    return PolicySpec{OptimalPolicy{ValueProfile(d)}, horizon};
  }
  static PolicySpec threshold(double c, double horizon) {
    detail::require(c >= 0.0, "threshold must be nonnegative");
    detail::require(horizon > 0.0, "policy horizon must be positive");
    return PolicySpec{ThresholdPolicy{c}, horizon};
  }
  static PolicySpec custom(AcceptanceFunction f, double horizon) {
    detail::require(horizon > 0.0, "policy horizon must be positive");
    return PolicySpec{CustomPolicy{std::move(f)}, horizon};
  }

  bool accept(double value, double remaining) const {
    return std::visit(
        [&](const auto& p) -> bool {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, OptimalPolicy>) {
            return optimal_accept(p.profile, value, remaining);
          } else if constexpr (std::is_same_v<P, ThresholdPolicy>) {
            return value >= p.c;
          } else {
            return p.accept(value, remaining);
          }
        },
        kind);
  }
};

}  // namespace pprophet

#endif  // PPROPHET_POISSON_STOPPING_HPP_
