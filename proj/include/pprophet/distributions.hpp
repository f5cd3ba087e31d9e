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

#ifndef PPROPHET_DISTRIBUTIONS_HPP_
#define PPROPHET_DISTRIBUTIONS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pprophet/common.hpp"

namespace pprophet {

// Whether a distribution is used as the law of an observation X. Observation
// laws must not put all of their mass at zero.
enum class Law { kObservation, kGeneral };

// A nonnegative, finitely supported probability distribution with strictly
// ascending atoms and strictly positive probabilities.
class FiniteDist {
 public:
  // Sorts, merges near-duplicate atoms, drops zero weights and normalizes.
  static FiniteDist from_weights(std::span<const double> atoms,
                                 std::span<const double> weights,
                                 Law law = Law::kObservation);

  // Like from_weights, but the input must already sum to one within 1e-9.
  static FiniteDist from_probs(std::span<const double> atoms,
                               std::span<const double> probs,
                               Law law = Law::kObservation);

  static FiniteDist point_mass(double atom, Law law = Law::kObservation) {
    const double one = 1.0;
    return from_weights(std::span(&atom, 1), std::span(&one, 1), law);
  }

  const std::vector<double>& atoms() const { return atoms_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return atoms_.size(); }
  double atom(std::size_t i) const { return atoms_[i]; }
  double prob(std::size_t i) const { return probs_[i]; }
  double min_atom() const { return atoms_.front(); }
  double max_atom() const { return atoms_.back(); }

  double mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < size(); ++i) m += atoms_[i] * probs_[i];
    return m;
  }

  // P(X >= c).
  double tail_prob(double c) const {
    double r = 0.0;
    for (std::size_t i = size(); i-- > 0 && atoms_[i] >= c;) r += probs_[i];
    return r;
  }

  bool operator==(const FiniteDist&) const = default;

 private:
  FiniteDist(std::vector<double> atoms, std::vector<double> probs)
      : atoms_(std::move(atoms)), probs_(std::move(probs)) {}

  std::vector<double> atoms_;
  std::vector<double> probs_;
};

// r_k = P(X >= a_k) for k = 1..n (stored 0-based), mu_k = E(X - a_k)^+ for
// k = 0..n with a_0 = 0, and the conditional tail means E_k = E(X | X >= a_k).
struct TailStats {
  std::vector<double> atoms;  // a_1..a_n
  std::vector<double> r;      // r_1..r_n
  std::vector<double> mu;     // mu_0..mu_n
  std::vector<double> etail;  // E_1..E_n

  std::size_t size() const { return atoms.size(); }
  // a_k with a_0 = 0, k in 0..n.
  double a(std::size_t k) const { return k == 0 ? 0.0 : atoms[k - 1]; }
};

namespace detail {

inline double merge_tolerance(double max_atom) {
  return 1e-12 * (1.0 + max_atom);
}

// Rescales probs so that their left-to-right sum is exactly 1.0. Leaves an
// already exact vector untouched so normalization is idempotent. The
// correction goes to the largest entry when that lands on 1.0, otherwise to
// entries from the back; a walk on the final summand cannot step over 1.0.
inline void normalize_exact(std::vector<double>& probs) {
  auto sum = [&] { return std::accumulate(probs.begin(), probs.end(), 0.0); };
  double s = sum();
  if (s == 1.0) return;
  for (double& p : probs) p /= s;
  auto walk = [&](double& x) {
    const double saved = x;
    s = sum();
    if (s == 1.0) return true;
    x += 1.0 - s;
    for (int iter = 0; iter < 64 && x > 0.0; ++iter) {
      s = sum();
      if (s == 1.0) return true;
      x = std::nextafter(x, s < 1.0 ? 2.0 : 0.0);
    }
    x = saved;
    return false;
  };
  if (walk(*std::max_element(probs.begin(), probs.end()))) return;
  for (auto it = probs.rbegin(); it != probs.rend(); ++it) {
    if (walk(*it)) return;
  }
}

}  // namespace detail

inline FiniteDist FiniteDist::from_weights(std::span<const double> atoms,
                                           std::span<const double> weights,
                                           Law law) {
  detail::require(!atoms.empty(), "distribution needs at least one atom");
  detail::require(atoms.size() == weights.size(),
                  "atoms and weights differ in length");
  double total = 0.0;
  std::vector<std::pair<double, double>> pts;
  pts.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    detail::require_finite(atoms[i], "atom");
    detail::require_finite(weights[i], "weight");
    detail::require(atoms[i] >= 0.0, "negative atom");
    detail::require(weights[i] >= 0.0, "negative weight");
    total += weights[i];
    if (weights[i] > 0.0) pts.emplace_back(atoms[i], weights[i]);
  }
  detail::require(total > 0.0, "total weight must be positive");
  std::sort(pts.begin(), pts.end());

  const double tol = detail::merge_tolerance(pts.back().first);
  std::vector<double> a;
  std::vector<double> p;
  for (const auto& [x, w] : pts) {
    if (!a.empty() && x - a.back() <= tol) {
      p.back() += w;
    } else {
      a.push_back(x);
      p.push_back(w);
    }
  }
  if (law == Law::kObservation) {
    detail::require(!(a.size() == 1 && a.front() == 0.0),
                    "observation law must not be the point mass at zero");
  }
  detail::normalize_exact(p);
  return FiniteDist(std::move(a), std::move(p));
}

inline FiniteDist FiniteDist::from_probs(std::span<const double> atoms,
                                         std::span<const double> probs,
                                         Law law) {
  double s = 0.0;
  for (double q : probs) s += q;
  detail::require(std::abs(s - 1.0) <= 1e-9,
                  "probabilities must sum to 1 within 1e-9");
  return from_weights(atoms, probs, law);
}

inline FiniteDist make_finite_dist(std::span<const double> atoms,
                                   std::span<const double> weights,
                                   Law law = Law::kObservation) {
  return FiniteDist::from_weights(atoms, weights, law);
}

inline FiniteDist make_finite_dist(const std::vector<double>& atoms,
                                   const std::vector<double>& weights,
                                   Law law = Law::kObservation) {
  return FiniteDist::from_weights(atoms, weights, law);
}

// Backward recursion mu_{k-1} = mu_k + r_k (a_k - a_{k-1}), starting at
// mu_n = 0.
inline TailStats tail_stats(const FiniteDist& d) {
  const std::size_t n = d.size();
  TailStats s;
  s.atoms = d.atoms();
  s.r.assign(n, 0.0);
  s.mu.assign(n + 1, 0.0);
  s.etail.assign(n, 0.0);
  double acc = 0.0;
  for (std::size_t k = n; k-- > 0;) {
    acc += d.prob(k);
    s.r[k] = acc;
  }
  // a_1 is the smallest atom, so r_1 = 1 up to roundoff.
  s.r[0] = 1.0;
  for (std::size_t k = n; k >= 1; --k) {
    s.mu[k - 1] = s.mu[k] + s.r[k - 1] * (s.a(k) - s.a(k - 1));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    s.etail[k - 1] = s.a(k) + s.mu[k] / s.r[k - 1];
  }
  return s;
}

// E(X - c)^+.
inline double mean_excess(const FiniteDist& d, double c) {
  detail::require(c >= 0.0, "mean_excess threshold must be nonnegative");
  double m = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.atom(i) > c) m += d.prob(i) * (d.atom(i) - c);
  }
  return m;
}

// The unique c >= 0 with E(X - c)^+ = c * alpha. On [a_{k-1}, a_k] the mean
// excess equals mu_k + r_k (a_k - c), so the root is closed form on the
// segment where the sign change happens.
inline double solve_c_alpha(const FiniteDist& d, double alpha) {
  detail::require(alpha > 0.0 && std::isfinite(alpha),
                  "solve_c_alpha needs alpha > 0");
  detail::require(d.max_atom() > 0.0,
                  "solve_c_alpha needs a law that is not the point mass at 0");
  const TailStats s = tail_stats(d);
  const std::size_t n = s.size();
  for (std::size_t k = 1; k <= n; ++k) {
    if (s.mu[k] < s.a(k) * alpha) {
      const double rk = s.r[k - 1];
      return (s.mu[k] + rk * s.a(k)) / (rk + alpha);
    }
  }
  // Unreachable: mu_n = 0 < a_n * alpha.
  throw NumericalError("solve_c_alpha: no crossing segment found");
}

// Sweeps the mass on [c, dd] to the endpoints, preserving the mean.
inline FiniteDist balayage(const FiniteDist& d, double c, double dd) {
  detail::require(c >= 0.0 && dd >= 0.0, "balayage endpoints must be >= 0");
  detail::require(c < dd, "balayage needs c < d");
  std::vector<double> atoms;
  std::vector<double> weights;
  double at_c = 0.0;
  double at_d = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double x = d.atom(i);
    const double p = d.prob(i);
    if (x >= c && x <= dd) {
      at_c += p * (dd - x) / (dd - c);
      at_d += p * (x - c) / (dd - c);
    } else {
      atoms.push_back(x);
      weights.push_back(p);
    }
  }
  atoms.push_back(c);
  weights.push_back(at_c);
  atoms.push_back(dd);
  weights.push_back(at_d);
  return FiniteDist::from_weights(atoms, weights, Law::kGeneral);
}

}  // namespace pprophet

#endif  // PPROPHET_DISTRIBUTIONS_HPP_
