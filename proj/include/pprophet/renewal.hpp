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

#ifndef PPROPHET_RENEWAL_HPP_
#define PPROPHET_RENEWAL_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pprophet/common.hpp"
#include "pprophet/distributions.hpp"

namespace pprophet {

// Law of the inter-arrival time T on the positive integers.
class RenewalDist {
 public:
  static RenewalDist from_weights(const std::vector<std::int64_t>& support,
                                  const std::vector<double>& weights) {
    detail::require(!support.empty(), "renewal law needs at least one value");
    detail::require(support.size() == weights.size(),
                    "support and weights differ in length");
    std::vector<std::pair<std::int64_t, double>> pts;
    double total = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) {
      detail::require(support[i] >= 1, "renewal times must be >= 1");
      detail::require(weights[i] >= 0.0 && std::isfinite(weights[i]),
                      "renewal weights must be finite and >= 0");
      total += weights[i];
      if (weights[i] > 0.0) pts.emplace_back(support[i], weights[i]);
    }
    detail::require(total > 0.0, "renewal weights must have positive sum");
    std::sort(pts.begin(), pts.end());
    RenewalDist out;
    for (const auto& [k, w] : pts) {
      if (!out.support_.empty() && out.support_.back() == k) {
        out.probs_.back() += w;
      } else {
        out.support_.push_back(k);
        out.probs_.push_back(w);
      }
    }
    detail::normalize_exact(out.probs_);
    return out;
  }

  static RenewalDist deterministic(std::int64_t k) {
    return from_weights({k}, {1.0});
  }

  const std::vector<std::int64_t>& support() const { return support_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return support_.size(); }

 private:
  RenewalDist() = default;
  std::vector<std::int64_t> support_;
  std::vector<double> probs_;
};

// Geometric gaps P(T = k) = (1-p)^{k-1} p, truncated at the horizon n. The
// mass beyond n sits at n + 1, which never produces an observation in [1, n].
inline RenewalDist geometric_renewal(double p, std::int64_t n) {
  detail::require(p > 0.0 && p <= 1.0, "geometric_renewal needs p in (0,1]");
  detail::require(n >= 1, "geometric_renewal needs n >= 1");
  std::vector<std::int64_t> support;
  std::vector<double> weights;
  double surv = 1.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    support.push_back(k);
    weights.push_back(surv * p);
    surv *= 1.0 - p;
  }
  support.push_back(n + 1);
  weights.push_back(surv);
  return RenewalDist::from_weights(support, weights);
}

// Backward-induction table over renewal indices: gamma[j-1] is the optimal
// expected reward given that j is a renewal time, continuation[j-1] the
// value of rejecting there.
struct GammaTable {
  std::int64_t horizon = 0;
  std::vector<double> gamma;
  std::vector<double> continuation;
};

inline GammaTable renewal_gamma_table(const RenewalDist& T, const FiniteDist& d,
                                      std::int64_t n) {
  detail::require(n >= 1, "renewal horizon must be >= 1");
  GammaTable tab;
  tab.horizon = n;
  const auto nn = static_cast<std::size_t>(n);
  tab.gamma.assign(nn, 0.0);
  tab.continuation.assign(nn, 0.0);
  for (std::int64_t j = n; j >= 1; --j) {
    double cont = 0.0;
    for (std::size_t s = 0; s < T.size(); ++s) {
      const std::int64_t next = j + T.support()[s];
      if (next > n) break;
      cont += T.probs()[s] * tab.gamma[static_cast<std::size_t>(next - 1)];
    }
    const auto idx = static_cast<std::size_t>(j - 1);
    tab.continuation[idx] = cont;
    // E(X v c) = c + E(X - c)^+.
    tab.gamma[idx] = cont + mean_excess(d, cont);
  }
  return tab;
}

// V_n = sum_k P(T_1 = k, k <= n) gamma_k.
inline double renewal_optimal_value(const RenewalDist& T, const FiniteDist& d,
                                    std::int64_t n) {
  const GammaTable tab = renewal_gamma_table(T, d, n);
  double v = 0.0;
  for (std::size_t s = 0; s < T.size(); ++s) {
    const std::int64_t k = T.support()[s];
    if (k > n) break;
    v += T.probs()[s] * tab.gamma[static_cast<std::size_t>(k - 1)];
  }
  return v;
}

// M_n = sum_i (a_i - a_{i-1}) P(max >= a_i). P(all observations < a_i) comes
// from q_j = F * sum_k P(T = k) (q_{j+k} if j + k <= n else 1), with
// F = P(X < a_i), the half-open convention.
inline double renewal_prophet_value(const RenewalDist& T, const FiniteDist& d,
                                    std::int64_t n) {
  detail::require(n >= 1, "renewal horizon must be >= 1");
  const auto nn = static_cast<std::size_t>(n);
  std::vector<double> q(nn + 1, 0.0);
  double m = 0.0;
  double below = 0.0;  // P(X < a_i)
  double prev = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double gap = d.atom(i) - prev;
    const double f = below;
    if (gap > 0.0) {
      auto tail = [&](std::int64_t from) {
        double acc = 0.0;
        for (std::size_t s = 0; s < T.size(); ++s) {
          const std::int64_t next = from + T.support()[s];
          acc += T.probs()[s] *
                 (next <= n ? q[static_cast<std::size_t>(next)] : 1.0);
        }
        return acc;
      };
      for (std::int64_t j = n; j >= 1; --j) {
        q[static_cast<std::size_t>(j)] = f * tail(j);
      }
      m += gap * (1.0 - tail(0));
    }
    below += d.prob(i);
    prev = d.atom(i);
  }
  return m;
}

struct RenewalValues {
  double prophet = 0.0;  // M_n
  double optimal = 0.0;  // V_n
};

// n i.i.d. observations from y: the classical finite-horizon problem.
inline RenewalValues iid_values(const FiniteDist& y, std::int64_t n) {
  detail::require(n >= 1, "horizon must be >= 1");
  double v = 0.0;
  for (std::int64_t i = 0; i < n; ++i) v += mean_excess(y, v);
  double m = 0.0;
  double below = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    m += (y.atom(i) - prev) *
         (1.0 - std::pow(below, static_cast<double>(n)));
    below += y.prob(i);
    prev = y.atom(i);
  }
  return RenewalValues{m, v};
}

// Binomial process: each time 1..n is a renewal independently with
// probability p, so the Y_j are i.i.d. with law p F + (1-p) delta_0.
inline RenewalValues binomial_process_values(double p, const FiniteDist& d,
                                             std::int64_t n) {
  detail::require(p > 0.0 && p <= 1.0, "binomial process needs p in (0,1]");
  std::vector<double> atoms = d.atoms();
  std::vector<double> weights;
  for (double q : d.probs()) weights.push_back(p * q);
  atoms.push_back(0.0);
  weights.push_back(1.0 - p);
  return iid_values(FiniteDist::from_weights(atoms, weights, Law::kGeneral), n);
}

// Two-gap renewal law P(T=1) = p = 1 - P(T=n) with X on {eps, 1},
// P(X = 1) = pi, and eps chosen so that p E X = eps.
struct Counterexample {
  RenewalDist gaps;
  FiniteDist obs;
  double epsilon = 0.0;
};

inline Counterexample counterexample_instance(std::int64_t n, double p,
                                              double pi) {
  detail::require(n >= 2, "counterexample needs n >= 2");
  detail::require(p > 0.0 && p < 1.0, "counterexample needs p in (0,1)");
  detail::require(pi > 0.0 && pi < 1.0, "counterexample needs pi in (0,1)");
  const double eps = p * pi / (1.0 - p * (1.0 - pi));
  return Counterexample{RenewalDist::from_weights({1, n}, {p, 1.0 - p}),
                        FiniteDist::from_weights(std::vector<double>{eps, 1.0},
                                                 std::vector<double>{1.0 - pi, pi}),
                        eps};
}

struct CounterexampleMetrics {
  double ratio = 0.0;       // R_n = M_n / V_n
  double difference = 0.0;  // D_n = M_n - V_n
  double optimal = 0.0;     // V_n = E X
  double prophet = 0.0;     // M_n
  double epsilon = 0.0;
};

inline CounterexampleMetrics counterexample_metrics(std::int64_t n, double p,
                                                    double pi) {
  detail::require(n >= 2, "counterexample needs n >= 2");
  detail::require(p > 0.0 && p < 1.0, "counterexample needs p in (0,1)");
  detail::require(pi > 0.0 && pi < 1.0, "counterexample needs pi in (0,1)");
  const double q = p * (1.0 - pi);
  const double bracket =
      (1.0 - std::pow(q, static_cast<double>(n))) / (1.0 - q) - 1.0;
  CounterexampleMetrics out;
  out.epsilon = p * pi / (1.0 - q);
  out.optimal = pi / (1.0 - q);
  out.ratio = 1.0 + p * (1.0 - p) * bracket;
  out.difference = p * (1.0 - p) * pi / (1.0 - q) * bracket;
  out.prophet = out.optimal + out.difference;
  return out;
}

// lim_{n -> inf} D_n = p^2 (1-p) pi (1-pi) / (1 - p(1-pi))^2.
inline double counterexample_difference_limit(double p, double pi) {
  const double q = 1.0 - p * (1.0 - pi);
  return p * p * (1.0 - p) * pi * (1.0 - pi) / (q * q);
}

// c_n = 1 + (2/(n+1))^{2/(n-1)} (n-1)/(n+1), the supremum of R_n over
// the two-gap family.
inline double c_n(std::int64_t n) {
  detail::require(n >= 2, "c_n needs n >= 2");
  const auto nd = static_cast<double>(n);
  return 1.0 + std::pow(2.0 / (nd + 1.0), 2.0 / (nd - 1.0)) *
                   ((nd - 1.0) / (nd + 1.0));
}

// The p maximizing 1 + p^2 - p^{n+1}.
inline double c_n_maximizer(std::int64_t n) {
  detail::require(n >= 2, "c_n needs n >= 2");
  const auto nd = static_cast<double>(n);
  return std::pow(2.0 / (nd + 1.0), 1.0 / (nd - 1.0));
}

}  // namespace pprophet

#endif  // PPROPHET_RENEWAL_HPP_
