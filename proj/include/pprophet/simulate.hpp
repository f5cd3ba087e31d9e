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

#ifndef PPROPHET_SIMULATE_HPP_
#define PPROPHET_SIMULATE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

#include "pprophet/common.hpp"
#include "pprophet/distributions.hpp"
#include "pprophet/poisson_stopping.hpp"
#include "pprophet/rng.hpp"

namespace pprophet {

struct SimConfig {
  double horizon = 1.0;
  std::int64_t paths = 100'000;
  std::uint64_t seed = 0;
  bool antithetic = false;
  // Worker threads; results do not depend on this value.
  int threads = 1;
};

struct SimResult {
  double estimate = 0.0;
  double std_error = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::int64_t paths = 0;
};

struct Arrival {
  double time = 0.0;
  double value = 0.0;
};

// Inverse-CDF sampler for a FiniteDist.
class AtomSampler {
 public:
  explicit AtomSampler(const FiniteDist& d) : atoms_(d.atoms()) {
    double acc = 0.0;
    for (double p : d.probs()) {
      acc += p;
      cumulative_.push_back(acc);
    }
  }

  double operator()(UniformSource& u) const {
    const double x = u();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
    const auto i = std::min<std::size_t>(
        static_cast<std::size_t>(it - cumulative_.begin()), atoms_.size() - 1);
    return atoms_[i];
  }

 private:
  std::vector<double> atoms_;
  std::vector<double> cumulative_;
};

namespace detail {

inline void validate(const SimConfig& cfg) {
  require(cfg.horizon > 0.0 && std::isfinite(cfg.horizon),
          "simulation horizon must be positive");
  require(cfg.paths >= 1, "simulation needs at least one path");
  require(cfg.threads >= 1, "simulation needs at least one thread");
}

inline UniformSource path_source(const SimConfig& cfg, std::int64_t path) {
  const auto p = static_cast<std::uint64_t>(path);
  if (cfg.antithetic) {
    return UniformSource(Xoshiro256::substream(cfg.seed, p / 2), (p & 1) != 0);
  }
  return UniformSource(Xoshiro256::substream(cfg.seed, p));
}

inline std::int64_t effective_paths(const SimConfig& cfg) {
  return cfg.antithetic ? 2 * ((cfg.paths + 1) / 2) : cfg.paths;
}

// Fills out[i] = fn(i, source_i) for every path, possibly in parallel. Each
// path owns its substream, so the output is independent of the thread count.
template <typename Fn>
void for_each_path(const SimConfig& cfg, std::int64_t paths, Fn&& fn) {
  const int workers = static_cast<int>(
      std::min<std::int64_t>(cfg.threads, std::max<std::int64_t>(paths, 1)));
  auto run = [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i) {
      UniformSource src = path_source(cfg, i);
      fn(i, src);
    }
  };
  if (workers <= 1) {
    run(0, paths);
    return;
  }
  std::vector<std::thread> pool;
  const std::int64_t chunk = (paths + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = w * chunk;
    const std::int64_t hi = std::min(paths, lo + chunk);
    if (lo < hi) pool.emplace_back(run, lo, hi);
  }
  for (auto& th : pool) th.join();
}

// Mean and standard error, summed in path order. Antithetic pairs are
// averaged first and the pair means treated as the i.i.d. sample.
inline SimResult summarize(const std::vector<double>& rewards,
                           bool antithetic) {
  std::vector<double> sample;
  if (antithetic) {
    sample.reserve(rewards.size() / 2);
    for (std::size_t i = 0; i + 1 < rewards.size(); i += 2) {
      sample.push_back(0.5 * (rewards[i] + rewards[i + 1]));
    }
  }
  const std::vector<double>& xs = antithetic ? sample : rewards;
  const auto n = static_cast<double>(xs.size());
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / n;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double var = xs.size() > 1 ? ss / (n - 1.0) : 0.0;
  const double se = std::sqrt(var / n);
  SimResult r;
  r.estimate = mean;
  r.std_error = se;
  r.ci_lo = mean - 1.959963984540054 * se;
  r.ci_hi = mean + 1.959963984540054 * se;
  r.paths = static_cast<std::int64_t>(rewards.size());
  return r;
}

}  // namespace detail

// Arrivals of a unit-rate Poisson process on [0, t], each carrying an
// independent draw from d. Gaps are sampled as -log U.
inline std::vector<Arrival> sample_stream(const AtomSampler& sampler, double t,
                                          UniformSource& u) {
  detail::require(t > 0.0, "sample_stream needs t > 0");
  std::vector<Arrival> out;
  double s = u.exponential();
  while (s <= t) {
    out.push_back(Arrival{s, sampler(u)});
    s += u.exponential();
  }
  return out;
}

inline std::vector<Arrival> sample_stream(const FiniteDist& d, double t,
                                          UniformSource& u) {
  return sample_stream(AtomSampler(d), t, u);
}

namespace detail {

inline double prophet_reward(const std::vector<Arrival>& stream) {
  double best = 0.0;
  for (const auto& a : stream) best = std::max(best, a.value);
  return best;
}

inline double policy_reward(const PolicySpec& policy,
                            const std::vector<Arrival>& stream) {
  for (const auto& a : stream) {
    if (policy.accept(a.value, policy.horizon - a.time)) return a.value;
  }
  return 0.0;
}

}  // namespace detail

// Monte Carlo estimate of M(t); an empty path contributes zero.
inline SimResult estimate_prophet(const FiniteDist& d, const SimConfig& cfg) {
  detail::validate(cfg);
  const AtomSampler sampler(d);
  const std::int64_t paths = detail::effective_paths(cfg);
  std::vector<double> rewards(static_cast<std::size_t>(paths));
  detail::for_each_path(cfg, paths, [&](std::int64_t i, UniformSource& u) {
    rewards[static_cast<std::size_t>(i)] =
        detail::prophet_reward(sample_stream(sampler, cfg.horizon, u));
  });
  return detail::summarize(rewards, cfg.antithetic);
}

// Monte Carlo value of a policy: the first accepted value, or zero.
inline SimResult estimate_policy(const FiniteDist& d, const PolicySpec& policy,
                                 const SimConfig& cfg) {
  detail::validate(cfg);
  detail::require(policy.horizon == cfg.horizon,
                  "policy horizon differs from simulation horizon");
  const AtomSampler sampler(d);
  const std::int64_t paths = detail::effective_paths(cfg);
  std::vector<double> rewards(static_cast<std::size_t>(paths));
  detail::for_each_path(cfg, paths, [&](std::int64_t i, UniformSource& u) {
    rewards[static_cast<std::size_t>(i)] =
        detail::policy_reward(policy, sample_stream(sampler, cfg.horizon, u));
  });
  return detail::summarize(rewards, cfg.antithetic);
}

struct PathwiseComparison {
  SimResult prophet;
  SimResult policy;
  std::int64_t dominance_violations = 0;  // paths with policy > prophet
};

// Prophet and policy evaluated on the same arrival streams.
inline PathwiseComparison compare_pathwise(const FiniteDist& d,
                                           const PolicySpec& policy,
                                           const SimConfig& cfg) {
  detail::validate(cfg);
  detail::require(policy.horizon == cfg.horizon,
                  "policy horizon differs from simulation horizon");
  const AtomSampler sampler(d);
  const std::int64_t paths = detail::effective_paths(cfg);
  std::vector<double> prophet(static_cast<std::size_t>(paths));
  std::vector<double> chosen(static_cast<std::size_t>(paths));
  detail::for_each_path(cfg, paths, [&](std::int64_t i, UniformSource& u) {
    const auto stream = sample_stream(sampler, cfg.horizon, u);
    prophet[static_cast<std::size_t>(i)] = detail::prophet_reward(stream);
    chosen[static_cast<std::size_t>(i)] = detail::policy_reward(policy, stream);
  });
  PathwiseComparison out;
  out.prophet = detail::summarize(prophet, cfg.antithetic);
  out.policy = detail::summarize(chosen, cfg.antithetic);
  for (std::size_t i = 0; i < prophet.size(); ++i) {
    if (chosen[i] > prophet[i]) ++out.dominance_violations;
  }
  return out;
}

struct ExcessBoundCheck {
  SimResult lhs;           // Monte Carlo E(X_s^* - c)^+
  double lhs_exact = 0.0;  // closed form of the same quantity
  double rhs = 0.0;        // s E(X - c)^+
  bool holds = false;      // lhs <= rhs + 4 stderr
};

// E(X_s^* - c)^+ <= s E(X - c)^+, with the left side simulated over a
// horizon of s (cfg.horizon is ignored).
inline ExcessBoundCheck check_excess_bound(const FiniteDist& d, double s, double c,
                                  SimConfig cfg) {
  detail::require(s > 0.0, "check_excess_bound needs s > 0");
  detail::require(c >= 0.0, "check_excess_bound needs c >= 0");
  cfg.horizon = s;
  detail::validate(cfg);
  const AtomSampler sampler(d);
  const std::int64_t paths = detail::effective_paths(cfg);
  std::vector<double> excess(static_cast<std::size_t>(paths));
  detail::for_each_path(cfg, paths, [&](std::int64_t i, UniformSource& u) {
    const double m = detail::prophet_reward(sample_stream(sampler, s, u));
    excess[static_cast<std::size_t>(i)] = std::max(m - c, 0.0);
  });
  ExcessBoundCheck out;
  out.lhs = detail::summarize(excess, cfg.antithetic);
  out.lhs_exact = prophet_mean_excess(d, s, c);
  out.rhs = s * mean_excess(d, c);
  out.holds = out.lhs.estimate <= out.rhs + 4.0 * out.lhs.std_error;
  return out;
}

}  // namespace pprophet

#endif  // PPROPHET_SIMULATE_HPP_
