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

// Command-line front end: constants, values, curves, bound checks,
// simulation and renewal computations. CSV or JSON on stdout; exit 1 on
// usage or domain errors, 2 when a bound check fails.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pprophet/json_io.hpp"
#include "pprophet/pprophet.hpp"

namespace {

using nlohmann::json;
using namespace pprophet;

constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

class Violation : public std::runtime_error {
 public:
  explicit Violation(json doc)
      : std::runtime_error("bound violated"), doc_(std::move(doc)) {}
  const json& doc() const { return doc_; }

 private:
  json doc_;
};

// "x", "x,y,z", "a..b" (integers: every value; reals: 101 points) or
// "a..b:N" (N evenly spaced points, endpoints included).
std::vector<double> parse_grid(const std::string& text, bool integer) {
  std::vector<double> out;
  for (std::string_view item : detail::split(text, ',')) {
    item = detail::trim(item);
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(integer ? static_cast<double>(parse_int(item))
                            : parse_double(item));
      continue;
    }
    std::string_view hi_text = item.substr(dots + 2);
    std::optional<std::int64_t> count;
    const std::size_t colon = hi_text.find(':');
    if (colon != std::string_view::npos) {
      count = parse_int(hi_text.substr(colon + 1));
      hi_text = hi_text.substr(0, colon);
    }
    const double lo = parse_double(item.substr(0, dots));
    const double hi = parse_double(hi_text);
    if (!(hi >= lo)) throw DomainError("range '" + std::string(item) + "' is empty");
    if (integer && !count) {
      const auto a = parse_int(item.substr(0, dots));
      const auto b = parse_int(hi_text);
      for (std::int64_t k = a; k <= b; ++k) out.push_back(static_cast<double>(k));
      continue;
    }
    const std::int64_t n = count.value_or(101);
    if (n < 1) throw DomainError("range needs at least one point");
    for (std::int64_t k = 0; k < n; ++k) {
      double x = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) /
                                        static_cast<double>(n - 1);
      if (integer) x = std::round(x);
      out.push_back(x);
    }
  }
  return out;
}

std::vector<std::int64_t> parse_int_grid(const std::string& text) {
  std::vector<std::int64_t> out;
  for (double x : parse_grid(text, true)) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

// Integer flags also accept exact floating forms such as "1e6".
const CLI::Validator kInteger(
    [](std::string& s) {
      try {
        s = std::to_string(parse_int(s));
      } catch (const DomainError& e) {
        return std::string(e.what());
      }
      return std::string();
    },
    "INT");

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PPROPHET_SEED")) {
    const std::int64_t s = parse_int(env);
    if (s < 0) throw DomainError("PPROPHET_SEED must be >= 0");
    return static_cast<std::uint64_t>(s);
  }
  return 1;
}

// Tabular result that renders as CSV or as a JSON array of row objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  void add(std::vector<json> row) { rows.push_back(std::move(row)); }

  json to_json() const {
    json arr = json::array();
    for (const auto& r : rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = r[i];
      arr.push_back(std::move(obj));
    }
    return arr;
  }

  std::string to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) os << ',';
        const json& v = r[i];
        if (v.is_number_float()) {
          os << format_double(v.get<double>());
        } else if (v.is_string()) {
          os << v.get<std::string>();
        } else {
          os << v.dump();
        }
      }
      os << '\n';
    }
    return os.str();
  }
};

json parameters_of(const CLI::App& app) {
  json p = json::object();
  for (const CLI::Option* opt : app.get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string key = opt->get_name(false, true);
    while (!key.empty() && key.front() == '-') key.erase(0, 1);
    const auto& res = opt->results();
    if (opt->get_expected_max() == 0) {
      p[key] = true;
    } else if (res.size() == 1) {
      p[key] = res.front();
    } else {
      p[key] = res;
    }
  }
  return p;
}

struct Output {
  std::string format = "json";
};

void emit(const std::string& command, const CLI::App& app, const Output& out,
          const json& result, std::optional<std::uint64_t> seed,
          const Table* table = nullptr) {
  if (out.format == "csv" && table != nullptr) {
    std::cout << table->to_csv();
    return;
  }
  json doc = {{"command", command},
              {"parameters", parameters_of(app)},
              {"result", table != nullptr ? table->to_json() : result},
              {"version", kVersion}};
  if (seed) doc["seed"] = *seed;
  std::cout << doc.dump(2) << '\n';
}

void add_format(CLI::App* app, Output& out, const std::string& def) {
  out.format = def;
  app->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

// --dist "a:w,..." or --dist-file path.json ({"atoms":[..],"probs":[..]}).
struct DistInput {
  std::string spec;
  std::string file;

  void attach(CLI::App* app, const std::string& flag = "--dist") {
    auto* a = app->add_option(flag, spec, "Distribution atom:weight,...");
    auto* b = app->add_option(flag + "-file", file, "Distribution JSON file");
    a->excludes(b);
  }

  bool given() const { return !spec.empty() || !file.empty(); }

  FiniteDist load() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw DomainError("cannot open distribution file '" + file + "'");
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw DomainError("distribution file '" + file + "': " + e.what());
      }
      return dist_from_json(j);
    }
    if (spec.empty()) throw DomainError("a distribution is required (--dist or --dist-file)");
    return parse_dist_spec(spec);
  }
};

json check_to_json(const BoundCheck& c) {
  return {{"name", c.name}, {"bound", c.bound}, {"achieved", c.achieved},
          {"margin", c.margin}, {"strict", c.strict}, {"violated", c.violated}};
}

json report_to_json(const BoundReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  return {{"instance", r.instance}, {"t", r.t}, {"prophet", r.prophet},
          {"optimal", r.optimal}, {"best_threshold", r.best_threshold},
          {"violated", r.violated}, {"checks", checks}};
}

double curve_value(const std::string& which, double t) {
  if (which == "f") return short_ratio_f(t);
  if (which == "g") return short_ratio_g(t);
  if (which == "fhat") return hat_f(t);
  if (which == "ghat") return hat_g(t);
  if (which == "long") return ratio_bound_long();
  if (which == "fcap") return std::min(short_ratio_f(t), ratio_bound_long());
  if (which == "beta") return beta_t(t);
  if (which == "gamma") return gamma_t(t);
  throw DomainError("unknown curve '" + which +
                    "' (expected f, g, fhat, ghat, long, fcap, beta, gamma)");
}

Table curve_table(const std::string& which, const std::string& grid) {
  std::vector<std::string> names;
  for (std::string_view w : detail::split(which, ',')) names.emplace_back(detail::trim(w));
  Table tab;
  tab.columns.push_back("t");
  for (const auto& n : names) {
    curve_value(n, 1.0);  // validates the name before any output
    tab.columns.push_back(n);
  }
  for (double t : parse_grid(grid, false)) {
    if (!(t > 0.0)) throw DomainError("curve horizons must be > 0");
    std::vector<json> row{t};
    for (const auto& n : names) row.emplace_back(curve_value(n, t));
    tab.add(std::move(row));
  }
  return tab;
}

int run(int argc, char** argv) {
  CLI::App app{"Prophet inequalities for observations at Poisson and renewal times"};
  app.set_version_flag("--version", std::string("pprophet ") + kVersion);
  app.require_subcommand(1);
  std::function<void()> action;

  // constants
  Output constants_out;
  std::string constants_n = "2..10";
  bool constants_alpha0 = true;
  auto* constants = app.add_subcommand("constants", "Ratio and difference constants a_n, b_n");
  constants->add_option("--n", constants_n, "Observation counts: list or range")
      ->capture_default_str();
  constants->add_flag("!--no-alpha0", constants_alpha0, "Omit the limiting constant row");
  add_format(constants, constants_out, "csv");
  constants->callback([&] {
    action = [&] {
      Table tab;
      tab.columns = {"n", "alpha_n", "beta_n", "a_n", "b_n"};
      for (std::int64_t n : parse_int_grid(constants_n)) {
        const HKConstants hk = hill_kertz_cached(n);
        tab.add({n, hk.alpha_n, hk.beta_n, hk.a_n(), hk.b_n()});
      }
      if (constants_alpha0) {
        const double a0 = alpha_zero_cached();
        tab.add({"inf", a0, 0.0, 1.0 + a0, 0.0});
      }
      emit("constants", *constants, constants_out, nullptr, std::nullopt, &tab);
    };
  });

  // value
  Output value_out;
  DistInput value_dist;
  std::string value_t = "1";
  auto* value = app.add_subcommand("value", "Optimal and prophet values over a horizon grid");
  value_dist.attach(value);
  value->add_option("--t", value_t, "Horizons: list or range")->capture_default_str();
  add_format(value, value_out, "csv");
  value->callback([&] {
    action = [&] {
      const FiniteDist d = value_dist.load();
      const ValueProfile profile(d);
      Table tab;
      tab.columns = {"t", "V_exact", "V_ode", "M", "ratio", "diff"};
      for (double t : parse_grid(value_t, false)) {
        detail::require(t > 0.0, "horizons must be > 0");
        const double v = profile.value(t);
        const double m = expected_max(d, t);
        tab.add({t, v, value_ode(d, t), m, m / v, m - v});
      }
      emit("value", *value, value_out, nullptr, std::nullopt, &tab);
    };
  });

  // threshold
  Output threshold_out;
  DistInput threshold_dist;
  double threshold_t = 1.0;
  std::optional<double> threshold_c;
  bool threshold_best = false;
  std::vector<double> threshold_minimax;
  auto* threshold = app.add_subcommand("threshold", "Single-threshold rule values");
  threshold_dist.attach(threshold);
  threshold->add_option("--t", threshold_t, "Horizon")->required();
  auto* opt_c = threshold->add_option("--c", threshold_c, "Threshold");
  auto* opt_best = threshold->add_flag("--best", threshold_best, "Best threshold over atoms");
  auto* opt_mm = threshold->add_option("--minimax", threshold_minimax,
                                       "Minimax threshold for support in [a,b]")
                     ->expected(2);
  opt_c->excludes(opt_best)->excludes(opt_mm);
  opt_best->excludes(opt_mm);
  add_format(threshold, threshold_out, "json");
  threshold->callback([&] {
    action = [&] {
      detail::require(threshold_t > 0.0, "horizon must be > 0");
      json res = {{"t", threshold_t},
                  {"gamma", gamma_t(threshold_t)},
                  {"beta", beta_t(threshold_t)}};
      std::optional<FiniteDist> d;
      if (threshold_dist.given()) d = threshold_dist.load();
      double c = 0.0;
      if (!threshold_minimax.empty()) {
        const double a = threshold_minimax[0];
        const double b = threshold_minimax[1];
        c = minimax_threshold(a, b, threshold_t);
        res["guarantee"] = minimax_guarantee(a, b, threshold_t);
        res["difference_bound"] = difference_bound(a, b, threshold_t);
      } else if (threshold_best || !threshold_c) {
        if (!d) throw DomainError("--best needs a distribution");
        c = best_threshold(*d, threshold_t).c;
      } else {
        c = *threshold_c;
      }
      res["c"] = c;
      if (d) {
        res["W"] = threshold_value(*d, c, threshold_t);
        res["V"] = ValueProfile(*d).value(threshold_t);
        res["M"] = expected_max(*d, threshold_t);
      }
      Table tab;
      tab.columns.clear();
      std::vector<json> row;
      for (const auto& [k, v] : res.items()) {
        tab.columns.push_back(k);
        row.push_back(v);
      }
      tab.add(std::move(row));
      if (threshold_out.format == "csv") {
        emit("threshold", *threshold, threshold_out, nullptr, std::nullopt, &tab);
      } else {
        emit("threshold", *threshold, threshold_out, res, std::nullopt);
      }
    };
  });

  // curve
  Output curve_out;
  std::string curve_which = "f,g,fcap";
  std::string curve_t = "0.01..5:500";
  auto* curve = app.add_subcommand("curve", "Bound curves over t");
  curve->add_option("--which", curve_which, "Comma list of f,g,fhat,ghat,long,fcap,beta,gamma")
      ->capture_default_str();
  curve->add_option("--t", curve_t, "Horizons: list or range")->capture_default_str();
  add_format(curve, curve_out, "csv");
  curve->callback([&] {
    action = [&] {
      const Table tab = curve_table(curve_which, curve_t);
      emit("curve", *curve, curve_out, nullptr, std::nullopt, &tab);
    };
  });

  // bounds
  Output bounds_out;
  std::string bounds_curve = "f,g,fcap";
  std::string bounds_grid = "0.01..5:500";
  DistInput bounds_dist;
  double bounds_t = 1.0;
  std::int64_t bounds_n = 1'000'000;
  auto* bounds = app.add_subcommand(
      "bounds", "Bound curves, or every inequality on one instance with --dist");
  bounds->add_option("--curve", bounds_curve, "Curves as for 'curve --which'")
      ->capture_default_str();
  bounds->add_option("--t-grid", bounds_grid, "Horizons for curves")->capture_default_str();
  bounds_dist.attach(bounds);
  bounds->add_option("--t", bounds_t, "Horizon for the instance check")->capture_default_str();
  bounds->add_option("--precise-n", bounds_n, "n for the precise difference bound")
      ->transform(kInteger)
      ->capture_default_str();
  add_format(bounds, bounds_out, "csv");
  bounds->callback([&] {
    action = [&] {
      if (!bounds_dist.given()) {
        const Table tab = curve_table(bounds_curve, bounds_grid);
        emit("bounds", *bounds, bounds_out, nullptr, std::nullopt, &tab);
        return;
      }
      detail::require(bounds_t > 0.0, "horizon must be > 0");
      const FiniteDist d = bounds_dist.load();
      const BoundReport rep = evaluate_bounds(
          d, bounds_t, hill_kertz_cached(bounds_n).beta_n, bounds_n);
      Table tab;
      tab.columns = {"name", "bound", "achieved", "margin", "strict", "violated"};
      for (const auto& c : rep.checks) {
        tab.add({c.name, c.bound, c.achieved, c.margin, c.strict, c.violated});
      }
      if (bounds_out.format == "csv") {
        emit("bounds", *bounds, bounds_out, nullptr, std::nullopt, &tab);
      } else {
        emit("bounds", *bounds, bounds_out, report_to_json(rep), std::nullopt);
      }
      if (rep.violated) throw Violation(report_to_json(rep));
    };
  });

  // verify
  Output verify_out;
  SweepConfig sweep;
  std::optional<std::uint64_t> verify_seed;
  std::string verify_grid;
  std::string verify_report;
  auto* verify = app.add_subcommand("verify", "Random-instance sweep of every inequality");
  verify->add_option("--count", sweep.count, "Number of random laws")
      ->transform(kInteger)->capture_default_str();
  verify->add_option("--seed", verify_seed, "Seed (default: PPROPHET_SEED or 1)");
  verify->add_option("--t-grid", verify_grid, "Horizons (default 0.1,0.5,1,2,5,10,50)");
  verify->add_option("--precise-n", sweep.precise_n, "n for the precise difference bound")
      ->transform(kInteger)
      ->capture_default_str();
  verify->add_option("--report", verify_report, "Also write the full JSON report here");
  add_format(verify, verify_out, "json");
  verify->callback([&] {
    action = [&] {
      sweep.seed = verify_seed ? *verify_seed : default_seed();
      if (!verify_grid.empty()) sweep.t_grid = parse_grid(verify_grid, false);
      sweep.stop_on_violation = false;
      const std::vector<BoundReport> reports = verify_sweep(sweep);
      std::map<std::string, json> summary;
      json violations = json::array();
      for (const auto& rep : reports) {
        if (rep.violated) violations.push_back(report_to_json(rep));
        for (const auto& c : rep.checks) {
          json& s = summary[c.name];
          if (s.is_null()) {
            s = {{"evaluated", 0}, {"violations", 0}, {"min_margin", c.margin},
                 {"strict", c.strict}};
          }
          s["evaluated"] = s["evaluated"].get<std::int64_t>() + 1;
          if (c.violated) s["violations"] = s["violations"].get<std::int64_t>() + 1;
          s["min_margin"] = std::min(s["min_margin"].get<double>(), c.margin);
        }
      }
      json checks = json::array();
      Table tab;
      tab.columns = {"check", "evaluated", "violations", "min_margin", "strict"};
      for (const auto& [name, s] : summary) {
        json row = s;
        row["check"] = name;
        checks.push_back(row);
        tab.add({name, s["evaluated"], s["violations"], s["min_margin"], s["strict"]});
      }
      json res = {{"instances", sweep.count},
                  {"horizons", sweep.t_grid},
                  {"evaluations", reports.size()},
                  {"checks", checks},
                  {"violations", violations}};
      if (!verify_report.empty()) {
        json full = json::array();
        for (const auto& rep : reports) full.push_back(report_to_json(rep));
        std::ofstream os(verify_report);
        if (!os) throw DomainError("cannot write report '" + verify_report + "'");
        os << json{{"seed", sweep.seed}, {"reports", full}}.dump(2) << '\n';
      }
      if (verify_out.format == "csv") {
        emit("verify", *verify, verify_out, nullptr, sweep.seed, &tab);
      } else {
        emit("verify", *verify, verify_out, res, sweep.seed);
      }
      if (!violations.empty()) throw Violation(violations.front());
    };
  });

  // simulate
  DistInput sim_dist;
  SimConfig sim;
  std::optional<std::uint64_t> sim_seed;
  std::string sim_policy = "optimal";
  bool sim_compare = false;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo values on Poisson arrival streams");
  sim_dist.attach(simulate);
  simulate->add_option("--t", sim.horizon, "Horizon")->required();
  simulate->add_option("--policy", sim_policy, "optimal, threshold:<c> or prophet")
      ->capture_default_str();
  simulate->add_option("--paths", sim.paths, "Number of paths")
      ->transform(kInteger)->capture_default_str();
  simulate->add_option("--seed", sim_seed, "Seed (default: PPROPHET_SEED or 1)");
  simulate->add_flag("--antithetic", sim.antithetic, "Antithetic path pairs");
  simulate->add_option("--threads", sim.threads, "Worker threads")->transform(kInteger)->capture_default_str();
  simulate->add_flag("--compare", sim_compare, "Also report the prophet on the same paths");
  simulate->callback([&] {
    action = [&] {
      sim.seed = sim_seed ? *sim_seed : default_seed();
      const FiniteDist d = sim_dist.load();
      json res;
      if (sim_policy == "prophet") {
        res = {{"policy", "prophet"},
               {"simulated", sim_result_to_json(estimate_prophet(d, sim))},
               {"exact", expected_max(d, sim.horizon)}};
      } else {
        PolicySpec policy = PolicySpec::optimal(d, sim.horizon);
        double exact = ValueProfile(d).value(sim.horizon);
        if (sim_policy.rfind("threshold:", 0) == 0) {
          const double c = parse_double(std::string_view(sim_policy).substr(10));
          policy = PolicySpec::threshold(c, sim.horizon);
          exact = threshold_value(d, c, sim.horizon);
        } else if (sim_policy != "optimal") {
          throw DomainError("unknown policy '" + sim_policy +
                            "' (expected optimal, threshold:<c> or prophet)");
        }
        res = {{"policy", sim_policy}, {"exact", exact}};
        if (sim_compare) {
          const PathwiseComparison cmp = compare_pathwise(d, policy, sim);
          res["simulated"] = sim_result_to_json(cmp.policy);
          res["prophet"] = sim_result_to_json(cmp.prophet);
          res["prophet_exact"] = expected_max(d, sim.horizon);
          res["dominance_violations"] = cmp.dominance_violations;
        } else {
          res["simulated"] = sim_result_to_json(estimate_policy(d, policy, sim));
        }
      }
      Output o;
      emit("simulate", *simulate, o, res, sim.seed);
    };
  });

  // renewal
  Output renewal_out;
  std::string renewal_T;
  DistInput renewal_dist;
  std::int64_t renewal_n = 10;
  auto* renewal = app.add_subcommand("renewal", "Discrete-time renewal model");
  renewal->require_subcommand(0, 1);
  renewal->add_option("--T", renewal_T, "Gap law gap:weight,...");
  renewal_dist.attach(renewal);
  renewal->add_option("--n", renewal_n, "Horizon")->transform(kInteger)->capture_default_str();
  add_format(renewal, renewal_out, "json");
  renewal->callback([&] {
    if (!renewal->get_subcommands().empty()) return;
    action = [&] {
      if (renewal_T.empty()) throw DomainError("renewal needs --T");
      const RenewalDist T = parse_renewal_spec(renewal_T);
      const FiniteDist d = renewal_dist.load();
      const double m = renewal_prophet_value(T, d, renewal_n);
      const double v = renewal_optimal_value(T, d, renewal_n);
      Table tab;
      tab.columns = {"n", "M_n", "V_n", "ratio", "diff"};
      tab.add({renewal_n, m, v, m / v, m - v});
      const json res = {{"n", renewal_n}, {"M_n", m}, {"V_n", v},
                        {"ratio", m / v}, {"diff", m - v}};
      if (renewal_out.format == "csv") {
        emit("renewal", *renewal, renewal_out, nullptr, std::nullopt, &tab);
      } else {
        emit("renewal", *renewal, renewal_out, res, std::nullopt);
      }
    };
  });

  std::int64_t ce_n = 5;
  double ce_p = 0.5;
  double ce_pi = 0.1;
  auto* ce = renewal->add_subcommand("counterexample",
                                     "Two-gap family: closed forms and engine cross-check");
  ce->add_option("--n", ce_n, "Horizon and long gap")
      ->transform(kInteger)->required();
  ce->add_option("--p", ce_p, "P(T = 1)")->required();
  ce->add_option("--pi", ce_pi, "P(X = 1)")->required();
  ce->callback([&] {
    action = [&] {
      const CounterexampleMetrics m = counterexample_metrics(ce_n, ce_p, ce_pi);
      json res = {{"n", ce_n}, {"p", ce_p}, {"pi", ce_pi}, {"epsilon", m.epsilon},
                  {"R_n", m.ratio}, {"D_n", m.difference}, {"M_n", m.prophet},
                  {"V_n", m.optimal},
                  {"D_limit", counterexample_difference_limit(ce_p, ce_pi)},
                  {"c_n", c_n(ce_n)}};
      if (ce_n <= 100'000) {
        const Counterexample inst = counterexample_instance(ce_n, ce_p, ce_pi);
        const double em = renewal_prophet_value(inst.gaps, inst.obs, ce_n);
        const double ev = renewal_optimal_value(inst.gaps, inst.obs, ce_n);
        res["engine"] = {{"M_n", em}, {"V_n", ev}, {"R_n", em / ev}, {"D_n", em - ev},
                         {"max_abs_error",
                          std::max(std::abs(em - m.prophet), std::abs(ev - m.optimal))}};
      }
      Output o;
      emit("renewal counterexample", *ce, o, res, std::nullopt);
    };
  });

  double bin_p = 0.5;
  DistInput bin_dist;
  std::int64_t bin_n = 10;
  auto* bin = renewal->add_subcommand("binomial", "Binomial process values against a_n, b_n");
  bin->add_option("--p", bin_p, "Success probability")->required();
  bin_dist.attach(bin);
  bin->add_option("--n", bin_n, "Horizon")->transform(kInteger)->required();
  bin->callback([&] {
    action = [&] {
      const FiniteDist d = bin_dist.load();
      const RenewalValues b = binomial_process_values(bin_p, d, bin_n);
      const HKConstants hk = hill_kertz_cached(bin_n);
      const RenewalDist T = geometric_renewal(bin_p, bin_n);
      json res = {{"M_n", b.prophet}, {"V_n", b.optimal},
                  {"ratio", b.prophet / b.optimal}, {"diff", b.prophet - b.optimal},
                  {"a_n", hk.a_n()}, {"b_n", hk.b_n()},
                  {"engine_M_n", renewal_prophet_value(T, d, bin_n)},
                  {"engine_V_n", renewal_optimal_value(T, d, bin_n)}};
      Output o;
      emit("renewal binomial", *bin, o, res, std::nullopt);
    };
  });

  // Exploratory search over two-gap laws {1, k} with two-point observations.
  std::int64_t ex_n = 20;
  int ex_grid = 40;
  auto* ex = renewal->add_subcommand(
      "explore", "Grid search of ratio and difference over two-gap renewal laws");
  ex->add_option("--n", ex_n, "Horizon")->transform(kInteger)->capture_default_str();
  ex->add_option("--grid", ex_grid, "Points per parameter axis")
      ->transform(kInteger)->capture_default_str();
  ex->callback([&] {
    action = [&] {
      detail::require(ex_n >= 2, "explore needs n >= 2");
      detail::require(ex_grid >= 2, "explore needs grid >= 2");
      json best_ratio = {{"value", 0.0}};
      json best_diff = {{"value", 0.0}};
      std::int64_t evaluated = 0;
      for (std::int64_t k = 2; k <= ex_n; ++k) {
        for (int ip = 0; ip < ex_grid; ++ip) {
          const double p = (ip + 0.5) / ex_grid;
          const RenewalDist T = RenewalDist::from_weights({1, k}, {p, 1.0 - p});
          for (int ix = 0; ix < ex_grid; ++ix) {
            const double x = (ix + 0.5) / ex_grid;
            for (int iq = 0; iq < ex_grid; ++iq) {
              const double q = std::pow(10.0, -4.0 * (iq + 0.5) / ex_grid);
              const FiniteDist d = FiniteDist::from_weights(
                  std::vector<double>{x, 1.0}, std::vector<double>{1.0 - q, q});
              const double m = renewal_prophet_value(T, d, ex_n);
              const double v = renewal_optimal_value(T, d, ex_n);
              ++evaluated;
              const json where = {{"k", k}, {"p", p}, {"low_atom", x}, {"top_prob", q}};
              if (m / v > best_ratio["value"].get<double>()) {
                best_ratio = {{"value", m / v}, {"at", where}};
              }
              if (m - v > best_diff["value"].get<double>()) {
                best_diff = {{"value", m - v}, {"at", where}};
              }
            }
          }
        }
      }
      json res = {{"n", ex_n}, {"evaluated", evaluated},
                  {"max_ratio", best_ratio}, {"max_difference", best_diff}};
      Output o;
      emit("renewal explore", *ex, o, res, std::nullopt);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (!action) return kExitUsage;
  action();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Violation& v) {
    std::cerr << "error: bound violated on instance\n" << v.doc().dump(2) << '\n';
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
