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

#ifndef PPROPHET_JSON_IO_HPP_
#define PPROPHET_JSON_IO_HPP_

#include <vector>

#include "json.hpp"
#include "pprophet/distributions.hpp"
#include "pprophet/simulate.hpp"

namespace pprophet {

// {"atoms": [...], "probs": [...]}
inline nlohmann::json dist_to_json(const FiniteDist& d) {
  return nlohmann::json{{"atoms", d.atoms()}, {"probs", d.probs()}};
}

inline FiniteDist dist_from_json(const nlohmann::json& j,
                                 Law law = Law::kObservation) {
  if (!j.is_object() || !j.contains("atoms") || !j.contains("probs")) {
    throw DomainError("distribution JSON needs \"atoms\" and \"probs\"");
  }
  const auto atoms = j.at("atoms").get<std::vector<double>>();
  const auto probs = j.at("probs").get<std::vector<double>>();
  return FiniteDist::from_probs(atoms, probs, law);
}

inline nlohmann::json sim_result_to_json(const SimResult& r) {
  return nlohmann::json{{"estimate", r.estimate},
                        {"stderr", r.std_error},
                        {"ci95", {r.ci_lo, r.ci_hi}},
                        {"paths", r.paths}};
}

}  // namespace pprophet

#endif  // PPROPHET_JSON_IO_HPP_
