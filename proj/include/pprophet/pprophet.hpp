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

#ifndef PPROPHET_PPROPHET_HPP_
#define PPROPHET_PPROPHET_HPP_

#include "pprophet/bounds.hpp"
#include "pprophet/common.hpp"
#include "pprophet/dist_spec.hpp"
#include "pprophet/distributions.hpp"
#include "pprophet/hill_kertz.hpp"
#include "pprophet/poisson_stopping.hpp"
#include "pprophet/quadrature.hpp"
#include "pprophet/renewal.hpp"
#include "pprophet/rng.hpp"
#include "pprophet/simulate.hpp"
#include "pprophet/thresholds.hpp"

#endif  // PPROPHET_PPROPHET_HPP_
