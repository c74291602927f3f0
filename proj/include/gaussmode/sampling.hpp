// Copyright 2026 The gaussmode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "gaussmode/core_state.hpp"
#include "gaussmode/optics.hpp"

namespace gaussmode {

using Rng = std::mt19937_64;

/// Uniform in [lo, hi) from the top 53 bits, identical on every platform.
double uniform(Rng &rng, double lo, double hi);

/// gamma1 = rho sqrt(alpha1 beta1) with |rho| <= max_correlation keeps
/// Delta^2 = alpha1 beta1 (1 - rho^2) away from zero.
struct RandomStateOptions {
    double real_min = 0.5;
    double real_max = 2.0;
    double imag_span = 1.0;
    double gamma_imag_span = 1.5;
    double max_correlation = 0.95;
    double max_omega = std::numeric_limits<double>::infinity();
};

/// Rejection-samples until omega_marginal <= max_omega.
QuadratureCoefficients random_coefficients(Rng &rng, const RandomStateOptions &options = {});

/// alpha == beta exactly.
QuadratureCoefficients random_symmetric_coefficients(Rng &rng, const RandomStateOptions &options = {});

/// Random one-mode squeezer or phase shift on a random mode.
OpticalElement random_local_element(Rng &rng, double max_r = 1.0);

}  // namespace gaussmode
