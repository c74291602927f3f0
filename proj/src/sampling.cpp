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

#include "gaussmode/sampling.hpp"

#include <cmath>
#include <numbers>

#include "gaussmode/entanglement.hpp"

namespace gaussmode {

double uniform(Rng &rng, double lo, double hi) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

QuadratureCoefficients random_coefficients(Rng &rng, const RandomStateOptions &options) {
    for (;;) {
        const double a1 = uniform(rng, options.real_min, options.real_max);
        const double b1 = uniform(rng, options.real_min, options.real_max);
        const double a2 = uniform(rng, -options.imag_span, options.imag_span);
        const double b2 = uniform(rng, -options.imag_span, options.imag_span);
        const double rho = uniform(rng, -options.max_correlation, options.max_correlation);
        const double g2 = uniform(rng, -options.gamma_imag_span, options.gamma_imag_span);
        const auto coeffs =
            QuadratureCoefficients::validate({a1, a2}, {b1, b2}, {rho * std::sqrt(a1 * b1), g2});
        if (omega_marginal(coeffs) <= options.max_omega) return coeffs;
    }
}

QuadratureCoefficients random_symmetric_coefficients(Rng &rng, const RandomStateOptions &options) {
    for (;;) {
        const double a1 = uniform(rng, options.real_min, options.real_max);
        const double a2 = uniform(rng, -options.imag_span, options.imag_span);
        const double rho = uniform(rng, -options.max_correlation, options.max_correlation);
        const double g2 = uniform(rng, -options.gamma_imag_span, options.gamma_imag_span);
        const Complex diag{a1, a2};
        const auto coeffs = QuadratureCoefficients::validate(diag, diag, {rho * a1, g2});
        if (omega_marginal(coeffs) <= options.max_omega) return coeffs;
    }
}

OpticalElement random_local_element(Rng &rng, double max_r) {
    const Mode mode = uniform(rng, 0.0, 1.0) < 0.5 ? Mode::kFirst : Mode::kSecond;
    const double phi = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    if (uniform(rng, 0.0, 1.0) < 0.5) return make_phase_shift(mode, phi);
    return make_one_mode_squeeze(mode, uniform(rng, 0.0, max_r), phi);
}

}  // namespace gaussmode
