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

#include <Eigen/Dense>
#include <span>
#include <string_view>
#include <variant>

#include "gaussmode/core_state.hpp"

/// Gaussian optical elements acting on the quadrature coefficients.
///
/// Each element G is represented by its action on the mode annihilation
/// operators, G a G^dag = U a + V a^dag. A circuit is an ordered list; the
/// first element acts on the vacuum first.
namespace gaussmode {

/// Squeeze magnitude r >= 0 and phase phi in [0, 2 pi).
struct SqueezeParams {
    double r = 0;
    double phi = 0;

    /// Throws Error(kInvalidInput) for negative or non-finite r; reduces phi mod 2 pi.
    static SqueezeParams make(double r, double phi);
};

/// exp(-(zeta a1^dag a2^dag - zeta^* a1 a2)), zeta = r e^{i phi}.
struct TwoModeSqueeze {
    SqueezeParams params;
};

/// exp(-(zeta a^dag2 - zeta^* a^2)/2) on one mode.
struct OneModeSqueeze {
    Mode mode = Mode::kFirst;
    SqueezeParams params;
};

/// U = [[e^{-i phi} cos(theta/2), -e^{-i phi} sin(theta/2)], [sin(theta/2), cos(theta/2)]],
/// theta in [0, pi]. theta = pi/2 is a 50:50 splitter.
struct BeamSplitter {
    double theta = 0;
    double phi = 0;
};

/// a -> e^{-i phi} a on one mode.
struct PhaseShift {
    Mode mode = Mode::kFirst;
    double phi = 0;
};

using OpticalElement = std::variant<TwoModeSqueeze, OneModeSqueeze, BeamSplitter, PhaseShift>;

/// Validating constructors; all throw Error(kInvalidInput) on bad parameters.
OpticalElement make_two_mode_squeeze(double r, double phi);
OpticalElement make_one_mode_squeeze(Mode mode, double r, double phi);
OpticalElement make_beam_splitter(double theta, double phi);
OpticalElement make_phase_shift(Mode mode, double phi);

/// Short tag used in circuit files: "tms", "sms", "bs", "phase".
std::string_view element_tag(const OpticalElement &element);

/// Single-mode elements leave the entanglement unchanged.
bool is_local(const OpticalElement &element);

struct BogoliubovMap {
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd v = Eigen::Matrix2cd::Zero();

    static BogoliubovMap identity() { return {}; }

    /// The map of "this, then next".
    BogoliubovMap then(const BogoliubovMap &next) const;

    /// max-abs entry of U U^dag - V V^dag - 1 and of U V^T - V U^T.
    double symplectic_defect() const;
};

BogoliubovMap element_to_bogoliubov(const OpticalElement &element);

/// Composite map of a circuit in list order; identity for an empty list.
BogoliubovMap compose(std::span<const OpticalElement> elements);

/// Linear conditions b_i Psi = 0 with b = X a + Y a^dag that fix a Gaussian
/// state. Unlike a BogoliubovMap this need not be symplectic: any invertible
/// recombination of the rows describes the same state.
struct Annihilators {
    Eigen::Matrix2cd x = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd y = Eigen::Matrix2cd::Zero();

    static Annihilators vacuum() { return {}; }
    /// Rows equivalent to (M q + i p), M = [[alpha, gamma], [gamma, beta]].
    static Annihilators of(const QuadratureCoefficients &coeffs);

    /// Conditions satisfied by G |psi> given the map of G.
    Annihilators transformed(const BogoliubovMap &map) const;
};

/// Reduced condition number above which the annihilation solve is rejected.
inline constexpr double kMaxConditionNumber = 1e12;

/// Solves (X - Y) M = X + Y for M = [[alpha, gamma], [gamma, beta]].
/// Throws Error(kNonNormalizableResult) when ill-conditioned or non-normalizable.
QuadratureCoefficients solve_coefficients(const Annihilators &conditions);

/// State produced by the circuit from the vacuum. Throws Error(kInvalidInput)
/// for an empty circuit and Error(kNonNormalizableResult) from the solve.
QuadratureCoefficients apply_circuit(std::span<const OpticalElement> elements);

/// State produced by running the elements on an existing state.
QuadratureCoefficients apply_elements(const QuadratureCoefficients &coeffs,
                                      std::span<const OpticalElement> elements);
QuadratureCoefficients apply_element(const QuadratureCoefficients &coeffs, const OpticalElement &element);

// Closed forms, kept as regression anchors for the composition path.

/// alpha = beta = (1 + l^2)/(1 - l^2), gamma = -2 l/(1 - l^2), l = -e^{i phi} tanh r.
QuadratureCoefficients two_mode_squeezed(const SqueezeParams &params);

/// Two-mode squeeze (r12, phi12) followed by a one-mode squeeze (r1, phi1) on mode 1.
QuadratureCoefficients squeeze_then_onemode(double r12, double phi12, double r1, double phi1);

/// Two-mode squeeze (r12, 0) followed by BeamSplitter(theta, phi), with
/// l = e^{i phi} tanh r12:
///   alpha = (1 + 2 l sin(theta) + l^2)/(1 - l^2), beta = (1 - 2 l sin(theta) + l^2)/(1 - l^2),
///   gamma = 2 l cos(theta)/(1 - l^2).
QuadratureCoefficients beamsplit_squeezed(double r12, double theta, double phi);

}  // namespace gaussmode
