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
#include <array>
#include <string_view>
#include <vector>

#include "gaussmode/core_state.hpp"
#include "gaussmode/kernels.hpp"

/// Numerical cross-checks that never touch the closed-form entropy: the
/// marginal kernel is sampled on a grid and diagonalized, and second moments
/// are integrated directly from the wavefunction.
namespace gaussmode {

inline constexpr int kDefaultGridPoints = 512;
inline constexpr int kMinGridPoints = 16;
/// Auto grids use L = 8 sigma_max; anything below 6 sigma_max is rejected.
inline constexpr double kAutoWidthFactor = 8.0;
inline constexpr double kMinWidthFactor = 6.0;
inline constexpr double kTraceTolerance = 1e-4;
/// Largest h * sqrt(a + c) accepted, i.e. at least one node per standard
/// deviation of the kernel across the diagonal.
inline constexpr double kMaxResolutionRatio = 1.0;
inline constexpr double kEigenvalueFloor = 1e-12;
inline constexpr double kMarginalEntropyAgreement = 1e-6;
inline constexpr double kDefaultEofTolerance = 1e-6;
inline constexpr double kDefaultMomentTolerance = 1e-7;
/// Finite-difference step of the moment audit, as a fraction of the grid spacing.
inline constexpr double kFiniteDifferenceFraction = 1.0 / 64.0;

/// L = 8 sqrt(max(<q1^2>, <q2^2>)), N = points.
GridSpec auto_grid(const QuadratureCoefficients &coeffs, int points = kDefaultGridPoints);

/// Throws Error(kInvalidGrid) unless L > 0 is finite and N >= 16 is even.
void validate_grid(const GridSpec &grid);

/// Real symmetric sampling of the mode's reduced density matrix. Throws
/// Error(kGridTooCoarse) if the grid is narrower than 6 sigma_max, too coarse
/// to resolve the kernel, or the trace misses 1 by more than 1e-4.
Eigen::MatrixXd discretize_marginal(const QuadratureCoefficients &coeffs, Mode mode, const GridSpec &grid);

struct NumericSpectrum {
    /// Descending, clipped to zero below kEigenvalueFloor.
    std::vector<double> eigenvalues;
    double trace = 0;
    double entropy_nats = 0;
    double purity = 0;
};

/// Throws Error(kNotSymmetric) if max |M - M^T| > 1e-10.
NumericSpectrum numeric_spectrum(const Eigen::MatrixXd &kernel);

/// Descending eigenvalues of a complex Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd &kernel);

struct MarginalEntropies {
    double mode1 = 0;
    double mode2 = 0;
};

MarginalEntropies marginal_entropies(const QuadratureCoefficients &coeffs, const GridSpec &grid);

/// Numerical entropy of the mode-1 marginal. Throws Error(kMarginalMismatch)
/// if the mode-2 entropy differs by more than 1e-6.
double eof_oracle(const QuadratureCoefficients &coeffs, const GridSpec &grid);

struct MomentPair {
    std::string_view name;
    double analytic = 0;
    double numeric = 0;
};

struct MomentAudit {
    std::array<MomentPair, 10> pairs;
    double norm = 0;

    double max_abs_diff() const;
};

/// Pairs the closed-form second moments with 2-D quadrature over Psi.
/// Finite-difference step is h/4. Throws Error(kGridTooCoarse) if the
/// integrated norm misses 1 by more than 1e-4.
MomentAudit moment_audit(const QuadratureCoefficients &coeffs, const GridSpec &grid);

struct VerificationReport {
    double e_f_closed_form = 0;
    double e_f_oracle = 0;
    double abs_diff = 0;
    GridSpec grid;
    double moment_audit_max_abs_diff = 0;
    bool passed = false;
};

/// Runs eof_oracle and moment_audit against the closed forms.
VerificationReport verify_state(const QuadratureCoefficients &coeffs, const GridSpec &grid,
                                double eof_tolerance = kDefaultEofTolerance,
                                double moment_tolerance = kDefaultMomentTolerance);

}  // namespace gaussmode
