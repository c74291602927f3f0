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

#include "gaussmode/core_state.hpp"

namespace gaussmode {

/// Uniform midpoint grid on [-L, L]: x_i = -L + (i + 1/2) h, h = 2L/N.
struct GridSpec {
    double half_width = 8.0;
    int points = 512;

    double spacing() const { return 2.0 * half_width / points; }
    double node(int i) const { return -half_width + (i + 0.5) * spacing(); }
};

/// Raw quadrature sums over a 2-D grid; moments are not divided by norm.
struct MomentIntegrals {
    double norm = 0;
    SecondMoments moments;
};

/// Grid kernels. The *_serial variants are the reference implementations;
/// the *_parallel variants split rows across OpenMP threads and reduce the
/// per-row partials in a fixed order, so both give bit-identical results
/// independent of the thread count.
namespace kernels {

/// M_ij = h sqrt((a - c)/pi) exp(-(a (x_i^2 + x_j^2) - 2 c x_i x_j)/2), the
/// kernel with its diagonal phase exp(-i a' (x^2 - x'^2)/2) dropped.
Eigen::MatrixXd marginal_matrix_serial(const MarginalKernel &kernel, const GridSpec &grid);
Eigen::MatrixXd marginal_matrix_parallel(const MarginalKernel &kernel, const GridSpec &grid);

/// Same kernel with the phase kept (complex Hermitian).
Eigen::MatrixXcd marginal_matrix_hermitian(const MarginalKernel &kernel, const GridSpec &grid);

/// Second moments of Psi by 2-D midpoint quadrature. Momenta use fourth-order
/// centred differences of Psi with step fd_step.
MomentIntegrals wavefunction_moments_serial(const QuadratureCoefficients &coeffs, const GridSpec &grid,
                                            double fd_step);
MomentIntegrals wavefunction_moments_parallel(const QuadratureCoefficients &coeffs, const GridSpec &grid,
                                              double fd_step);

}  // namespace kernels
}  // namespace gaussmode
