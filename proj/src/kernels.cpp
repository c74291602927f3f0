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

#include "gaussmode/kernels.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace gaussmode::kernels {

namespace {

double kernel_prefactor(const MarginalKernel &kernel, const GridSpec &grid) {
    return grid.spacing() * std::sqrt((kernel.a - kernel.c) / std::numbers::pi);
}

double kernel_entry(const MarginalKernel &kernel, double xi, double xj, double prefactor) {
    return prefactor * std::exp(-0.5 * (kernel.a * (xi * xi + xj * xj) - 2.0 * kernel.c * xi * xj));
}

void fill_row(const MarginalKernel &kernel, const GridSpec &grid, double prefactor, int i, Eigen::MatrixXd &m) {
    const double xi = grid.node(i);
    for (int j = 0; j <= i; ++j) {
        const double value = kernel_entry(kernel, xi, grid.node(j), prefactor);
        m(i, j) = value;
        m(j, i) = value;
    }
}

// Accumulators in SecondMoments::values() order followed by the norm.
using RowSums = std::array<double, 11>;

// Fourth-order centred first derivative.
Complex derivative(Complex m2, Complex m1, Complex p1, Complex p2, double step) {
    return (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * step);
}

RowSums moment_row(const QuadratureCoefficients &coeffs, const GridSpec &grid, double fd_step, int i) {
    RowSums sums{};
    const double x1 = grid.node(i);
    for (int j = 0; j < grid.points; ++j) {
        const double x2 = grid.node(j);
        const Complex psi = wavefunction(coeffs, x1, x2);
        const Complex d1 = derivative(wavefunction(coeffs, x1 - 2 * fd_step, x2), wavefunction(coeffs, x1 - fd_step, x2),
                                      wavefunction(coeffs, x1 + fd_step, x2),
                                      wavefunction(coeffs, x1 + 2 * fd_step, x2), fd_step);
        const Complex d2 = derivative(wavefunction(coeffs, x1, x2 - 2 * fd_step), wavefunction(coeffs, x1, x2 - fd_step),
                                      wavefunction(coeffs, x1, x2 + fd_step),
                                      wavefunction(coeffs, x1, x2 + 2 * fd_step), fd_step);
        const double density = std::norm(psi);
        // Re(conj(psi) q (-i d psi)) = q Im(conj(psi) d psi)
        const double flux1 = std::imag(std::conj(psi) * d1);
        const double flux2 = std::imag(std::conj(psi) * d2);

        sums[0] += x1 * x1 * density;                   // q1q1
        sums[1] += std::norm(d1);                       // p1p1
        sums[2] += x1 * flux1;                          // {q1p1}
        sums[3] += x2 * x2 * density;                   // q2q2
        sums[4] += std::norm(d2);                       // p2p2
        sums[5] += x2 * flux2;                          // {q2p2}
        sums[6] += x1 * x2 * density;                   // q1q2
        sums[7] += std::real(std::conj(d1) * d2);       // p1p2
        sums[8] += x1 * flux2;                          // q1p2
        sums[9] += x2 * flux1;                          // q2p1
        sums[10] += density;
    }
    return sums;
}

MomentIntegrals reduce_rows(const std::vector<RowSums> &rows, const GridSpec &grid) {
    RowSums total{};
    for (const auto &row : rows) {
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += row[k];
    }
    const double area = grid.spacing() * grid.spacing();
    MomentIntegrals out;
    SecondMoments &m = out.moments;
    m.q1q1 = total[0] * area;
    m.p1p1 = total[1] * area;
    m.q1p1 = total[2] * area;
    m.q2q2 = total[3] * area;
    m.p2p2 = total[4] * area;
    m.q2p2 = total[5] * area;
    m.q1q2 = total[6] * area;
    m.p1p2 = total[7] * area;
    m.q1p2 = total[8] * area;
    m.q2p1 = total[9] * area;
    out.norm = total[10] * area;
    return out;
}

}  // namespace

Eigen::MatrixXd marginal_matrix_serial(const MarginalKernel &kernel, const GridSpec &grid) {
    Eigen::MatrixXd m(grid.points, grid.points);
    const double prefactor = kernel_prefactor(kernel, grid);
    for (int i = 0; i < grid.points; ++i) fill_row(kernel, grid, prefactor, i, m);
    return m;
}

Eigen::MatrixXd marginal_matrix_parallel(const MarginalKernel &kernel, const GridSpec &grid) {
    Eigen::MatrixXd m(grid.points, grid.points);
    const double prefactor = kernel_prefactor(kernel, grid);
    // Each (i, j <= i) pair is written by exactly one iteration.
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < grid.points; ++i) fill_row(kernel, grid, prefactor, i, m);
    return m;
}

Eigen::MatrixXcd marginal_matrix_hermitian(const MarginalKernel &kernel, const GridSpec &grid) {
    const Eigen::MatrixXd real_part = marginal_matrix_serial(kernel, grid);
    Eigen::MatrixXcd m(grid.points, grid.points);
    for (int i = 0; i < grid.points; ++i) {
        const double xi = grid.node(i);
        for (int j = 0; j < grid.points; ++j) {
            const double xj = grid.node(j);
            m(i, j) = real_part(i, j) * std::polar(1.0, -0.5 * kernel.a_prime * (xi * xi - xj * xj));
        }
    }
    return m;
}

MomentIntegrals wavefunction_moments_serial(const QuadratureCoefficients &coeffs, const GridSpec &grid,
                                            double fd_step) {
    std::vector<RowSums> rows(grid.points);
    for (int i = 0; i < grid.points; ++i) rows[i] = moment_row(coeffs, grid, fd_step, i);
    return reduce_rows(rows, grid);
}

MomentIntegrals wavefunction_moments_parallel(const QuadratureCoefficients &coeffs, const GridSpec &grid,
                                              double fd_step) {
    std::vector<RowSums> rows(grid.points);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < grid.points; ++i) rows[i] = moment_row(coeffs, grid, fd_step, i);
    return reduce_rows(rows, grid);
}

}  // namespace gaussmode::kernels
