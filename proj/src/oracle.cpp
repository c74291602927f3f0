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

#include "gaussmode/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "gaussmode/entanglement.hpp"

namespace gaussmode {

namespace {

double max_position_sigma(const QuadratureCoefficients &coeffs) {
    const SecondMoments m = second_moments(coeffs);
    return std::sqrt(std::max(m.q1q1, m.q2q2));
}

[[noreturn]] void too_coarse(const std::string &why) { throw Error(ErrorCode::kGridTooCoarse, why); }

void require_wide_enough(const QuadratureCoefficients &coeffs, const GridSpec &grid) {
    const double sigma = max_position_sigma(coeffs);
    if (grid.half_width < kMinWidthFactor * sigma) {
        std::ostringstream msg;
        msg << "grid half-width " << grid.half_width << " is below " << kMinWidthFactor
            << " sigma_max = " << kMinWidthFactor * sigma;
        too_coarse(msg.str());
    }
}

std::vector<double> sorted_descending(const Eigen::VectorXd &values) {
    std::vector<double> out(values.data(), values.data() + values.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace

GridSpec auto_grid(const QuadratureCoefficients &coeffs, int points) {
    return {kAutoWidthFactor * max_position_sigma(coeffs), points};
}

void validate_grid(const GridSpec &grid) {
    if (!std::isfinite(grid.half_width) || grid.half_width <= 0.0) {
        throw Error(ErrorCode::kInvalidGrid, "grid half-width must be positive and finite");
    }
    if (grid.points < kMinGridPoints || grid.points % 2 != 0) {
        throw Error(ErrorCode::kInvalidGrid, "grid point count must be even and at least 16");
    }
}

Eigen::MatrixXd discretize_marginal(const QuadratureCoefficients &coeffs, Mode mode, const GridSpec &grid) {
    validate_grid(grid);
    require_wide_enough(coeffs, grid);

    const MarginalKernel kernel = marginal_kernel(coeffs, mode);
    const double resolution = grid.spacing() * std::sqrt(kernel.a + kernel.c);
    if (resolution > kMaxResolutionRatio) {
        std::ostringstream msg;
        msg << "grid spacing " << grid.spacing() << " does not resolve the kernel (h*sqrt(a+c) = " << resolution
            << ")";
        too_coarse(msg.str());
    }

    Eigen::MatrixXd m = kernels::marginal_matrix_parallel(kernel, grid);
    const double trace = m.trace();
    if (std::abs(trace - 1.0) > kTraceTolerance) {
        std::ostringstream msg;
        msg << "discretized marginal has trace " << trace;
        too_coarse(msg.str());
    }
    return m;
}

NumericSpectrum numeric_spectrum(const Eigen::MatrixXd &kernel) {
    const double asymmetry = (kernel - kernel.transpose()).cwiseAbs().maxCoeff();
    if (asymmetry > 1e-10) {
        throw Error(ErrorCode::kNotSymmetric, "kernel matrix is not symmetric");
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(kernel, Eigen::EigenvaluesOnly);

    NumericSpectrum spectrum;
    spectrum.eigenvalues = sorted_descending(solver.eigenvalues());
    for (double &p : spectrum.eigenvalues) {
        if (p < kEigenvalueFloor) p = 0.0;
    }
    spectrum.trace = kernel.trace();
    spectrum.entropy_nats = spectrum_entropy(spectrum.eigenvalues);
    spectrum.purity = spectrum_purity(spectrum.eigenvalues);
    return spectrum;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd &kernel) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(kernel, Eigen::EigenvaluesOnly);
    return sorted_descending(solver.eigenvalues());
}

MarginalEntropies marginal_entropies(const QuadratureCoefficients &coeffs, const GridSpec &grid) {
    return {numeric_spectrum(discretize_marginal(coeffs, Mode::kFirst, grid)).entropy_nats,
            numeric_spectrum(discretize_marginal(coeffs, Mode::kSecond, grid)).entropy_nats};
}

double eof_oracle(const QuadratureCoefficients &coeffs, const GridSpec &grid) {
    const MarginalEntropies s = marginal_entropies(coeffs, grid);
    if (std::abs(s.mode1 - s.mode2) > kMarginalEntropyAgreement) {
        std::ostringstream msg;
        msg << "marginal entropies disagree: " << s.mode1 << " vs " << s.mode2;
        throw Error(ErrorCode::kMarginalMismatch, msg.str());
    }
    return s.mode1;
}

double MomentAudit::max_abs_diff() const {
    double worst = 0.0;
    for (const auto &p : pairs) worst = std::max(worst, std::abs(p.analytic - p.numeric));
    return worst;
}

MomentAudit moment_audit(const QuadratureCoefficients &coeffs, const GridSpec &grid) {
    validate_grid(grid);
    require_wide_enough(coeffs, grid);

    const MomentIntegrals numeric = kernels::wavefunction_moments_parallel(coeffs, grid, kFiniteDifferenceFraction * grid.spacing());
    if (std::abs(numeric.norm - 1.0) > kTraceTolerance) {
        std::ostringstream msg;
        msg << "integrated norm of the wavefunction is " << numeric.norm;
        too_coarse(msg.str());
    }
    const auto analytic = second_moments(coeffs).values();
    const auto measured = numeric.moments.values();

    MomentAudit audit;
    audit.norm = numeric.norm;
    for (std::size_t k = 0; k < audit.pairs.size(); ++k) {
        audit.pairs[k] = {SecondMoments::kNames[k], analytic[k], measured[k]};
    }
    return audit;
}

VerificationReport verify_state(const QuadratureCoefficients &coeffs, const GridSpec &grid, double eof_tolerance,
                                double moment_tolerance) {
    VerificationReport report;
    report.grid = grid;
    report.e_f_closed_form = entanglement_of_formation(coeffs).e_f_nats;
    report.e_f_oracle = eof_oracle(coeffs, grid);
    report.abs_diff = std::abs(report.e_f_closed_form - report.e_f_oracle);
    report.moment_audit_max_abs_diff = moment_audit(coeffs, grid).max_abs_diff();
    report.passed = report.abs_diff <= eof_tolerance && report.moment_audit_max_abs_diff <= moment_tolerance;
    return report;
}

}  // namespace gaussmode
