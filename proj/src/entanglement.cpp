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

#include "gaussmode/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gaussmode {

namespace {

// (1 + d) ln(1 + d) - d ln d, the thermal entropy with d = Omega - 1/2.
double entropy_from_excess(double d) {
    const double upper = (1.0 + d) * std::log1p(d);
    if (d < kXLogXThreshold) return upper;
    return upper - d * std::log(d);
}

// Omega - 1/2 without cancellation: x / (Omega + 1/2) with x = Omega^2 - 1/4.
double omega_excess(const QuadratureCoefficients &coeffs, double omega) {
    const double x = coeffs.gamma_norm_squared() / (4.0 * coeffs.delta_squared());
    return x / (omega + 0.5);
}

EntanglementReport make_report(const QuadratureCoefficients &coeffs, const DeterminantSet &dets) {
    EntanglementReport report;
    report.omega = omega_marginal(coeffs);
    const double excess = omega_excess(coeffs, report.omega);
    report.e_f_nats = entropy_from_excess(excess);
    report.spectrum_ratio = excess / (1.0 + excess);
    report.heisenberg_two_mode = heisenberg_two_mode(dets);
    return report;
}

}  // namespace

DeterminantSet determinants(const CovarianceMatrix &cov) {
    Eigen::Matrix2d j;
    j << 0.0, 1.0, -1.0, 0.0;

    DeterminantSet dets;
    dets.det_a = cov.block_a.determinant();
    dets.det_b = cov.block_b.determinant();
    dets.det_c = cov.block_c.determinant();
    dets.det_v = cov.full().determinant();
    dets.tr_term = (cov.block_a * j * cov.block_c * j * cov.block_b * j * cov.block_c.transpose() * j).trace();
    return dets;
}

double heisenberg_two_mode(const DeterminantSet &dets) {
    return dets.det_v + 1.0 / 16.0 - 0.25 * (dets.det_a + dets.det_b + 2.0 * dets.det_c);
}

SimonReport simon_criterion(const DeterminantSet &dets, double tolerance) {
    SimonReport report;
    report.e_s = dets.det_v + 1.0 / 16.0 - 0.25 * (dets.det_a + dets.det_b + 2.0 * std::abs(dets.det_c));
    report.entangled = report.e_s < -tolerance;
    return report;
}

double omega_marginal(const QuadratureCoefficients &coeffs) {
    return std::sqrt(0.25 + coeffs.gamma_norm_squared() / (4.0 * coeffs.delta_squared()));
}

double omega_from_kernel(const MarginalKernel &kernel) {
    return 0.5 * std::sqrt((kernel.a + kernel.c) / (kernel.a - kernel.c));
}

KernelVariances kernel_variances(const MarginalKernel &kernel) {
    const double width = kernel.a - kernel.c;
    KernelVariances v;
    v.xx = 1.0 / (2.0 * width);
    v.pp = 0.5 * (kernel.a + kernel.c) + kernel.a_prime * kernel.a_prime / (2.0 * width);
    v.xp = -kernel.a_prime / (2.0 * width);
    return v;
}

double entropy_from_omega(double omega) { return entropy_from_excess(std::max(0.0, omega - 0.5)); }

EntanglementReport entanglement_of_formation(const QuadratureCoefficients &coeffs) {
    return make_report(coeffs, determinants(covariance(coeffs)));
}

double squeezed_eof(double r) {
    const double s2 = std::sinh(r) * std::sinh(r);
    // cosh^2 r = 1 + sinh^2 r, so this is the thermal entropy at occupation sinh^2 r.
    return entropy_from_excess(s2);
}

std::vector<double> eigen_spectrum(double omega, double cutoff, std::size_t max_terms) {
    if (!std::isfinite(omega) || omega < 0.5 - kSeparabilityTolerance) {
        std::ostringstream msg;
        msg << "marginal uncertainty must be >= 1/2, got " << omega;
        throw Error(ErrorCode::kInvalidInput, msg.str());
    }
    const double d = std::max(0.0, omega - 0.5);
    if (d < kXLogXThreshold) return {1.0};

    const double z = d / (1.0 + d);
    const double p0 = 1.0 / (1.0 + d);  // 1 - z
    std::vector<double> p;
    double pm = p0;
    while (p.size() < max_terms && pm >= cutoff) {
        p.push_back(pm);
        pm *= z;
    }
    return p;
}

double spectrum_entropy(std::span<const double> probabilities) {
    double s = 0.0;
    for (double p : probabilities) {
        if (p > 0.0) s -= p * std::log(p);
    }
    return s;
}

double spectrum_purity(std::span<const double> probabilities) {
    double sum = 0.0;
    for (double p : probabilities) sum += p * p;
    return sum;
}

EffectiveHamiltonian effective_hamiltonian(const MarginalKernel &kernel, double frequency) {
    if (!(kernel.a > std::abs(kernel.c)) || kernel.c < 0.0 || !(frequency > 0.0)) {
        std::ostringstream msg;
        msg << "kernel is not a density matrix: a=" << kernel.a << ", c=" << kernel.c;
        throw Error(ErrorCode::kKernelNotPhysical, msg.str());
    }
    const double root = std::sqrt((kernel.a - kernel.c) * (kernel.a + kernel.c));

    EffectiveHamiltonian h;
    h.omega = frequency;
    // Smaller root of z^2 - 2(a/c) z + 1 = 0, written to stay finite at c = 0.
    h.z = kernel.c / (kernel.a + root);
    h.kappa = h.z > 0.0 ? -std::log(h.z) / frequency : std::numeric_limits<double>::infinity();
    h.mu_squared = 1.0 / (2.0 * root);
    h.e = 2.0 * frequency * h.mu_squared;
    h.f = h.e * kernel.a_prime;
    h.d = (frequency * frequency + h.f * h.f) / h.e;

    const double cosh2r = (h.d + h.e) / (2.0 * frequency);
    const double sinh2r_cos = (h.d - h.e) / (2.0 * frequency);
    const double sinh2r_sin = h.f / frequency;
    h.squeeze_r = 0.5 * std::acosh(std::max(1.0, cosh2r));
    h.squeeze_phi = (sinh2r_cos == 0.0 && sinh2r_sin == 0.0) ? 0.0 : std::atan2(sinh2r_sin, sinh2r_cos);
    return h;
}

MarginalKernel kernel_from_hamiltonian(double d, double e, double f, double kappa) {
    const double omega_sq = d * e - f * f;
    if (!(e > 0.0) || !(omega_sq > 0.0) || !(kappa > 0.0)) {
        throw Error(ErrorCode::kKernelNotPhysical, "Hamiltonian must satisfy E > 0, DE > F^2, kappa > 0");
    }
    const double omega = std::sqrt(omega_sq);
    const double mu_sq = e / (2.0 * omega);
    const double z = std::exp(-kappa * omega);
    const double denom = 2.0 * mu_sq * (1.0 - z * z);

    MarginalKernel kernel;
    kernel.a = (1.0 + z * z) / denom;
    kernel.c = 2.0 * z / denom;
    kernel.a_prime = f / (2.0 * omega * mu_sq);
    return kernel;
}

SymmetricStandardForm symmetric_standard_form(const QuadratureCoefficients &coeffs, double tolerance) {
    if (std::abs(coeffs.alpha() - coeffs.beta()) > tolerance) {
        throw Error(ErrorCode::kNotSymmetric, "standard-form cross-check needs alpha == beta");
    }
    // Local symplectic maps bring A to (n/2) * identity; det A is invariant.
    const DeterminantSet dets = determinants(covariance(coeffs));
    SymmetricStandardForm form;
    form.n = 2.0 * std::sqrt(dets.det_a);
    const double k = std::sqrt(std::max(0.0, form.n * form.n - 1.0));
    form.k_q = -k;
    form.k_p = k;
    form.r_equiv = 0.25 * std::log((form.n - form.k_q) * (form.n + form.k_p));
    return form;
}

StateAnalysis analyze(const QuadratureCoefficients &coeffs) {
    const SecondMoments moments = second_moments(coeffs);
    const CovarianceMatrix cov = covariance(moments);
    const DeterminantSet dets = determinants(cov);
    return {coeffs, moments, cov, dets, simon_criterion(dets), make_report(coeffs, dets)};
}

}  // namespace gaussmode
