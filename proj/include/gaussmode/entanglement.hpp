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

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "gaussmode/core_state.hpp"

/// Separability, marginal mixedness and entanglement of formation of pure
/// two-mode Gaussians. All entropies are in nats.
namespace gaussmode {

inline constexpr double kSeparabilityTolerance = 1e-12;
inline constexpr double kSymmetryTolerance = 1e-10;
/// (Omega - 1/2) below this is treated as zero in x ln x terms.
inline constexpr double kXLogXThreshold = 1e-14;
inline constexpr double kDefaultSpectrumCutoff = 1e-16;
inline constexpr std::size_t kMaxSpectrumTerms = 1'000'000;

inline double nats_to_bits(double nats) { return nats / std::numbers::ln2; }

struct DeterminantSet {
    double det_a = 0;
    double det_b = 0;
    double det_c = 0;
    double det_v = 0;
    /// tr(A J C J B J C^T J), J = [[0, 1], [-1, 0]].
    double tr_term = 0;
};

/// det_v is the full 4x4 determinant, not the block identity, so that
/// det_v == det_a det_b + det_c^2 - tr_term can be checked independently.
DeterminantSet determinants(const CovarianceMatrix &cov);

/// Omega_2^2 = det V + 1/16 - (det A + det B + 2 det C)/4; zero for pure states.
double heisenberg_two_mode(const DeterminantSet &dets);

struct SimonReport {
    double e_s = 0;
    bool entangled = false;
};

/// E_s = det V + 1/16 - (det A + det B + 2|det C|)/4; entangled iff E_s < -tolerance.
SimonReport simon_criterion(const DeterminantSet &dets, double tolerance = kSeparabilityTolerance);

/// Omega_HA = sqrt(1/4 + |gamma|^2 / (4 Delta^2)) >= 1/2.
double omega_marginal(const QuadratureCoefficients &coeffs);

/// Omega from a kernel: Omega^2 = (a + c) / (4 (a - c)).
double omega_from_kernel(const MarginalKernel &kernel);

/// <x^2>, <p^2>, <{xp}> of a one-mode kernel.
struct KernelVariances {
    double xx = 0;
    double pp = 0;
    double xp = 0;
};
KernelVariances kernel_variances(const MarginalKernel &kernel);

/// (Omega + 1/2) ln(Omega + 1/2) - (Omega - 1/2) ln(Omega - 1/2).
double entropy_from_omega(double omega);

struct EntanglementReport {
    double omega = 0.5;
    double e_f_nats = 0;
    double heisenberg_two_mode = 0;
    /// z = (Omega - 1/2)/(Omega + 1/2), ratio of consecutive marginal eigenvalues.
    double spectrum_ratio = 0;
};

EntanglementReport entanglement_of_formation(const QuadratureCoefficients &coeffs);

/// cosh^2 r ln(cosh^2 r) - sinh^2 r ln(sinh^2 r).
double squeezed_eof(double r);

/// Marginal eigenvalues p_m = (1 - z) z^m, truncated once p_m < cutoff or
/// after max_terms entries. Omega == 1/2 gives {1}.
std::vector<double> eigen_spectrum(double omega, double cutoff = kDefaultSpectrumCutoff,
                                   std::size_t max_terms = kMaxSpectrumTerms);

double spectrum_entropy(std::span<const double> probabilities);
double spectrum_purity(std::span<const double> probabilities);

/// H = (D Q^2 + E P^2 + F (QP + PQ))/2 = omega (A^dag A + 1/2) whose thermal
/// state exp(-kappa H)/Z reproduces a kernel. The kernel fixes only kappa*omega,
/// so the frequency is supplied by the caller.
struct EffectiveHamiltonian {
    double d = 0;
    double e = 0;
    double f = 0;
    double omega = 1;
    /// +inf for a pure kernel (c == 0).
    double kappa = 0;
    /// exp(-kappa omega).
    double z = 0;
    double mu_squared = 0;
    /// Squeeze parameters of A = lambda Q + i mu P with
    /// lambda = (cosh r + e^{i phi} sinh r)/sqrt2, mu = (cosh r - e^{i phi} sinh r)/sqrt2.
    double squeeze_r = 0;
    double squeeze_phi = 0;
};

/// Throws Error(kKernelNotPhysical) unless a > |c| and c >= 0.
EffectiveHamiltonian effective_hamiltonian(const MarginalKernel &kernel, double frequency = 1.0);

/// Forward map (D, E, F, kappa) -> (a, a', c); requires E > 0 and DE > F^2.
MarginalKernel kernel_from_hamiltonian(double d, double e, double f, double kappa);

/// Standard form of a symmetric pure state, V_S = (1/2)[[n,0,kq,0],[0,n,0,kp],[kq,0,n,0],[0,kp,0,n]].
struct SymmetricStandardForm {
    double n = 1;
    double k_q = 0;
    double k_p = 0;
    /// Squeezing of the two-mode squeezed state with the same EPR correlation.
    double r_equiv = 0;
};

/// n = 2 sqrt(det A) from the covariance; |kq| = |kp| = sqrt(n^2 - 1) with
/// kq <= 0 <= kp, and r_equiv = ln[(n - kq)(n + kp)]/4.
/// Throws Error(kNotSymmetric) if |alpha - beta| > tolerance.
SymmetricStandardForm symmetric_standard_form(const QuadratureCoefficients &coeffs,
                                              double tolerance = kSymmetryTolerance);

/// Everything the CLI reports for a single state.
struct StateAnalysis {
    QuadratureCoefficients coeffs;
    SecondMoments moments;
    CovarianceMatrix cov;
    DeterminantSet dets;
    SimonReport simon;
    EntanglementReport entanglement;
};

StateAnalysis analyze(const QuadratureCoefficients &coeffs);

}  // namespace gaussmode
