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
#include <complex>
#include <string_view>

#include "gaussmode/error.hpp"

/// Pure two-mode Gaussian states in the position representation
///
///   Psi(q1, q2) = N exp(-(alpha q1^2 + beta q2^2 + 2 gamma q1 q2) / 2)
///
/// Units: hbar = 1, vacuum quadrature variance 1/2, p = -i d/dq.
namespace gaussmode {

using Complex = std::complex<double>;

enum class Mode { kFirst = 1, kSecond = 2 };

/// alpha1, beta1 and Delta^2 must exceed this to count as normalizable.
inline constexpr double kPositivityTolerance = 1e-12;

/// Validated (alpha, beta, gamma) triple. Only constructible through validate().
class QuadratureCoefficients {
   public:
    /// Throws Error(kNonFinite) or Error(kNonNormalizable). States within
    /// kPositivityTolerance of the boundary are rejected, not clamped.
    static QuadratureCoefficients validate(Complex alpha, Complex beta, Complex gamma);

    static QuadratureCoefficients vacuum() { return validate(1.0, 1.0, 0.0); }

    Complex alpha() const { return alpha_; }
    Complex beta() const { return beta_; }
    Complex gamma() const { return gamma_; }

    /// Delta^2 = alpha1 beta1 - gamma1^2.
    double delta_squared() const { return delta_squared_; }
    double delta() const;
    double gamma_norm_squared() const { return std::norm(gamma_); }

    /// Same state with the two modes relabelled (alpha <-> beta).
    QuadratureCoefficients swapped() const { return {beta_, alpha_, gamma_, delta_squared_}; }

   private:
    QuadratureCoefficients(Complex a, Complex b, Complex g, double d2)
        : alpha_(a), beta_(b), gamma_(g), delta_squared_(d2) {}

    Complex alpha_;
    Complex beta_;
    Complex gamma_;
    double delta_squared_;
};

/// N = (Delta^2 / pi^2)^(1/4).
double normalization(const QuadratureCoefficients &coeffs);

Complex wavefunction(const QuadratureCoefficients &coeffs, double q1, double q2);

/// The ten independent second moments. Products of commuting operators are
/// plain expectation values; same-mode q,p products are symmetrized.
struct SecondMoments {
    double q1q1 = 0, p1p1 = 0, q1p1 = 0;
    double q2q2 = 0, p2p2 = 0, q2p2 = 0;
    double q1q2 = 0, p1p2 = 0, q1p2 = 0, q2p1 = 0;

    static constexpr std::array<std::string_view, 10> kNames = {
        "q1q1", "p1p1", "{q1p1}", "q2q2", "p2p2", "{q2p2}", "q1q2", "p1p2", "q1p2", "q2p1"};

    std::array<double, 10> values() const {
        return {q1q1, p1p1, q1p1, q2q2, p2p2, q2p2, q1q2, p1p2, q1p2, q2p1};
    }
};

SecondMoments second_moments(const QuadratureCoefficients &coeffs);

/// V = [[A, C], [C^T, B]] in the ordering (q1, p1, q2, p2).
struct CovarianceMatrix {
    Eigen::Matrix2d block_a;
    Eigen::Matrix2d block_b;
    Eigen::Matrix2d block_c;

    Eigen::Matrix4d full() const;
};

CovarianceMatrix covariance(const SecondMoments &moments);
CovarianceMatrix covariance(const QuadratureCoefficients &coeffs);

/// Reduced one-mode density matrix
///   <x|rho|x'> = sqrt((a - c)/pi) exp(-(a(x^2 + x'^2) - 2 c x x')/2) exp(-i a' (x^2 - x'^2)/2)
struct MarginalKernel {
    double a = 1;
    double a_prime = 0;
    double c = 0;
    Mode mode = Mode::kFirst;
};

/// Traces out the other mode. For mode 1,
///   a = (2 alpha1 beta1 - gamma1^2 + gamma2^2) / (2 beta1), c = |gamma|^2 / (2 beta1),
///   a' = (alpha2 beta1 - gamma1 gamma2) / beta1;
/// mode 2 follows by alpha <-> beta.
MarginalKernel marginal_kernel(const QuadratureCoefficients &coeffs, Mode mode);

}  // namespace gaussmode
