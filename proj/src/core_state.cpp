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

#include "gaussmode/core_state.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace gaussmode {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

QuadratureCoefficients QuadratureCoefficients::validate(Complex alpha, Complex beta, Complex gamma) {
    if (!finite(alpha) || !finite(beta) || !finite(gamma)) {
        throw Error(ErrorCode::kNonFinite, "quadrature coefficients must be finite");
    }
    const double d2 = alpha.real() * beta.real() - gamma.real() * gamma.real();
    if (alpha.real() <= kPositivityTolerance || beta.real() <= kPositivityTolerance ||
        d2 <= kPositivityTolerance) {
        std::ostringstream msg;
        msg << "state is not normalizable: alpha1=" << alpha.real() << ", beta1=" << beta.real()
            << ", Delta^2=" << d2;
        throw Error(ErrorCode::kNonNormalizable, msg.str());
    }
    return {alpha, beta, gamma, d2};
}

double QuadratureCoefficients::delta() const { return std::sqrt(delta_squared_); }

double normalization(const QuadratureCoefficients &coeffs) {
    return std::sqrt(std::sqrt(coeffs.delta_squared()) / std::numbers::pi);
}

Complex wavefunction(const QuadratureCoefficients &coeffs, double q1, double q2) {
    const Complex exponent =
        coeffs.alpha() * (q1 * q1) + coeffs.beta() * (q2 * q2) + 2.0 * coeffs.gamma() * (q1 * q2);
    return normalization(coeffs) * std::exp(-0.5 * exponent);
}

SecondMoments second_moments(const QuadratureCoefficients &coeffs) {
    const double a1 = coeffs.alpha().real(), a2 = coeffs.alpha().imag();
    const double b1 = coeffs.beta().real(), b2 = coeffs.beta().imag();
    const double g1 = coeffs.gamma().real(), g2 = coeffs.gamma().imag();
    const double d2 = coeffs.delta_squared();
    const double inv = 1.0 / (2.0 * d2);

    SecondMoments m;
    m.q1q1 = b1 * inv;
    m.q2q2 = a1 * inv;
    m.q1q2 = -g1 * inv;

    m.p1p1 = (b1 * std::norm(coeffs.alpha()) - a1 * (g1 * g1 - g2 * g2) - 2.0 * g1 * g2 * a2) * inv;
    m.p2p2 = (a1 * std::norm(coeffs.beta()) - b1 * (g1 * g1 - g2 * g2) - 2.0 * g1 * g2 * b2) * inv;
    // Mode-asymmetric as written; it agrees with the symmetric form
    // gamma1/2 + (M_im Sigma M_im)_12 because alpha1 Delta^2 cancels.
    m.p1p2 = ((a1 * g1 + a2 * g2) * d2 + (a1 * g2 - a2 * g1) * (a1 * b2 - g1 * g2)) / (2.0 * a1 * d2);

    m.q1p1 = (g1 * g2 - a2 * b1) * inv;
    m.q1p2 = (g1 * b2 - g2 * b1) * inv;
    m.q2p1 = (g1 * a2 - g2 * a1) * inv;
    m.q2p2 = (g1 * g2 - a1 * b2) * inv;
    return m;
}

Eigen::Matrix4d CovarianceMatrix::full() const {
    Eigen::Matrix4d v;
    v.topLeftCorner<2, 2>() = block_a;
    v.topRightCorner<2, 2>() = block_c;
    v.bottomLeftCorner<2, 2>() = block_c.transpose();
    v.bottomRightCorner<2, 2>() = block_b;
    return v;
}

CovarianceMatrix covariance(const SecondMoments &m) {
    CovarianceMatrix cov;
    cov.block_a << m.q1q1, m.q1p1, m.q1p1, m.p1p1;
    cov.block_b << m.q2q2, m.q2p2, m.q2p2, m.p2p2;
    cov.block_c << m.q1q2, m.q1p2, m.q2p1, m.p1p2;
    return cov;
}

CovarianceMatrix covariance(const QuadratureCoefficients &coeffs) {
    return covariance(second_moments(coeffs));
}

MarginalKernel marginal_kernel(const QuadratureCoefficients &coeffs, Mode mode) {
    // Tracing out mode 2 keeps alpha; tracing out mode 1 is the same formula
    // with the roles of alpha and beta exchanged.
    const Complex kept = mode == Mode::kFirst ? coeffs.alpha() : coeffs.beta();
    const Complex traced = mode == Mode::kFirst ? coeffs.beta() : coeffs.alpha();
    const double k1 = kept.real(), k2 = kept.imag();
    const double t1 = traced.real();
    const double g1 = coeffs.gamma().real(), g2 = coeffs.gamma().imag();

    MarginalKernel kernel;
    kernel.mode = mode;
    kernel.a = (2.0 * k1 * t1 - g1 * g1 + g2 * g2) / (2.0 * t1);
    kernel.c = (g1 * g1 + g2 * g2) / (2.0 * t1);
    kernel.a_prime = (k2 * t1 - g1 * g2) / t1;
    return kernel;
}

}  // namespace gaussmode
