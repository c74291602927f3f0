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

#include <gtest/gtest.h>
#include <omp.h>

#include <cmath>

#include "gaussmode/kernels.hpp"
#include "gaussmode/sampling.hpp"

namespace gaussmode {
namespace {

TEST(GridSpec, MidpointNodes) {
    const GridSpec g{4.0, 16};
    EXPECT_DOUBLE_EQ(g.spacing(), 0.5);
    EXPECT_DOUBLE_EQ(g.node(0), -3.75);
    EXPECT_DOUBLE_EQ(g.node(15), 3.75);
    for (int i = 0; i < g.points; ++i) EXPECT_DOUBLE_EQ(g.node(i), -g.node(g.points - 1 - i));
}

TEST(MarginalMatrix, SerialAndParallelAgreeExactly) {
    Rng rng(301);
    for (int trial = 0; trial < 5; ++trial) {
        const MarginalKernel k = marginal_kernel(random_coefficients(rng), Mode::kFirst);
        const GridSpec g{6.0, 130};
        const Eigen::MatrixXd serial = kernels::marginal_matrix_serial(k, g);
        for (int threads : {1, 2, 3, 7}) {
            omp_set_num_threads(threads);
            EXPECT_EQ((kernels::marginal_matrix_parallel(k, g) - serial).cwiseAbs().maxCoeff(), 0.0);
        }
    }
}

TEST(MarginalMatrix, SymmetricWithExpectedEntries) {
    MarginalKernel k;
    k.a = 1.75;
    k.c = 0.25;
    const GridSpec g{8.0, 64};
    const Eigen::MatrixXd m = kernels::marginal_matrix_serial(k, g);
    EXPECT_EQ((m - m.transpose()).cwiseAbs().maxCoeff(), 0.0);
    const double xi = g.node(10), xj = g.node(40);
    const double expected = g.spacing() * std::sqrt((k.a - k.c) / M_PI) *
                            std::exp(-(k.a * (xi * xi + xj * xj) - 2 * k.c * xi * xj) / 2);
    EXPECT_NEAR(m(10, 40), expected, 1e-16);
}

TEST(MarginalMatrix, HermitianVariantCarriesPhase) {
    MarginalKernel k;
    k.a = 1.2;
    k.c = 0.4;
    k.a_prime = 0.7;
    const GridSpec g{7.0, 40};
    const Eigen::MatrixXd real_part = kernels::marginal_matrix_serial(k, g);
    const Eigen::MatrixXcd m = kernels::marginal_matrix_hermitian(k, g);
    EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-16);
    EXPECT_LT((m.cwiseAbs() - real_part).cwiseAbs().maxCoeff(), 1e-16);
    const double phase = -0.5 * k.a_prime * (g.node(3) * g.node(3) - g.node(20) * g.node(20));
    EXPECT_NEAR(std::abs(m(3, 20) / std::abs(m(3, 20)) - std::polar(1.0, phase)), 0.0, 1e-12);
}

TEST(WavefunctionMoments, SerialAndParallelAgreeExactly) {
    Rng rng(302);
    for (int trial = 0; trial < 3; ++trial) {
        const auto c = random_coefficients(rng);
        const GridSpec g{9.0, 96};
        const MomentIntegrals serial = kernels::wavefunction_moments_serial(c, g, g.spacing() / 64);
        for (int threads : {1, 2, 5}) {
            omp_set_num_threads(threads);
            const MomentIntegrals parallel = kernels::wavefunction_moments_parallel(c, g, g.spacing() / 64);
            EXPECT_EQ(parallel.norm, serial.norm);
            EXPECT_EQ(parallel.moments.values(), serial.moments.values());
        }
    }
}

TEST(WavefunctionMoments, VacuumValues) {
    const GridSpec g{8.0, 256};
    const MomentIntegrals m = kernels::wavefunction_moments_serial(QuadratureCoefficients::vacuum(), g, g.spacing() / 64);
    EXPECT_NEAR(m.norm, 1.0, 1e-12);
    EXPECT_NEAR(m.moments.q1q1, 0.5, 1e-12);
    EXPECT_NEAR(m.moments.p2p2, 0.5, 1e-10);
    EXPECT_NEAR(m.moments.q1q2, 0.0, 1e-14);
    EXPECT_NEAR(m.moments.q1p1, 0.0, 1e-14);
}

}  // namespace
}  // namespace gaussmode
