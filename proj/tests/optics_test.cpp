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

#include <cmath>
#include <numbers>
#include <vector>

#include "gaussmode/entanglement.hpp"
#include "gaussmode/optics.hpp"
#include "gaussmode/sampling.hpp"
#include "test_support.hpp"

namespace gaussmode {
namespace {

using testing::throws_code;
namespace frozen = testing::frozen;
constexpr double kPi = std::numbers::pi;

void expect_coefficients_near(const QuadratureCoefficients &got, const QuadratureCoefficients &want, double tol) {
    EXPECT_NEAR(std::abs(got.alpha() - want.alpha()), 0.0, tol * (1.0 + std::abs(want.alpha())));
    EXPECT_NEAR(std::abs(got.beta() - want.beta()), 0.0, tol * (1.0 + std::abs(want.beta())));
    EXPECT_NEAR(std::abs(got.gamma() - want.gamma()), 0.0, tol * (1.0 + std::abs(want.gamma())));
}

double eof(const QuadratureCoefficients &c) { return entanglement_of_formation(c).e_f_nats; }

TEST(SqueezeParams, ReducesPhase) {
    const SqueezeParams p = SqueezeParams::make(0.5, -kPi / 2);
    EXPECT_NEAR(p.phi, 3 * kPi / 2, 1e-15);
    EXPECT_NEAR(SqueezeParams::make(0.5, 5 * kPi).phi, kPi, 1e-14);
}

TEST(SqueezeParams, RejectsInvalid) {
    EXPECT_TRUE(throws_code([] { SqueezeParams::make(-0.1, 0.0); }, ErrorCode::kInvalidInput));
    EXPECT_TRUE(throws_code([] { SqueezeParams::make(NAN, 0.0); }, ErrorCode::kInvalidInput));
    EXPECT_TRUE(throws_code([] { SqueezeParams::make(1.0, INFINITY); }, ErrorCode::kInvalidInput));
}

TEST(Elements, BeamSplitterAngleRange) {
    EXPECT_NO_THROW(make_beam_splitter(0.0, 0.0));
    EXPECT_NO_THROW(make_beam_splitter(kPi, 1.0));
    EXPECT_TRUE(throws_code([] { make_beam_splitter(-0.01, 0.0); }, ErrorCode::kInvalidInput));
    EXPECT_TRUE(throws_code([] { make_beam_splitter(3.2, 0.0); }, ErrorCode::kInvalidInput));
}

TEST(Elements, TagsAndLocality) {
    EXPECT_EQ(element_tag(make_two_mode_squeeze(1, 0)), "tms");
    EXPECT_EQ(element_tag(make_one_mode_squeeze(Mode::kSecond, 1, 0)), "sms");
    EXPECT_EQ(element_tag(make_beam_splitter(1, 0)), "bs");
    EXPECT_EQ(element_tag(make_phase_shift(Mode::kFirst, 1)), "phase");
    EXPECT_TRUE(is_local(make_one_mode_squeeze(Mode::kFirst, 1, 0)));
    EXPECT_TRUE(is_local(make_phase_shift(Mode::kSecond, 1)));
    EXPECT_FALSE(is_local(make_beam_splitter(1, 0)));
    EXPECT_FALSE(is_local(make_two_mode_squeeze(1, 0)));
}

TEST(Bogoliubov, PhaseShift) {
    const BogoliubovMap m = element_to_bogoliubov(make_phase_shift(Mode::kFirst, 0.8));
    EXPECT_NEAR(std::abs(m.u(0, 0) - std::polar(1.0, -0.8)), 0.0, 1e-15);
    EXPECT_EQ(m.u(1, 1), Complex(1.0));
    EXPECT_EQ(m.u(0, 1), Complex(0.0));
    EXPECT_TRUE(m.v.isZero());
}

TEST(Bogoliubov, BeamSplitter) {
    const double theta = 0.9, phi = 0.4;
    const BogoliubovMap m = element_to_bogoliubov(make_beam_splitter(theta, phi));
    const Complex e = std::polar(1.0, -phi);
    Eigen::Matrix2cd expected;
    expected << e * std::cos(theta / 2), -e * std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2);
    EXPECT_TRUE(m.u.isApprox(expected, 1e-15));
    EXPECT_TRUE(m.v.isZero());
    EXPECT_TRUE((m.u * m.u.adjoint()).isApprox(Eigen::Matrix2cd::Identity(), 1e-15));
}

TEST(Bogoliubov, TwoModeSqueeze) {
    const BogoliubovMap m = element_to_bogoliubov(make_two_mode_squeeze(0.7, 1.2));
    EXPECT_TRUE(m.u.isApprox(std::cosh(0.7) * Eigen::Matrix2cd::Identity()));
    EXPECT_EQ(m.v(0, 0), Complex(0.0));
    EXPECT_EQ(m.v(1, 1), Complex(0.0));
    EXPECT_NEAR(std::abs(m.v(0, 1) - std::polar(std::sinh(0.7), 1.2)), 0.0, 1e-15);
    EXPECT_EQ(m.v(0, 1), m.v(1, 0));
}

TEST(Bogoliubov, OneModeSqueeze) {
    const BogoliubovMap m = element_to_bogoliubov(make_one_mode_squeeze(Mode::kSecond, 0.4, 0.3));
    EXPECT_EQ(m.u(0, 0), Complex(1.0));
    EXPECT_DOUBLE_EQ(m.u(1, 1).real(), std::cosh(0.4));
    EXPECT_NEAR(std::abs(m.v(1, 1) - std::polar(std::sinh(0.4), 0.3)), 0.0, 1e-15);
    EXPECT_EQ(m.v(0, 0), Complex(0.0));
}

TEST(Bogoliubov, CompositionsAreSymplectic) {
    Rng rng(201);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<OpticalElement> circuit;
        const int depth = 1 + static_cast<int>(uniform(rng, 0, 6));
        for (int k = 0; k < depth; ++k) {
            if (uniform(rng, 0, 1) < 0.3) {
                circuit.push_back(make_two_mode_squeeze(uniform(rng, 0, 1), uniform(rng, 0, 2 * kPi)));
            } else if (uniform(rng, 0, 1) < 0.5) {
                circuit.push_back(make_beam_splitter(uniform(rng, 0, kPi), uniform(rng, 0, 2 * kPi)));
            } else {
                circuit.push_back(random_local_element(rng));
            }
        }
        EXPECT_LT(element_to_bogoliubov(circuit.front()).symplectic_defect(), 1e-12);
        EXPECT_LT(compose(circuit).symplectic_defect(), 1e-12 * std::exp(2.0 * depth));
    }
}

TEST(Bogoliubov, IdentityIsNeutral) {
    const BogoliubovMap m = element_to_bogoliubov(make_two_mode_squeeze(0.5, 0.2));
    const BogoliubovMap left = BogoliubovMap::identity().then(m);
    const BogoliubovMap right = m.then(BogoliubovMap::identity());
    EXPECT_TRUE(left.u.isApprox(m.u) && left.v.isApprox(m.v));
    EXPECT_TRUE(right.u.isApprox(m.u) && right.v.isApprox(m.v));
}

TEST(TwoModeSqueezed, Vacuum) {
    expect_coefficients_near(two_mode_squeezed(SqueezeParams::make(0.0, 1.0)), QuadratureCoefficients::vacuum(), 0);
}

TEST(TwoModeSqueezed, UnitSqueezing) {
    const auto c = two_mode_squeezed(SqueezeParams::make(1.0, 0.0));
    EXPECT_NEAR(c.alpha().real(), frozen::kCosh2, 1e-14);
    EXPECT_NEAR(c.beta().real(), frozen::kCosh2, 1e-14);
    EXPECT_NEAR(c.gamma().real(), frozen::kSinh2, 1e-14);
    EXPECT_EQ(c.alpha().imag(), 0.0);
    EXPECT_EQ(c.gamma().imag(), 0.0);
}

TEST(TwoModeSqueezed, HyperbolicIdentityAndPhaseIndependence) {
    for (double r : {0.1, 0.5, 1.0, 2.0}) {
        for (int k = 0; k < 8; ++k) {
            const auto c = two_mode_squeezed(SqueezeParams::make(r, 2 * kPi * k / 8));
            const Complex identity = c.alpha() * c.alpha() - c.gamma() * c.gamma();
            EXPECT_NEAR(std::abs(identity - 1.0), 0.0, 1e-12 * std::cosh(2 * r) * std::cosh(2 * r));
            EXPECT_NEAR(eof(c), squeezed_eof(r), 1e-10);
        }
    }
}

TEST(ApplyCircuit, TwoModeSqueezeMatchesClosedForm) {
    for (double r : {0.0, 0.3, 1.0, 2.0}) {
        for (double phi : {0.0, 0.9, 4.0}) {
            const std::vector<OpticalElement> circuit = {make_two_mode_squeeze(r, phi)};
            expect_coefficients_near(apply_circuit(circuit), two_mode_squeezed(SqueezeParams::make(r, phi)), 1e-12);
        }
    }
}

TEST(ApplyCircuit, SqueezeThenOneModeMatchesClosedForm) {
    Rng rng(202);
    for (int trial = 0; trial < 100; ++trial) {
        const double r12 = uniform(rng, 0, 1.5), phi12 = uniform(rng, 0, 2 * kPi);
        const double r1 = uniform(rng, 0, 1.5), phi1 = uniform(rng, 0, 2 * kPi);
        const std::vector<OpticalElement> circuit = {make_two_mode_squeeze(r12, phi12),
                                                     make_one_mode_squeeze(Mode::kFirst, r1, phi1)};
        expect_coefficients_near(apply_circuit(circuit), squeeze_then_onemode(r12, phi12, r1, phi1), 1e-12);
    }
}

TEST(ApplyCircuit, SqueezeThenOneModeLimits) {
    const auto symmetric = squeeze_then_onemode(0.8, 0.3, 0.0, 1.1);
    EXPECT_NEAR(std::abs(symmetric.alpha() - symmetric.beta()), 0.0, 1e-14);
    const Complex l = std::polar(std::tanh(0.8), 0.3);
    EXPECT_NEAR(std::abs(symmetric.alpha() - (1.0 + l * l) / (1.0 - l * l)), 0.0, 1e-14);

    const auto product = squeeze_then_onemode(0.0, 0.3, 0.9, 1.1);
    EXPECT_EQ(product.gamma(), Complex(0.0));
    EXPECT_EQ(eof(product), 0.0);
    EXPECT_GT(std::abs(product.alpha() - product.beta()), 0.1);
}

TEST(ApplyCircuit, SqueezeThenOneModeSatisfiesAnnihilationConditions) {
    const std::vector<OpticalElement> circuit = {make_two_mode_squeeze(1.0, 0.0),
                                                 make_one_mode_squeeze(Mode::kFirst, 0.5, 0.0)};
    const auto c = squeeze_then_onemode(1.0, 0.0, 0.5, 0.0);
    const Annihilators cond = Annihilators::vacuum().transformed(compose(circuit));
    const Eigen::Matrix2cd plus = cond.x + cond.y, minus = cond.x - cond.y;
    // b psi = ((X + Y) q + (X - Y) grad) psi / sqrt 2
    const double h = 1e-3;
    double worst = 0.0;
    for (double x = -2.0; x <= 2.0; x += 0.5) {
        for (double y = -2.0; y <= 2.0; y += 0.5) {
            const auto d = [&](double dx, double dy) {
                return (8.0 * (wavefunction(c, x + dx, y + dy) - wavefunction(c, x - dx, y - dy)) -
                        (wavefunction(c, x + 2 * dx, y + 2 * dy) - wavefunction(c, x - 2 * dx, y - 2 * dy))) /
                       (12.0 * h);
            };
            const Eigen::Vector2cd grad(d(h, 0), d(0, h));
            const Complex psi = wavefunction(c, x, y);
            const Eigen::Vector2cd residual = plus * Eigen::Vector2d(x, y).cast<Complex>() * psi + minus * grad;
            worst = std::max(worst, residual.cwiseAbs().maxCoeff());
        }
    }
    EXPECT_LT(worst, 1e-8);
}

TEST(ApplyCircuit, BeamSplitterMatchesClosedForm) {
    for (double r : {0.3, 1.0}) {
        for (double theta : {0.0, 0.4, kPi / 2, 2.5, kPi}) {
            for (double phi : {0.0, 1.3}) {
                const std::vector<OpticalElement> circuit = {make_two_mode_squeeze(r, 0.0),
                                                             make_beam_splitter(theta, phi)};
                expect_coefficients_near(apply_circuit(circuit), beamsplit_squeezed(r, theta, phi), 1e-12);
            }
        }
    }
}

TEST(ApplyCircuit, BeamSplitterLimits) {
    for (double r : {0.25, 1.0, 2.0}) {
        const auto balanced = beamsplit_squeezed(r, kPi / 2, 0.6);
        EXPECT_NEAR(std::abs(balanced.gamma()), 0.0, 1e-15);
        EXPECT_NEAR(eof(balanced), 0.0, 1e-12);
        EXPECT_NEAR(eof(beamsplit_squeezed(r, 0.0, 0.6)), squeezed_eof(r), 1e-10);
    }
    for (double theta : {0.0, 1.0, kPi}) {
        expect_coefficients_near(beamsplit_squeezed(0.0, theta, 0.4), QuadratureCoefficients::vacuum(), 1e-15);
    }
}

TEST(ApplyCircuit, ElementsActInListOrder) {
    const std::vector<OpticalElement> forward = {make_two_mode_squeeze(0.7, 0.0),
                                                 make_one_mode_squeeze(Mode::kFirst, 0.6, 0.0)};
    const std::vector<OpticalElement> reversed = {forward[1], forward[0]};
    const auto a = apply_circuit(forward), b = apply_circuit(reversed);
    expect_coefficients_near(a, squeeze_then_onemode(0.7, 0.0, 0.6, 0.0), 1e-12);
    EXPECT_GT(std::abs(a.alpha() - b.alpha()), 1e-3);
}

TEST(ApplyCircuit, PassiveCircuitsLeaveVacuumUnentangled) {
    Rng rng(203);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<OpticalElement> circuit;
        for (int k = 0; k < 4; ++k) {
            circuit.push_back(make_beam_splitter(uniform(rng, 0, kPi), uniform(rng, 0, 2 * kPi)));
            circuit.push_back(make_phase_shift(uniform(rng, 0, 1) < 0.5 ? Mode::kFirst : Mode::kSecond,
                                               uniform(rng, -kPi, kPi)));
        }
        const auto c = apply_circuit(circuit);
        EXPECT_NEAR(std::abs(c.gamma()), 0.0, 1e-14);
        EXPECT_NEAR(eof(c), 0.0, 1e-15);
    }
}

TEST(ApplyElements, LocalElementsPreserveEntanglement) {
    Rng rng(204);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = random_coefficients(rng);
        const auto el = random_local_element(rng);
        const auto after = apply_element(c, el);
        EXPECT_NEAR(omega_marginal(after), omega_marginal(c), 1e-10);
        EXPECT_NEAR(eof(after), eof(c), 1e-10);
    }
}

TEST(ApplyElements, IdentityRoundTrip) {
    Rng rng(205);
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = random_coefficients(rng);
        const std::vector<OpticalElement> none = {make_phase_shift(Mode::kFirst, 0.0)};
        expect_coefficients_near(apply_elements(c, none), c, 1e-12);
    }
}

TEST(ApplyElements, MatchesCircuitFromVacuum) {
    const std::vector<OpticalElement> head = {make_two_mode_squeeze(0.9, 0.2)};
    const std::vector<OpticalElement> tail = {make_beam_splitter(0.8, 0.1),
                                              make_one_mode_squeeze(Mode::kSecond, 0.3, 2.0)};
    std::vector<OpticalElement> all = head;
    all.insert(all.end(), tail.begin(), tail.end());
    expect_coefficients_near(apply_elements(apply_circuit(head), tail), apply_circuit(all), 1e-12);
}

TEST(ApplyCircuit, Errors) {
    EXPECT_TRUE(throws_code([] { apply_circuit({}); }, ErrorCode::kInvalidInput));
    // tanh 40 rounds to 1, so the annihilation conditions become singular.
    const std::vector<OpticalElement> extreme = {make_two_mode_squeeze(40.0, 0.0)};
    EXPECT_TRUE(throws_code([&] { apply_circuit(extreme); }, ErrorCode::kNonNormalizableResult));
}

TEST(Annihilators, OfCoefficientsRoundTrips) {
    Rng rng(206);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = random_coefficients(rng);
        expect_coefficients_near(solve_coefficients(Annihilators::of(c)), c, 1e-13);
    }
}

}  // namespace
}  // namespace gaussmode
