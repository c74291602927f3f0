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

#include "gaussmode/optics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "overloaded.hpp"

namespace gaussmode {

namespace {

using detail::Overloaded;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_finite(double value, const char *name) {
    if (!std::isfinite(value)) {
        throw Error(ErrorCode::kInvalidInput, std::string(name) + " must be finite");
    }
}

int index_of(Mode mode) { return mode == Mode::kFirst ? 0 : 1; }

}  // namespace

SqueezeParams SqueezeParams::make(double r, double phi) {
    require_finite(r, "squeeze magnitude r");
    require_finite(phi, "squeeze phase phi");
    if (r < 0.0) throw Error(ErrorCode::kInvalidInput, "squeeze magnitude r must be >= 0");
    double reduced = std::fmod(phi, kTwoPi);
    if (reduced < 0.0) reduced += kTwoPi;
    return {r, reduced};
}

OpticalElement make_two_mode_squeeze(double r, double phi) { return TwoModeSqueeze{SqueezeParams::make(r, phi)}; }

OpticalElement make_one_mode_squeeze(Mode mode, double r, double phi) {
    return OneModeSqueeze{mode, SqueezeParams::make(r, phi)};
}

OpticalElement make_beam_splitter(double theta, double phi) {
    require_finite(theta, "beam splitter theta");
    require_finite(phi, "beam splitter phi");
    if (theta < 0.0 || theta > std::numbers::pi) {
        throw Error(ErrorCode::kInvalidInput, "beam splitter theta must lie in [0, pi]");
    }
    return BeamSplitter{theta, phi};
}

OpticalElement make_phase_shift(Mode mode, double phi) {
    require_finite(phi, "phase shift phi");
    return PhaseShift{mode, phi};
}

std::string_view element_tag(const OpticalElement &element) {
    return std::visit(Overloaded{[](const TwoModeSqueeze &) { return std::string_view("tms"); },
                                 [](const OneModeSqueeze &) { return std::string_view("sms"); },
                                 [](const BeamSplitter &) { return std::string_view("bs"); },
                                 [](const PhaseShift &) { return std::string_view("phase"); }},
                      element);
}

bool is_local(const OpticalElement &element) {
    return std::holds_alternative<OneModeSqueeze>(element) || std::holds_alternative<PhaseShift>(element);
}

BogoliubovMap BogoliubovMap::then(const BogoliubovMap &next) const {
    // G2 G1 a G1^dag G2^dag = U1 (U2 a + V2 a^dag) + V1 (U2 a + V2 a^dag)^dag
    return {u * next.u + v * next.v.conjugate(), u * next.v + v * next.u.conjugate()};
}

double BogoliubovMap::symplectic_defect() const {
    const Eigen::Matrix2cd commutator = u * u.adjoint() - v * v.adjoint() - Eigen::Matrix2cd::Identity();
    const Eigen::Matrix2cd cross = u * v.transpose() - v * u.transpose();
    return std::max(commutator.cwiseAbs().maxCoeff(), cross.cwiseAbs().maxCoeff());
}

BogoliubovMap element_to_bogoliubov(const OpticalElement &element) {
    BogoliubovMap map;
    std::visit(Overloaded{
                   [&](const TwoModeSqueeze &el) {
                       const Complex s = std::polar(std::sinh(el.params.r), el.params.phi);
                       map.u *= std::cosh(el.params.r);
                       map.v << 0.0, s, s, 0.0;
                   },
                   [&](const OneModeSqueeze &el) {
                       const int k = index_of(el.mode);
                       map.u(k, k) = std::cosh(el.params.r);
                       map.v(k, k) = std::polar(std::sinh(el.params.r), el.params.phi);
                   },
                   [&](const BeamSplitter &el) {
                       const Complex phase = std::polar(1.0, -el.phi);
                       const double c = std::cos(0.5 * el.theta), s = std::sin(0.5 * el.theta);
                       map.u << phase * c, -phase * s, s, c;
                   },
                   [&](const PhaseShift &el) {
                       const int k = index_of(el.mode);
                       map.u(k, k) = std::polar(1.0, -el.phi);
                   },
               },
               element);
    return map;
}

BogoliubovMap compose(std::span<const OpticalElement> elements) {
    BogoliubovMap total;
    for (const auto &el : elements) total = total.then(element_to_bogoliubov(el));
    return total;
}

Annihilators Annihilators::of(const QuadratureCoefficients &coeffs) {
    // b = X a + Y a^dag is proportional to (X + Y) q + i (X - Y) p, so
    // X - Y = 1 and X + Y = M gives (M q + i p), which annihilates Psi.
    Eigen::Matrix2cd m;
    m << coeffs.alpha(), coeffs.gamma(), coeffs.gamma(), coeffs.beta();
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    return {0.5 * (m + id), 0.5 * (m - id)};
}

Annihilators Annihilators::transformed(const BogoliubovMap &map) const {
    return {x * map.u + y * map.v.conjugate(), x * map.v + y * map.u.conjugate()};
}

QuadratureCoefficients solve_coefficients(const Annihilators &conditions) {
    // (X + Y) q Psi + i (X - Y) p Psi = 0 with p Psi = i M q Psi.
    const Eigen::Matrix2cd lhs = conditions.x - conditions.y;
    const Eigen::Matrix2cd rhs = conditions.x + conditions.y;
    const Eigen::PartialPivLU<Eigen::Matrix2cd> lu(lhs);
    const double rcond = lu.rcond();
    if (!(rcond * kMaxConditionNumber >= 1.0)) {
        std::ostringstream msg;
        msg << "annihilation conditions are degenerate (reciprocal condition " << rcond << ")";
        throw Error(ErrorCode::kNonNormalizableResult, msg.str());
    }
    const Eigen::Matrix2cd m = lu.solve(rhs);
    const Complex gamma = 0.5 * (m(0, 1) + m(1, 0));
    try {
        return QuadratureCoefficients::validate(m(0, 0), m(1, 1), gamma);
    } catch (const Error &err) {
        throw Error(ErrorCode::kNonNormalizableResult, std::string("circuit output: ") + err.what());
    }
}

QuadratureCoefficients apply_circuit(std::span<const OpticalElement> elements) {
    if (elements.empty()) throw Error(ErrorCode::kInvalidInput, "circuit must contain at least one element");
    return solve_coefficients(Annihilators::vacuum().transformed(compose(elements)));
}

QuadratureCoefficients apply_elements(const QuadratureCoefficients &coeffs,
                                      std::span<const OpticalElement> elements) {
    return solve_coefficients(Annihilators::of(coeffs).transformed(compose(elements)));
}

QuadratureCoefficients apply_element(const QuadratureCoefficients &coeffs, const OpticalElement &element) {
    return apply_elements(coeffs, std::span<const OpticalElement>(&element, 1));
}

QuadratureCoefficients two_mode_squeezed(const SqueezeParams &params) {
    const Complex l = -std::polar(std::tanh(params.r), params.phi);
    const Complex denom = 1.0 - l * l;
    const Complex diag = (1.0 + l * l) / denom;
    return QuadratureCoefficients::validate(diag, diag, -2.0 * l / denom);
}

QuadratureCoefficients squeeze_then_onemode(double r12, double phi12, double r1, double phi1) {
    const Complex l12 = std::polar(std::tanh(r12), phi12);
    const Complex l1 = std::polar(std::tanh(r1), phi1);
    const Complex l1c = std::conj(l1);
    const Complex l12sq = l12 * l12;
    const Complex denom = (1.0 - l1) - l12sq * (1.0 - l1c);
    const Complex alpha = ((1.0 + l1) + l12sq * (1.0 + l1c)) / denom;
    const Complex beta = ((1.0 - l1) + l12sq * (1.0 - l1c)) / denom;
    const Complex gamma = 2.0 * l12 * std::sqrt(Complex(1.0 - std::norm(l1))) / denom;
    return QuadratureCoefficients::validate(alpha, beta, gamma);
}

QuadratureCoefficients beamsplit_squeezed(double r12, double theta, double phi) {
    const Complex l = std::polar(std::tanh(r12), phi);
    const Complex denom = 1.0 - l * l;
    const double s = std::sin(theta), c = std::cos(theta);
    const Complex alpha = (1.0 + 2.0 * l * s + l * l) / denom;
    const Complex beta = (1.0 - 2.0 * l * s + l * l) / denom;
    const Complex gamma = 2.0 * l * c / denom;
    return QuadratureCoefficients::validate(alpha, beta, gamma);
}

}  // namespace gaussmode
