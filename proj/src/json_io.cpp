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

#include "gaussmode/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "overloaded.hpp"

namespace gaussmode {

namespace {

[[noreturn]] void invalid(const std::string &what) { throw Error(ErrorCode::kInvalidInput, what); }

using detail::Overloaded;

Complex complex_field(const Json &obj, const char *key) {
    if (!obj.contains(key)) invalid(std::string("missing coefficient \"") + key + "\"");
    const Json &value = obj.at(key);
    if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
        invalid(std::string("coefficient \"") + key + "\" must be a [re, im] pair of numbers");
    }
    return {value[0].get<double>(), value[1].get<double>()};
}

double number_field(const Json &obj, const char *key, std::optional<double> fallback = std::nullopt) {
    if (!obj.contains(key)) {
        if (fallback) return *fallback;
        invalid(std::string("circuit element is missing \"") + key + "\"");
    }
    if (!obj.at(key).is_number()) invalid(std::string("\"") + key + "\" must be a number");
    return obj.at(key).get<double>();
}

Mode mode_field(const Json &obj) {
    if (!obj.contains("mode") || !obj.at("mode").is_number_integer()) {
        invalid("single-mode element needs an integer \"mode\" (1 or 2)");
    }
    const auto mode = obj.at("mode").get<long long>();
    if (mode != 1 && mode != 2) invalid("\"mode\" must be 1 or 2");
    return mode == 1 ? Mode::kFirst : Mode::kSecond;
}

int mode_number(Mode mode) { return mode == Mode::kFirst ? 1 : 2; }

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

void write_value(std::ostringstream &out, const Json &value, int indent, int depth) {
    const auto newline = [&](int level) {
        if (indent < 0) return;
        out << '\n' << std::string(static_cast<std::size_t>(indent * level), ' ');
    };
    switch (value.type()) {
        case Json::value_t::object: {
            if (value.empty()) {
                out << "{}";
                return;
            }
            out << '{';
            bool first = true;
            for (const auto &[key, item] : value.items()) {
                if (!first) out << ',';
                first = false;
                newline(depth + 1);
                out << Json(key).dump() << (indent < 0 ? ":" : ": ");
                write_value(out, item, indent, depth + 1);
            }
            newline(depth);
            out << '}';
            return;
        }
        case Json::value_t::array: {
            if (value.empty()) {
                out << "[]";
                return;
            }
            const bool nested = std::any_of(value.begin(), value.end(),
                                            [](const Json &item) { return item.is_structured(); });
            out << '[';
            bool first = true;
            for (const auto &item : value) {
                if (!first) out << (indent < 0 || nested ? "," : ", ");
                first = false;
                if (nested) newline(depth + 1);
                write_value(out, item, indent, depth + 1);
            }
            if (nested) newline(depth);
            out << ']';
            return;
        }
        case Json::value_t::number_float: {
            const double x = value.get<double>();
            out << (std::isfinite(x) ? format_double(x) : "null");
            return;
        }
        default:
            out << value.dump();
    }
}

}  // namespace

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &err) {
        invalid(std::string("malformed JSON: ") + err.what());
    }
}

QuadratureCoefficients coefficients_from_json(const Json &doc) {
    const Json &obj = doc.is_object() && doc.contains("coefficients") ? doc.at("coefficients") : doc;
    if (!obj.is_object()) invalid("coefficients must be a JSON object");
    return QuadratureCoefficients::validate(complex_field(obj, "alpha"), complex_field(obj, "beta"),
                                            complex_field(obj, "gamma"));
}

Json coefficients_to_json(const QuadratureCoefficients &coeffs) {
    Json out = Json::object();
    out["alpha"] = complex_to_json(coeffs.alpha());
    out["beta"] = complex_to_json(coeffs.beta());
    out["gamma"] = complex_to_json(coeffs.gamma());
    return out;
}

std::vector<OpticalElement> circuit_from_json(const Json &doc) {
    const Json &list = doc.is_object() && doc.contains("circuit") ? doc.at("circuit") : doc;
    if (!list.is_array()) invalid("circuit must be a JSON array of elements");

    std::vector<OpticalElement> elements;
    for (const Json &item : list) {
        if (!item.is_object() || !item.contains("kind") || !item.at("kind").is_string()) {
            invalid("each circuit element needs a string \"kind\"");
        }
        const auto kind = item.at("kind").get<std::string>();
        if (kind == "tms") {
            elements.push_back(make_two_mode_squeeze(number_field(item, "r"), number_field(item, "phi", 0.0)));
        } else if (kind == "sms") {
            elements.push_back(
                make_one_mode_squeeze(mode_field(item), number_field(item, "r"), number_field(item, "phi", 0.0)));
        } else if (kind == "bs") {
            elements.push_back(make_beam_splitter(number_field(item, "theta"), number_field(item, "phi", 0.0)));
        } else if (kind == "phase") {
            elements.push_back(make_phase_shift(mode_field(item), number_field(item, "phi")));
        } else {
            invalid("unknown circuit element kind \"" + kind + "\"");
        }
    }
    return elements;
}

Json element_to_json(const OpticalElement &element) {
    Json out = Json::object();
    out["kind"] = std::string(element_tag(element));
    std::visit(Overloaded{[&](const TwoModeSqueeze &el) {
                              out["r"] = el.params.r;
                              out["phi"] = el.params.phi;
                          },
                          [&](const OneModeSqueeze &el) {
                              out["mode"] = mode_number(el.mode);
                              out["r"] = el.params.r;
                              out["phi"] = el.params.phi;
                          },
                          [&](const BeamSplitter &el) {
                              out["theta"] = el.theta;
                              out["phi"] = el.phi;
                          },
                          [&](const PhaseShift &el) {
                              out["mode"] = mode_number(el.mode);
                              out["phi"] = el.phi;
                          }},
               element);
    return out;
}

Json analysis_to_json(const StateAnalysis &analysis) {
    Json moments = Json::object();
    const auto values = analysis.moments.values();
    for (std::size_t k = 0; k < values.size(); ++k) moments[std::string(SecondMoments::kNames[k])] = values[k];

    Json dets = Json::object();
    dets["det_a"] = analysis.dets.det_a;
    dets["det_b"] = analysis.dets.det_b;
    dets["det_c"] = analysis.dets.det_c;
    dets["det_v"] = analysis.dets.det_v;
    dets["tr_term"] = analysis.dets.tr_term;

    Json out = Json::object();
    out["coefficients"] = coefficients_to_json(analysis.coeffs);
    out["moments"] = std::move(moments);
    out["determinants"] = std::move(dets);
    out["e_s"] = analysis.simon.e_s;
    out["entangled"] = analysis.simon.entangled;
    out["omega"] = analysis.entanglement.omega;
    out["e_f_nats"] = analysis.entanglement.e_f_nats;
    out["e_f_bits"] = nats_to_bits(analysis.entanglement.e_f_nats);
    out["heisenberg_residual"] = analysis.entanglement.heisenberg_two_mode;
    out["spectrum_ratio"] = analysis.entanglement.spectrum_ratio;
    return out;
}

Json verification_to_json(const VerificationReport &report) {
    Json grid = Json::object();
    grid["L"] = report.grid.half_width;
    grid["N"] = report.grid.points;

    Json out = Json::object();
    out["e_f_closed_form"] = report.e_f_closed_form;
    out["e_f_oracle"] = report.e_f_oracle;
    out["abs_diff"] = report.abs_diff;
    out["grid"] = std::move(grid);
    out["moment_audit_max_abs_diff"] = report.moment_audit_max_abs_diff;
    out["passed"] = report.passed;
    return out;
}

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string dump_json(const Json &doc, int indent) {
    std::ostringstream out;
    write_value(out, doc, indent, 0);
    return out.str();
}

}  // namespace gaussmode
