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

#include <json.hpp>
#include <string>
#include <vector>

#include "gaussmode/entanglement.hpp"
#include "gaussmode/optics.hpp"
#include "gaussmode/oracle.hpp"

namespace gaussmode {

using Json = nlohmann::ordered_json;

/// Parse errors and schema violations throw Error(kInvalidInput); physical
/// violations surface as the validate() error codes.
Json parse_json(const std::string &text);

/// Accepts {"alpha": [re, im], "beta": [re, im], "gamma": [re, im]} or an
/// object carrying that under "coefficients".
QuadratureCoefficients coefficients_from_json(const Json &doc);
Json coefficients_to_json(const QuadratureCoefficients &coeffs);

/// {"circuit": [{"kind": "tms"|"sms"|"bs"|"phase", ...}, ...]} or a bare array.
/// "phi" defaults to 0 when omitted.
std::vector<OpticalElement> circuit_from_json(const Json &doc);
Json element_to_json(const OpticalElement &element);

Json analysis_to_json(const StateAnalysis &analysis);
Json verification_to_json(const VerificationReport &report);

/// 17 significant digits, "%.17g".
std::string format_double(double value);

/// Serializes with every floating-point number through format_double.
std::string dump_json(const Json &doc, int indent = 2);

}  // namespace gaussmode
