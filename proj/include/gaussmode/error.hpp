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

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaussmode {

enum class ErrorCode {
    kNonNormalizable,
    kNonFinite,
    kKernelNotPhysical,
    kNotSymmetric,
    kGridTooCoarse,
    kInvalidGrid,
    kMarginalMismatch,
    kNonNormalizableResult,
    kInvalidInput,
};

/// Machine-readable snake_case name, used in CLI error objects.
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const { return error_name(code_); }

   private:
    ErrorCode code_;
};

inline std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kNonNormalizable:
            return "non_normalizable";
        case ErrorCode::kNonFinite:
            return "non_finite";
        case ErrorCode::kKernelNotPhysical:
            return "kernel_not_physical";
        case ErrorCode::kNotSymmetric:
            return "not_symmetric";
        case ErrorCode::kGridTooCoarse:
            return "grid_too_coarse";
        case ErrorCode::kInvalidGrid:
            return "invalid_grid";
        case ErrorCode::kMarginalMismatch:
            return "marginal_mismatch";
        case ErrorCode::kNonNormalizableResult:
            return "non_normalizable_result";
        case ErrorCode::kInvalidInput:
            return "invalid_input";
    }
    return "unknown";
}

}  // namespace gaussmode
