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

#include <iosfwd>
#include <string>
#include <vector>

namespace gaussmode::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInvalidInput = 2,
    kNonPhysicalResult = 3,
    kVerificationFailed = 4,
};

/// Environment variable overriding the default E_F tolerance of `verify`.
inline constexpr const char *kToleranceEnv = "GAUSSMODE_TOL";

/// Runs one invocation. `args` excludes the program name; "-" as an input
/// path reads from `in`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace gaussmode::cli
