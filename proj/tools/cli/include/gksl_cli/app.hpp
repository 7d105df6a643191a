// Copyright 2026 The gksl Authors
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

// Command-line front end: `run <config>`, `verify --suite fast|full` and
// `schema --print`.
//
// Exit codes: 0 success, 1 verification failures, 2 schema or usage error,
// 3 engine error, 4 non-convergence (outputs written and flagged partial).

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gksl_cli/config.hpp"
#include "gksl_cli/experiments.hpp"

namespace gksl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitEngine = 3;
inline constexpr int kExitNonConvergence = 4;

// Overrides the directory of relative output prefixes.
inline constexpr const char* kOutputDirEnv = "GKSL_OUTPUT_DIR";

// Writes {prefix}*.csv and {prefix}.meta.json; returns the written paths.
std::vector<std::string> write_outputs(const ExperimentConfig& config, const ExperimentResult& result,
                                       const std::string& prefix, const std::string& status,
                                       const std::string& message = {});

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gksl::cli
