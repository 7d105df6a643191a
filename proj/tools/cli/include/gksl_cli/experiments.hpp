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

// Experiment runners behind `gksl run`. Each returns in-memory tables and a
// JSON summary; writing files is left to the caller so the same code serves
// golden-file verification.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gksl_cli/config.hpp"
#include "gksl_cli/csv.hpp"

namespace gksl::cli {

struct ExperimentResult {
  // (suffix, table); the empty suffix is written to {prefix}.csv, any other
  // to {prefix}.{suffix}.csv.
  std::vector<std::pair<std::string, CsvTable>> tables;
  Json results = Json::object();
  bool converged = true;
};

// Cross-field checks that the per-field schema cannot express. Throws ConfigError.
void check_consistency(const ExperimentConfig& config);

ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace gksl::cli
