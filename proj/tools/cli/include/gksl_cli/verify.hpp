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

// Built-in verification suites: the twelve acceptance criteria plus a
// byte-for-byte comparison of every golden experiment.

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gksl_cli/config.hpp"

namespace gksl::cli {

enum class Suite { Fast, Full };

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  // Non-empty when the check is known to fail for a documented reason; such
  // failures are reported but do not make the suite fail.
  std::string known_limitation;
  double seconds = 0.0;
};

struct VerifyOptions {
  Suite suite = Suite::Fast;
  std::optional<std::filesystem::path> golden_dir;
  std::uint64_t seed = 20260101;
};

using ResultSink = std::function<void(const CheckResult&)>;

// Criteria 1-12 in order. The fast suite runs the Lyapunov oracle at L = 2
// only; the full suite adds L = 3.
std::vector<CheckResult> run_acceptance(const VerifyOptions& options, const ResultSink& sink = {});

// One check per *.json config in `dir`, comparing each produced table with
// the stored {stem}.csv / {stem}.{suffix}.csv.
std::vector<CheckResult> run_golden(const std::filesystem::path& dir, const ResultSink& sink = {});

std::vector<CheckResult> run_verify(const VerifyOptions& options, const ResultSink& sink = {});

// True when every check passed or failed only with a known limitation.
bool suite_ok(const std::vector<CheckResult>& results);

std::string format_line(const CheckResult& result);
Json summary_json(const std::vector<CheckResult>& results, Suite suite);

}  // namespace gksl::cli
