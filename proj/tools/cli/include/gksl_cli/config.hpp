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

// Experiment configuration: a strict JSON format with one schema per
// experiment kind. Every field is declared in a table that drives parsing,
// default filling and the published JSON-schema document.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace gksl::cli {

using Json = nlohmann::ordered_json;

// Schema violations; mapped to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExperimentKind { Relax, Spectrum, Pauli, CollisionConverge, Transport, Rainbow, Loss, XxzNess };

std::string_view to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view name);
const std::vector<ExperimentKind>& all_experiment_kinds();

enum class FieldType { Number, Integer, Boolean, String, NumberArray, IntegerArray, Direction };

struct FieldSpec {
  std::string name;
  FieldType type = FieldType::Number;
  std::string description;
  Json default_value;        // null: required unless `optional`
  bool optional = false;     // may be absent with no default
  std::vector<std::string> choices; // String only
  std::optional<double> minimum;
  bool exclusive_minimum = false;
  std::optional<double> maximum;
};

const std::vector<FieldSpec>& model_fields(ExperimentKind kind);
const std::vector<FieldSpec>& tolerance_fields(ExperimentKind kind);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Relax;
  Json model;      // every declared field present (or an absent optional)
  std::string output;
  std::uint64_t seed = 0;
  Json tolerances; // fully resolved
};

// Strict: unknown keys, wrong types and out-of-range values throw ConfigError.
ExperimentConfig parse_config(const Json& document);
ExperimentConfig load_config(const std::filesystem::path& path);

// The resolved configuration, suitable for the metadata file.
Json to_json(const ExperimentConfig& config);

// JSON-schema (draft 2020-12) describing every experiment kind.
Json config_schema();

}  // namespace gksl::cli
