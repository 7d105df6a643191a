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

#include "gksl_cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

namespace gksl::cli {
namespace {

struct KindName {
  ExperimentKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {ExperimentKind::Relax, "relax"},
    {ExperimentKind::Spectrum, "spectrum"},
    {ExperimentKind::Pauli, "pauli"},
    {ExperimentKind::CollisionConverge, "collision_converge"},
    {ExperimentKind::Transport, "transport"},
    {ExperimentKind::Rainbow, "rainbow"},
    {ExperimentKind::Loss, "loss"},
    {ExperimentKind::XxzNess, "xxz_ness"},
};

FieldSpec number(std::string name, std::string description, Json def, std::optional<double> min = std::nullopt,
                 bool exclusive = false, std::optional<double> max = std::nullopt) {
  FieldSpec f;
  f.name = std::move(name);
  f.type = FieldType::Number;
  f.description = std::move(description);
  f.default_value = std::move(def);
  f.minimum = min;
  f.exclusive_minimum = exclusive;
  f.maximum = max;
  return f;
}

FieldSpec rate(std::string name, std::string description, double def) {
  return number(std::move(name), std::move(description), def, 0.0);
}

FieldSpec positive(std::string name, std::string description, double def) {
  return number(std::move(name), std::move(description), def, 0.0, true);
}

FieldSpec integer(std::string name, std::string description, Json def, std::optional<double> min,
                  std::optional<double> max = std::nullopt) {
  FieldSpec f = number(std::move(name), std::move(description), std::move(def), min, false, max);
  f.type = FieldType::Integer;
  return f;
}

FieldSpec choice(std::string name, std::string description, std::vector<std::string> choices) {
  FieldSpec f;
  f.name = std::move(name);
  f.type = FieldType::String;
  f.description = std::move(description);
  f.default_value = choices.front();
  f.choices = std::move(choices);
  return f;
}

FieldSpec boolean(std::string name, std::string description, bool def) {
  FieldSpec f;
  f.name = std::move(name);
  f.type = FieldType::Boolean;
  f.description = std::move(description);
  f.default_value = def;
  return f;
}

FieldSpec array(std::string name, FieldType type, std::string description, Json def,
                std::optional<double> min = std::nullopt, std::optional<double> max = std::nullopt) {
  FieldSpec f = number(std::move(name), std::move(description), std::move(def), min, false, max);
  f.type = type;
  return f;
}

FieldSpec make_optional(FieldSpec f) {
  f.default_value = nullptr;
  f.optional = true;
  return f;
}

std::vector<FieldSpec> relax_fields() {
  return {
      positive("omega", "qubit splitting; H = omega |1><1|", 1.0),
      rate("beta", "inverse temperature", 1.0),
      rate("gamma_down", "emission rate at +omega", 1.0),
      make_optional(rate("gamma_up", "absorption rate at -omega; defaults to gamma_down exp(-beta omega)", 0.0)),
      choice("initial", "initial qubit state", {"excited", "ground", "plus"}),
      positive("t_final", "final time", 50.0),
      integer("steps", "number of output intervals", 100, 1.0),
      choice("method", "propagation engine", {"exact", "rk", "trajectories"}),
      integer("trajectories", "ensemble size for method = trajectories", 10000, 1.0),
      positive("dt", "trajectory time step", 1e-3),
  };
}

std::vector<FieldSpec> spectrum_fields() {
  return {
      integer("sites", "number of qubits", 1, 1.0, 4.0),
      number("field", "on-site energy of |1>", 1.0),
      number("hopping", "flip-flop coupling between neighbours", 0.0),
      rate("damping", "sigma^- rate on every site", 1.0),
      rate("pumping", "sigma^+ rate on every site", 0.0),
      rate("dephasing", "sigma^z rate on every site", 0.0),
  };
}

std::vector<FieldSpec> pauli_fields() {
  return {
      array("energies", FieldType::NumberArray, "non-degenerate system energies", Json::array({0.0, 1.0, 2.5})),
      rate("coupling", "bath coupling strength", 0.5),
      choice("family", "bath spectral family", {"ohmic", "flat"}),
      rate("beta", "inverse temperature", 1.0),
      positive("cutoff", "ohmic cutoff frequency", 10.0),
      make_optional(array("initial_populations", FieldType::NumberArray,
                          "initial populations in ascending energy order; defaults to the top level", nullptr,
                          0.0)),
      positive("t_final", "final time", 10.0),
      integer("steps", "number of output intervals", 50, 1.0),
  };
}

std::vector<FieldSpec> collision_fields() {
  return {
      number("omega", "system and ancilla splitting", 1.0),
      rate("coupling", "exchange coupling g at tau0", 1.0),
      number("n_ancilla", "ancilla excited population", 0.0, 0.0, false, 1.0),
      positive("tau0", "reference collision time", 1.0),
      array("factors", FieldType::NumberArray, "collision times as multiples of tau0",
            Json::array({0.2, 0.1, 0.05, 0.025}), 0.0),
      positive("t_final", "comparison time", 1.0),
      choice("initial", "initial qubit state", {"excited", "ground", "plus"}),
      boolean("scaled", "scale the interaction as 1/sqrt(tau)", true),
  };
}

std::vector<FieldSpec> transport_fields() {
  return {
      array("lengths", FieldType::IntegerArray, "chain lengths", Json::array({4, 8, 16, 32}), 2.0, 64.0),
      number("hopping", "nearest-neighbour hopping", 1.0),
      rate("coupling", "bath coupling g", 1.0),
      number("n_left", "left bath occupation", 1.0, 0.0, false, 1.0),
      number("n_right", "right bath occupation", 0.0, 0.0, false, 1.0),
      choice("solver", "Lyapunov solver", {"vectorized", "schur"}),
  };
}

std::vector<FieldSpec> rainbow_fields() {
  return {
      integer("length", "sites per chain", 4, 1.0, 32.0),
      number("hopping", "nearest-neighbour hopping", 1.0),
      positive("coupling", "ancilla coupling g", 1.0),
      number("bell_phase", "relative phase of the Bell pair", 0.0),
      choice("preparation", "ancilla preparation", {"bell", "product"}),
      make_optional(positive("collision_tau", "discrete collision time; continuum limit when absent", 0.0)),
      integer("max_collisions", "collision budget", 200000, 1.0),
      boolean("fixed_collisions", "run exactly max_collisions collisions", false),
  };
}

std::vector<FieldSpec> loss_fields() {
  return {
      integer("sites", "lattice sites", 6, 1.0, 12.0),
      number("hopping", "hopping J", 1.0),
      integer("order", "loss order K", 2, 1.0),
      rate("rate", "loss rate Gamma", 1.0),
      choice("boundary", "boundary conditions", {"open", "periodic"}),
      number("trap", "harmonic trap strength v", 0.0),
      make_optional(array("initial", FieldType::IntegerArray, "initial site occupations; defaults to full filling",
                          nullptr, 0.0, 1.0)),
      positive("t_final", "final time", 10.0),
      integer("steps", "number of output intervals", 40, 1.0),
      make_optional(array("fit_window", FieldType::NumberArray, "[t_min, t_max] for the decay-exponent fit", nullptr,
                          0.0)),
      choice("method", "propagation engine", {"auto", "exact", "rk"}),
  };
}

std::vector<FieldSpec> xxz_fields() {
  return {
      integer("sites", "chain length", 4, 2.0, 8.0),
      number("exchange", "exchange J", 1.0),
      number("delta", "anisotropy Delta", 0.5),
      rate("gamma_left", "left polarizing rate", 1.0),
      rate("gamma_right", "right polarizing rate", 1.0),
      array("left", FieldType::Direction, "left target Bloch direction", Json::array({0.0, 0.0, 1.0})),
      array("right", FieldType::Direction, "right target Bloch direction", Json::array({1.0, 0.0, 0.0})),
  };
}

std::vector<FieldSpec> tolerances_for(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Relax:
      return {rate("boltzmann", "max deviation of the final populations from the stationary ones", 1e-6)};
    case ExperimentKind::Spectrum:
      return {make_optional(rate("zero", "eigenvalues below this count as zero; defaults to 1e-9 ||L||", 0.0))};
    case ExperimentKind::Pauli:
      return {rate("consistency", "max Pauli / Lindblad population deviation", 1e-8)};
    case ExperimentKind::CollisionConverge:
      return {number("order_min", "lowest accepted fitted order", 0.7),
              number("order_max", "highest accepted fitted order", 1.3)};
    case ExperimentKind::Transport:
      return {rate("flatness", "max bond-current deviation within a chain", 1e-9)};
    case ExperimentKind::Rainbow:
      return {number("threshold", "pair fidelity threshold", 0.99, 0.0, false, 1.0)};
    case ExperimentKind::Loss:
      return {rate("monotone", "allowed density increase between samples", 1e-10)};
    case ExperimentKind::XxzNess:
      return {rate("flatness", "max bond-current deviation", 1e-9),
              rate("zero", "currents below this count as zero", 1e-9)};
  }
  return {};
}

std::string where(std::string_view section, std::string_view key) {
  return std::string(section) + "." + std::string(key);
}

Json check_number(const Json& v, const FieldSpec& f, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(path + ": must be finite");
  if (f.type == FieldType::Integer || f.type == FieldType::IntegerArray) {
    if (!v.is_number_integer()) throw ConfigError(path + ": expected an integer");
  }
  if (f.minimum) {
    if (f.exclusive_minimum ? !(x > *f.minimum) : !(x >= *f.minimum)) {
      throw ConfigError(path + ": must be " + (f.exclusive_minimum ? "> " : ">= ") + Json(*f.minimum).dump());
    }
  }
  if (f.maximum && !(x <= *f.maximum)) throw ConfigError(path + ": must be <= " + Json(*f.maximum).dump());
  return v;
}

Json check_value(const Json& v, const FieldSpec& f, const std::string& path) {
  switch (f.type) {
    case FieldType::Number:
    case FieldType::Integer:
      return check_number(v, f, path);
    case FieldType::Boolean:
      if (!v.is_boolean()) throw ConfigError(path + ": expected true or false");
      return v;
    case FieldType::String: {
      if (!v.is_string()) throw ConfigError(path + ": expected a string");
      const auto s = v.get<std::string>();
      if (std::find(f.choices.begin(), f.choices.end(), s) == f.choices.end()) {
        std::string list;
        for (const auto& c : f.choices) list += (list.empty() ? "" : ", ") + c;
        throw ConfigError(path + ": '" + s + "' is not one of {" + list + "}");
      }
      return v;
    }
    case FieldType::NumberArray:
    case FieldType::IntegerArray:
    case FieldType::Direction: {
      if (!v.is_array() || v.empty()) throw ConfigError(path + ": expected a non-empty array");
      if (f.type == FieldType::Direction && v.size() != 3) throw ConfigError(path + ": expected [x, y, z]");
      double norm = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        check_number(v[i], f, path + "[" + std::to_string(i) + "]");
        norm += v[i].get<double>() * v[i].get<double>();
      }
      if (f.type == FieldType::Direction && !(norm > 0.0)) throw ConfigError(path + ": zero direction");
      return v;
    }
  }
  return v;
}

Json parse_section(const Json& doc, std::string_view section, const std::vector<FieldSpec>& fields) {
  const Json empty = Json::object();
  const std::string name(section);
  const Json& in = doc.contains(name) ? doc.at(name) : empty;
  if (!in.is_object()) throw ConfigError(std::string(section) + ": expected an object");
  for (const auto& [key, value] : in.items()) {
    const bool known =
        std::any_of(fields.begin(), fields.end(), [&key = key](const FieldSpec& f) { return f.name == key; });
    if (!known) throw ConfigError(where(section, key) + ": unknown key");
  }
  Json out = Json::object();
  for (const FieldSpec& f : fields) {
    const std::string path = where(section, f.name);
    if (in.contains(f.name)) {
      out[f.name] = check_value(in.at(f.name), f, path);
    } else if (!f.default_value.is_null()) {
      out[f.name] = f.default_value;
    } else if (!f.optional) {
      throw ConfigError(path + ": required");
    }
  }
  return out;
}

Json field_schema(const FieldSpec& f) {
  Json s = Json::object();
  auto bounds = [&f](Json& target) {
    if (f.minimum) target[f.exclusive_minimum ? "exclusiveMinimum" : "minimum"] = *f.minimum;
    if (f.maximum) target["maximum"] = *f.maximum;
  };
  switch (f.type) {
    case FieldType::Number:
      s["type"] = "number";
      bounds(s);
      break;
    case FieldType::Integer:
      s["type"] = "integer";
      bounds(s);
      break;
    case FieldType::Boolean:
      s["type"] = "boolean";
      break;
    case FieldType::String:
      s["type"] = "string";
      s["enum"] = f.choices;
      break;
    case FieldType::NumberArray:
    case FieldType::IntegerArray:
    case FieldType::Direction: {
      Json items = {{"type", f.type == FieldType::IntegerArray ? "integer" : "number"}};
      bounds(items);
      s["type"] = "array";
      s["items"] = items;
      s["minItems"] = f.type == FieldType::Direction ? 3 : 1;
      if (f.type == FieldType::Direction) s["maxItems"] = 3;
      break;
    }
  }
  s["description"] = f.description;
  if (!f.default_value.is_null()) s["default"] = f.default_value;
  return s;
}

Json section_schema(const std::vector<FieldSpec>& fields) {
  Json props = Json::object();
  for (const FieldSpec& f : fields) props[f.name] = field_schema(f);
  return {{"type", "object"}, {"additionalProperties", false}, {"properties", props}};
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  for (const auto& k : kKindNames)
    if (k.kind == kind) return k.name;
  return "unknown";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
  for (const auto& k : kKindNames)
    if (name == k.name) return k.kind;
  throw ConfigError("experiment: unknown kind '" + std::string(name) + "'");
}

const std::vector<ExperimentKind>& all_experiment_kinds() {
  static const std::vector<ExperimentKind> kinds = [] {
    std::vector<ExperimentKind> out;
    for (const auto& k : kKindNames) out.push_back(k.kind);
    return out;
  }();
  return kinds;
}

const std::vector<FieldSpec>& model_fields(ExperimentKind kind) {
  static const std::map<ExperimentKind, std::vector<FieldSpec>> table = {
      {ExperimentKind::Relax, relax_fields()},
      {ExperimentKind::Spectrum, spectrum_fields()},
      {ExperimentKind::Pauli, pauli_fields()},
      {ExperimentKind::CollisionConverge, collision_fields()},
      {ExperimentKind::Transport, transport_fields()},
      {ExperimentKind::Rainbow, rainbow_fields()},
      {ExperimentKind::Loss, loss_fields()},
      {ExperimentKind::XxzNess, xxz_fields()},
  };
  return table.at(kind);
}

const std::vector<FieldSpec>& tolerance_fields(ExperimentKind kind) {
  static const std::map<ExperimentKind, std::vector<FieldSpec>> table = [] {
    std::map<ExperimentKind, std::vector<FieldSpec>> t;
    for (const auto& k : kKindNames) t[k.kind] = tolerances_for(k.kind);
    return t;
  }();
  return table.at(kind);
}

ExperimentConfig parse_config(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  static const std::vector<std::string> top = {"experiment", "model", "output", "seed", "tolerances"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(top.begin(), top.end(), key) == top.end()) throw ConfigError(key + ": unknown key");
  }
  if (!doc.contains("experiment") || !doc.at("experiment").is_string()) {
    throw ConfigError("experiment: required string");
  }
  ExperimentConfig config;
  config.experiment = parse_experiment_kind(doc.at("experiment").get<std::string>());
  if (!doc.contains("output") || !doc.at("output").is_string() || doc.at("output").get<std::string>().empty()) {
    throw ConfigError("output: required non-empty string");
  }
  config.output = doc.at("output").get<std::string>();
  if (doc.contains("seed")) {
    const Json& s = doc.at("seed");
    if (!s.is_number_unsigned()) throw ConfigError("seed: expected a non-negative integer");
    config.seed = s.get<std::uint64_t>();
  }
  config.model = parse_section(doc, "model", model_fields(config.experiment));
  config.tolerances = parse_section(doc, "tolerances", tolerance_fields(config.experiment));
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return parse_config(doc);
}

Json to_json(const ExperimentConfig& config) {
  Json j = Json::object();
  j["experiment"] = to_string(config.experiment);
  j["model"] = config.model;
  j["output"] = config.output;
  j["seed"] = config.seed;
  j["tolerances"] = config.tolerances;
  return j;
}

Json config_schema() {
  Json variants = Json::array();
  for (const auto& k : kKindNames) {
    Json props = {
        {"experiment", {{"const", k.name}}},
        {"model", section_schema(model_fields(k.kind))},
        {"output", {{"type", "string"}, {"minLength", 1}, {"description", "output path prefix"}}},
        {"seed", {{"type", "integer"}, {"minimum", 0}, {"default", 0}}},
        {"tolerances", section_schema(tolerance_fields(k.kind))},
    };
    variants.push_back({{"type", "object"},
                        {"additionalProperties", false},
                        {"required", Json::array({"experiment", "output"})},
                        {"properties", props}});
  }
  return {{"$schema", "https://json-schema.org/draft/2020-12/schema"},
          {"title", "gksl experiment configuration"},
          {"oneOf", variants}};
}

}  // namespace gksl::cli
