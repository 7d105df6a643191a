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

#include "gksl_cli/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <Eigen/Core>

#include "gksl/errors.hpp"
#include "gksl_cli/verify.hpp"

#ifndef GKSL_VERSION
#define GKSL_VERSION "unknown"
#endif
#ifndef GKSL_GOLDEN_DIR
#define GKSL_GOLDEN_DIR ""
#endif

namespace gksl::cli {
namespace {

namespace fs = std::filesystem;

Json versions() {
  return {{"gksl", GKSL_VERSION},
          {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                        std::to_string(EIGEN_MINOR_VERSION)},
          {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
          {"compiler", __VERSION__}};
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

std::string resolve_prefix(const std::string& prefix, const std::string& dir_flag) {
  std::string dir = dir_flag;
  if (dir.empty()) {
    if (const char* env = std::getenv(kOutputDirEnv)) dir = env;
  }
  const fs::path p(prefix);
  if (dir.empty() || p.is_absolute()) return p.string();
  return (fs::path(dir) / p).string();
}

int do_run(const std::string& config_path, const std::string& output_dir, std::ostream& out, std::ostream& err) {
  ExperimentConfig config;
  try {
    config = load_config(config_path);
    check_consistency(config);
  } catch (const ConfigError& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitSchema;
  }
  const std::string prefix = resolve_prefix(config.output, output_dir);
  ExperimentResult result;
  try {
    result = run_experiment(config);
  } catch (const ConfigError& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const ConvergenceError& e) {
    err << "non-convergence: " << e.what() << "\n";
    try {
      for (const auto& f : write_outputs(config, result, prefix, "non_converged", e.what())) out << f << "\n";
    } catch (const std::exception& w) {
      err << "engine error: " << w.what() << "\n";
      return kExitEngine;
    }
    return kExitNonConvergence;
  } catch (const std::exception& e) {
    err << "engine error: " << e.what() << "\n";
    return kExitEngine;
  }
  try {
    const std::string status = result.converged ? "ok" : "non_converged";
    for (const auto& f : write_outputs(config, result, prefix, status)) out << f << "\n";
  } catch (const std::exception& e) {
    err << "engine error: " << e.what() << "\n";
    return kExitEngine;
  }
  if (!result.converged) {
    err << "non-convergence: results outside the configured tolerance\n";
    return kExitNonConvergence;
  }
  return kExitOk;
}

int do_verify(const std::string& suite, const std::string& golden_dir, const std::string& json_path,
              std::uint64_t seed, std::ostream& out, std::ostream& err) {
  VerifyOptions o;
  o.suite = suite == "full" ? Suite::Full : Suite::Fast;
  o.seed = seed;
  if (!golden_dir.empty()) o.golden_dir = golden_dir;
  const auto results = run_verify(o, [&err](const CheckResult& r) { err << format_line(r) << std::endl; });
  const Json summary = summary_json(results, o.suite);
  if (json_path.empty()) {
    out << summary.dump(2) << "\n";
  } else {
    write_text(json_path, summary.dump(2) + "\n");
  }
  return suite_ok(results) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

std::vector<std::string> write_outputs(const ExperimentConfig& config, const ExperimentResult& result,
                                       const std::string& prefix, const std::string& status,
                                       const std::string& message) {
  const fs::path base(prefix);
  if (base.has_parent_path()) fs::create_directories(base.parent_path());
  std::vector<std::string> written;
  Json files = Json::array();
  for (const auto& [suffix, table] : result.tables) {
    const std::string path = prefix + (suffix.empty() ? "" : "." + suffix) + ".csv";
    write_text(path, table.str());
    written.push_back(path);
    files.push_back(fs::path(path).filename().string());
  }
  Json meta = {{"config", to_json(config)},
               {"versions", versions()},
               {"seed", config.seed},
               {"status", status},
               {"partial", status != "ok"},
               {"files", files},
               {"results", result.results}};
  if (!message.empty()) meta["message"] = message;
  const std::string meta_path = prefix + ".meta.json";
  write_text(meta_path, meta.dump(2) + "\n");
  written.push_back(meta_path);
  return written;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Open quantum system experiments and verification", "gksl"};
  app.require_subcommand(1);

  std::string config_path, output_dir;
  auto* run = app.add_subcommand("run", "Run an experiment from a JSON config");
  run->add_option("config", config_path, "Config file")->required();
  run->add_option("--output-dir", output_dir, std::string("Directory for relative output prefixes (overrides ") +
                                                  kOutputDirEnv + ")");

  std::string suite = "fast", golden_dir = GKSL_GOLDEN_DIR, json_path;
  std::uint64_t seed = 20260101;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite and golden-file checks");
  verify->add_option("--suite", suite, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--golden-dir", golden_dir, "Directory of golden configs and CSVs");
  verify->add_option("--json", json_path, "Write the JSON summary here instead of stdout");
  verify->add_option("--seed", seed, "Seed for randomized checks");

  bool print = false;
  auto* schema = app.add_subcommand("schema", "Configuration schema");
  schema->add_flag("--print", print, "Print the JSON schema");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitSchema;
  }

  try {
    if (*run) return do_run(config_path, output_dir, out, err);
    if (*verify) return do_verify(suite, golden_dir, json_path, seed, out, err);
    if (*schema) {
      if (!print) {
        err << "schema: nothing to do (use --print)\n";
        return kExitSchema;
      }
      out << config_schema().dump(2) << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitEngine;
  }
  return kExitSchema;
}

}  // namespace gksl::cli
