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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "gksl_cli/app.hpp"
#include "gksl_cli/config.hpp"
#include "gksl_cli/csv.hpp"
#include "gksl_cli/experiments.hpp"
#include "gksl_cli/verify.hpp"

namespace gksl::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gksl_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    unsetenv(kOutputDirEnv);
  }
  void TearDown() override {
    unsetenv(kOutputDirEnv);
    fs::remove_all(dir_);
  }

  fs::path write_config(const std::string& name, const Json& doc) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << doc.dump();
    return p;
  }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  static std::string read(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST(Csv, ShortestRoundTrip) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(4.0), "4");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1e-300), "1e-300");
  EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
  CsvTable t({"a", "b"});
  t.add_row({1.0, 0.25});
  EXPECT_EQ(t.str(), "a,b\n1,0.25\n");
  EXPECT_THROW(t.add_row({1.0}), std::logic_error);
}

TEST(Config, DefaultsAreFilled) {
  const ExperimentConfig c = parse_config(Json::parse(R"({"experiment": "relax", "output": "x"})"));
  EXPECT_EQ(c.experiment, ExperimentKind::Relax);
  EXPECT_EQ(c.model.at("t_final").get<double>(), 50.0);
  EXPECT_FALSE(c.model.contains("gamma_up"));
  EXPECT_EQ(c.tolerances.at("boltzmann").get<double>(), 1e-6);
  EXPECT_EQ(c.seed, 0u);
}

TEST(Config, StrictParsing) {
  const auto bad = [](const char* text) { return parse_config(Json::parse(text)); };
  EXPECT_THROW(bad(R"({"experiment": "relax", "output": "x", "extra": 1})"), ConfigError);
  EXPECT_THROW(bad(R"({"experiment": "relax", "output": "x", "model": {"omgea": 1}})"), ConfigError);
  EXPECT_THROW(bad(R"({"experiment": "relax", "output": "x", "model": {"gamma_down": -1}})"), ConfigError);
  EXPECT_THROW(bad(R"({"experiment": "relax", "output": "x", "model": {"steps": 2.5}})"), ConfigError);
  EXPECT_THROW(bad(R"({"experiment": "relax", "output": "x", "model": {"method": "euler"}})"), ConfigError);
  EXPECT_THROW(bad(R"({"experiment": "teleport", "output": "x"})"), ConfigError);
  EXPECT_THROW(bad(R"({"experiment": "relax"})"), ConfigError);
  EXPECT_THROW(bad(R"({"experiment": "relax", "output": "x", "seed": -3})"), ConfigError);
  EXPECT_THROW(bad(R"({"experiment": "xxz_ness", "output": "x", "model": {"left": [0, 0, 0]}})"), ConfigError);
  EXPECT_THROW(bad(R"({"experiment": "loss", "output": "x", "model": {"rate": -0.5}})"), ConfigError);
  EXPECT_THROW(bad(R"({"experiment": "rainbow", "output": "x", "tolerances": {"threshold": 2}})"), ConfigError);
}

TEST(Config, CrossFieldChecks) {
  const auto consistency = [](const char* text) { check_consistency(parse_config(Json::parse(text))); };
  EXPECT_THROW(consistency(R"({"experiment": "loss", "output": "x", "model": {"sites": 3, "order": 4}})"),
               ConfigError);
  EXPECT_THROW(consistency(R"({"experiment": "loss", "output": "x", "model": {"sites": 3, "initial": [1, 0]}})"),
               ConfigError);
  EXPECT_THROW(
      consistency(R"({"experiment": "pauli", "output": "x", "model": {"initial_populations": [0.5, 0.2, 0.2]}})"),
      ConfigError);
}

TEST(Config, SchemaCoversEveryKind) {
  const Json s = config_schema();
  ASSERT_EQ(s.at("oneOf").size(), all_experiment_kinds().size());
  for (const Json& variant : s.at("oneOf")) {
    EXPECT_FALSE(variant.at("additionalProperties").get<bool>());
    EXPECT_FALSE(variant.at("properties").at("model").at("additionalProperties").get<bool>());
  }
}

TEST_F(CliTest, SchemaPrint) {
  EXPECT_EQ(run({"schema", "--print"}), kExitOk);
  EXPECT_EQ(Json::parse(out_.str()).at("oneOf").size(), 8u);
  EXPECT_EQ(run({"bogus"}), kExitSchema);
}

TEST_F(CliTest, RelaxReachesBoltzmann) {
  const fs::path cfg = write_config("relax.json", {{"experiment", "relax"}, {"output", (dir_ / "relax").string()}});
  ASSERT_EQ(run({"run", cfg.string()}), kExitOk) << err_.str();
  const std::string csv = read(dir_ / "relax.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,p0,p1,coherence_abs");
  const std::string last = csv.substr(csv.rfind('\n', csv.size() - 2) + 1);
  std::istringstream row(last);
  std::string t, p0, p1;
  std::getline(row, t, ',');
  std::getline(row, p0, ',');
  std::getline(row, p1, ',');
  const double boltzmann = std::exp(-1.0) / (1.0 + std::exp(-1.0));
  EXPECT_NEAR(std::stod(p1), boltzmann, 1e-6);
  const Json meta = Json::parse(read(dir_ / "relax.meta.json"));
  EXPECT_EQ(meta.at("status"), "ok");
  EXPECT_FALSE(meta.at("partial").get<bool>());
  EXPECT_EQ(meta.at("config").at("model").at("omega").get<double>(), 1.0);
  EXPECT_TRUE(meta.at("results").at("detailed_balance").get<bool>());
  EXPECT_TRUE(meta.at("versions").contains("gksl"));
}

TEST_F(CliTest, IdenticalConfigAndSeedGiveIdenticalFiles) {
  const Json doc = {{"experiment", "relax"},
                    {"output", "traj"},
                    {"seed", 7},
                    {"model", {{"method", "trajectories"}, {"t_final", 0.5}, {"steps", 2}, {"trajectories", 300}}},
                    {"tolerances", {{"boltzmann", 1.0}}}};
  const fs::path cfg = write_config("traj.json", doc);
  ASSERT_EQ(run({"run", cfg.string(), "--output-dir", (dir_ / "a").string()}), kExitOk) << err_.str();
  ASSERT_EQ(run({"run", cfg.string(), "--output-dir", (dir_ / "b").string()}), kExitOk) << err_.str();
  EXPECT_EQ(read(dir_ / "a" / "traj.csv"), read(dir_ / "b" / "traj.csv"));
  EXPECT_EQ(read(dir_ / "a" / "traj.meta.json"), read(dir_ / "b" / "traj.meta.json"));
}

TEST_F(CliTest, OutputDirectoryFromEnvironment) {
  const fs::path cfg = write_config("t.json", {{"experiment", "transport"}, {"output", "sub/equal"},
                                               {"model", {{"lengths", {4, 6}}, {"n_left", 0.4}, {"n_right", 0.4}}}});
  setenv(kOutputDirEnv, (dir_ / "env").string().c_str(), 1);
  ASSERT_EQ(run({"run", cfg.string()}), kExitOk) << err_.str();
  std::istringstream csv(read(dir_ / "env" / "sub" / "equal.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "length,bond,current");
  int rows = 0;
  while (std::getline(csv, line)) {
    EXPECT_LE(std::abs(std::stod(line.substr(line.rfind(',') + 1))), 1e-9);
    ++rows;
  }
  EXPECT_EQ(rows, 3 + 5);
}

TEST_F(CliTest, NegativeRateIsSchemaErrorWithoutFiles) {
  const fs::path cfg = write_config("bad.json", {{"experiment", "relax"}, {"output", (dir_ / "bad").string()},
                                                 {"model", {{"gamma_down", -1.0}}}});
  EXPECT_EQ(run({"run", cfg.string()}), kExitSchema);
  EXPECT_NE(err_.str().find("gamma_down"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "bad.csv"));
  EXPECT_FALSE(fs::exists(dir_ / "bad.meta.json"));
  std::ofstream(dir_ / "broken.json") << "{ not json";
  EXPECT_EQ(run({"run", (dir_ / "broken.json").string()}), kExitSchema);
  EXPECT_EQ(run({"run", (dir_ / "missing.json").string()}), kExitSchema);
}

TEST_F(CliTest, EngineErrorsExitThree) {
  const fs::path degenerate = write_config(
      "deg.json", {{"experiment", "pauli"}, {"output", (dir_ / "deg").string()}, {"model", {{"energies", {0.0, 0.0}}}}});
  EXPECT_EQ(run({"run", degenerate.string()}), kExitEngine);
  EXPECT_FALSE(fs::exists(dir_ / "deg.csv"));
  const fs::path big = write_config(
      "big.json", {{"experiment", "xxz_ness"}, {"output", (dir_ / "big").string()}, {"model", {{"sites", 7}}}});
  EXPECT_EQ(run({"run", big.string()}), kExitEngine);
}

TEST_F(CliTest, NonConvergenceExitsFourWithFlaggedOutputs) {
  const fs::path cfg = write_config(
      "rb.json", {{"experiment", "rainbow"},
                  {"output", (dir_ / "rb").string()},
                  {"model", {{"length", 2}, {"collision_tau", 0.1}, {"max_collisions", 5}}}});
  EXPECT_EQ(run({"run", cfg.string()}), kExitNonConvergence);
  const Json meta = Json::parse(read(dir_ / "rb.meta.json"));
  EXPECT_EQ(meta.at("status"), "non_converged");
  EXPECT_TRUE(meta.at("partial").get<bool>());

  const fs::path relax = write_config(
      "short.json", {{"experiment", "relax"}, {"output", (dir_ / "short").string()}, {"model", {{"t_final", 0.5}}}});
  EXPECT_EQ(run({"run", relax.string()}), kExitNonConvergence);
  EXPECT_TRUE(fs::exists(dir_ / "short.csv"));
  EXPECT_TRUE(Json::parse(read(dir_ / "short.meta.json")).at("partial").get<bool>());
}

TEST(Experiments, XxzControlsAndTwist) {
  const Json aligned = R"({"experiment": "xxz_ness", "output": "x", "model": {"right": [0, 0, 1]}})"_json;
  const ExperimentResult a = run_experiment(parse_config(aligned));
  for (const auto& row : a.tables.front().second.rows()) {
    for (std::size_t i = 1; i < row.size(); ++i) EXPECT_LE(std::abs(row[i]), 1e-9);
  }
  for (const Json& m : a.results.at("magnetization")) EXPECT_NEAR(m[2].get<double>(), 1.0, 1e-9);
  const ExperimentResult t = run_experiment(parse_config(R"({"experiment": "xxz_ness", "output": "x"})"_json));
  EXPECT_TRUE(t.results.at("z_flat").get<bool>());
  for (const Json& nz : t.results.at("nonzero")) EXPECT_TRUE(nz.get<bool>());
  EXPECT_TRUE(t.results.at("unique").get<bool>());
}

TEST(Experiments, IsotropicChainHasFlatCurrentsForEveryComponent) {
  const Json doc = R"({"experiment": "xxz_ness", "output": "x", "model": {"delta": 1.0}})"_json;
  const ExperimentResult r = run_experiment(parse_config(doc));
  for (const Json& f : r.results.at("flatness")) EXPECT_LE(f.get<double>(), 1e-9);
}

TEST(Experiments, LossAndCollisionSummaries) {
  const Json loss = R"({"experiment": "loss", "output": "x",
      "model": {"sites": 3, "order": 1, "t_final": 4, "steps": 16, "fit_window": [0.5, 4]}})"_json;
  const ExperimentResult l = run_experiment(parse_config(loss));
  EXPECT_TRUE(l.results.at("monotone").get<bool>());
  EXPECT_TRUE(l.results.at("fit").at("non_power_law").get<bool>());
  EXPECT_EQ(l.tables.size(), 2u);
  EXPECT_EQ(l.tables[1].first, "momentum");
  EXPECT_EQ(l.tables[1].second.rows().size(), 17u * 3u);

  const ExperimentResult c = run_experiment(parse_config(R"({"experiment": "collision_converge", "output": "x"})"_json));
  EXPECT_TRUE(c.results.at("order_in_window").get<bool>());
}

TEST_F(CliTest, CorruptedGoldenFailsOnlyItsOwnCheck) {
  const fs::path golden(GKSL_TEST_GOLDEN_DIR);
  const fs::path copy = dir_ / "golden";
  fs::copy(golden, copy);
  const auto clean = run_golden(copy);
  ASSERT_GE(clean.size(), 2u);
  for (const CheckResult& r : clean) EXPECT_TRUE(r.passed) << r.id << ": " << r.detail;

  {
    std::ofstream f(copy / "relax_thermal.csv", std::ios::app);
    f << "99,0,0,0\n";
  }
  for (const CheckResult& r : run_golden(copy)) {
    EXPECT_EQ(r.passed, r.id != "golden:relax_thermal") << r.id;
  }
}

}  // namespace
}  // namespace gksl::cli
