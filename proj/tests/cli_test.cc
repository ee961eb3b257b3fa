// Copyright 2026 The Coverlife Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "coverlife/instance_io.h"
#include "test_util.h"

namespace coverlife {
namespace {

namespace fs = std::filesystem;

struct CliOutput {
  int code;
  std::string out;
  std::string err;
};

CliOutput RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "coverlife");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      CliMain(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ =
        fs::temp_directory_path() /
        ("coverlife_cli_" +
         std::string(
             ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    triangle_ = (dir_ / "triangle.json").string();
    WriteFile(triangle_, InstanceToJson(testing::TriangleInstance()));
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
  std::string triangle_;
};

TEST_F(CliTest, SolveHefWholeBattery) {
  const CliOutput r =
      RunCli({"solve", "--instance", triangle_, "--alg", "hef"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("lifetime 1.000000"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("upper_bound 2.000000"), std::string::npos);
}

TEST_F(CliTest, SolveHefHalfStepsWritesSchedule) {
  const std::string schedule = (dir_ / "s.json").string();
  const CliOutput r = RunCli({"solve", "--instance", triangle_, "--alg", "hef",
                              "--w", "0.5", "--schedule-out", schedule});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("lifetime 1.500000"), std::string::npos) << r.out;
  const CliOutput v =
      RunCli({"validate", "--instance", triangle_, "--schedule", schedule});
  EXPECT_EQ(v.code, kExitOk) << v.out;
  EXPECT_EQ(v.out.rfind("pass", 0), 0u);
}

TEST_F(CliTest, SolveGkReportsEpsilon) {
  const CliOutput r = RunCli(
      {"solve", "--instance", triangle_, "--alg", "gk", "--epsilon", "0.2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("epsilon 0.200000"), std::string::npos) << r.out;
}

TEST_F(CliTest, SolveNaive) {
  const CliOutput r =
      RunCli({"solve", "--instance", triangle_, "--alg", "naive"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("w 1.000000"), std::string::npos);
}

TEST_F(CliTest, OracleTriangle) {
  const CliOutput r = RunCli({"oracle", "--instance", triangle_});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("optimum 1.500000"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("minimal_covers 3"), std::string::npos);
}

TEST_F(CliTest, OracleLimitExitsInfeasible) {
  const CliOutput r =
      RunCli({"oracle", "--instance", triangle_, "--limit", "1"});
  EXPECT_EQ(r.code, kExitInfeasible);
}

TEST_F(CliTest, ValidateRejectsOveruse) {
  const std::string schedule = (dir_ / "bad.json").string();
  WriteFile(schedule, ScheduleToJson(Schedule{{{SensorCover({0, 1}), 1.0},
                                               {SensorCover({0, 2}), 0.5}}}));
  const CliOutput r =
      RunCli({"validate", "--instance", triangle_, "--schedule", schedule});
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_EQ(r.out.rfind("fail", 0), 0u);
}

TEST_F(CliTest, GenWritesParseableInstance) {
  const std::string path = (dir_ / "gen.json").string();
  const CliOutput r =
      RunCli({"gen", "-n", "30", "-m", "10", "--seed", "3", "-o", path});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const Instance instance = ParseInstanceJson(ReadFile(path));
  EXPECT_EQ(instance.num_sensors(), 30);
  EXPECT_EQ(instance.num_targets(), 10);
  // Same seed to stdout gives the same document.
  const CliOutput again =
      RunCli({"gen", "-n", "30", "-m", "10", "--seed", "3"});
  EXPECT_EQ(again.out, ReadFile(path));
}

TEST_F(CliTest, GenFailureExitsInfeasible) {
  const CliOutput r = RunCli(
      {"gen", "-n", "1", "-m", "50", "--range", "1", "--max-resamples", "5"});
  EXPECT_EQ(r.code, kExitInfeasible);
}

TEST_F(CliTest, UncoveredTargetExitsInfeasible) {
  Instance instance = testing::TriangleInstance();
  instance.targets.push_back({1000.0, 1000.0});
  const std::string path = (dir_ / "uncovered.json").string();
  WriteFile(path, InstanceToJson(instance));
  const CliOutput r = RunCli({"solve", "--instance", path});
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_NE(r.err.find("infeasible"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli({"solve", "--instance", triangle_, "--bogus"}).code,
            kExitUsage);
  EXPECT_EQ(RunCli({"solve", "--instance", triangle_, "--alg", "nope"}).code,
            kExitUsage);
  EXPECT_EQ(RunCli({"solve", "--instance", triangle_, "--w", "2"}).code,
            kExitUsage);
  EXPECT_EQ(
      RunCli({"solve", "--instance", (dir_ / "missing.json").string()}).code,
      kExitUsage);
  EXPECT_EQ(RunCli({"exp", "--id", "7"}).code, kExitUsage);
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, ExpWritesCsvAndPlots) {
  const CliOutput r = RunCli({"exp", "--id", "3", "--reps", "1", "--no-timing",
                              "--out", dir_.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const std::string csv = ReadFile((dir_ / "exp3.csv").string());
  // Eight target counts, three algorithms, one w, one replication.
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 24);
  EXPECT_TRUE(fs::exists(dir_ / "exp3_table.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "exp3_upperbound.dat"));
  EXPECT_TRUE(fs::exists(dir_ / "exp3_bgop_1.dat"));
}

}  // namespace
}  // namespace coverlife
