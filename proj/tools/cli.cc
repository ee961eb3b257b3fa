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

#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "coverlife/exact_oracle.h"
#include "coverlife/gk.h"
#include "coverlife/greedy.h"
#include "coverlife/harness.h"
#include "coverlife/instance_gen.h"
#include "coverlife/instance_io.h"
#include "coverlife/model.h"

namespace coverlife {
namespace {

std::string Fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

struct GenOptions {
  GenConfig config;
  std::string out;
};

struct SolveOptions {
  std::string instance;
  std::string algorithm = "hef";
  double w = 1.0;
  std::optional<double> epsilon;
  std::string schedule_out;
};

struct OracleOptions {
  std::string instance;
  size_t limit = kDefaultCoverLimit;
};

struct ExpOptions {
  int id = 1;
  std::uint64_t seed = 0;
  int reps = 15;
  std::string out = ".";
  bool no_timing = false;
  std::optional<double> range;
  std::optional<int> max_resamples;
};

struct ValidateOptions {
  std::string instance;
  std::string schedule;
  double tolerance = kTolerance;
};

int RunGen(const GenOptions& opts, std::ostream& out) {
  const std::string json = InstanceToJson(Generate(opts.config));
  if (opts.out.empty()) {
    out << json;
  } else {
    WriteFile(opts.out, json);
  }
  return kExitOk;
}

int RunSolve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  const Instance instance = ParseInstanceJson(ReadFile(opts.instance));
  const CoverageMatrix matrix = BuildCoverageMatrix(instance);

  SolveResult result;
  double w = opts.w;
  std::optional<double> epsilon;
  if (opts.algorithm == "gk") {
    const int n = matrix.num_sensors();
    epsilon = opts.epsilon ? *opts.epsilon : EpsilonForW(opts.w, n);
    w = WForEpsilon(*epsilon, n);
    result = RunGk(matrix, instance.battery, GkConfig{.epsilon = *epsilon});
  } else {
    GreedyConfig config;
    if (opts.algorithm == "naive") {
      // Naive greedy: HEF cover generation with the full bottleneck drained.
      config.generator = Generator::kHef;
      w = 1.0;
    } else if (auto generator = ParseGenerator(opts.algorithm)) {
      config.generator = *generator;
    } else {
      err << "unknown algorithm '" << opts.algorithm << "'\n";
      return kExitUsage;
    }
    config.w = w;
    result = RunGreedy(matrix, instance.battery, config);
  }

  const ValidationReport report =
      ValidateSchedule(matrix, instance.battery, result.schedule);
  if (!report.pass) {
    err << "internal error: produced schedule is invalid\n"
        << report.Describe();
    return kExitInfeasible;
  }
  const double bound = UpperBound(matrix, instance.battery);
  out << "algorithm " << opts.algorithm << "\n";
  out << "w " << Fixed(w) << "\n";
  if (epsilon) out << "epsilon " << Fixed(*epsilon) << "\n";
  out << "lifetime " << Fixed(report.total_lifetime) << "\n";
  out << "upper_bound " << Fixed(bound) << "\n";
  out << "gap_pct " << Fixed(100.0 * (bound - report.total_lifetime) / bound)
      << "\n";
  out << "covers " << result.covers_generated << "\n";
  if (!opts.schedule_out.empty()) {
    WriteFile(opts.schedule_out, ScheduleToJson(result.schedule));
  }
  return kExitOk;
}

int RunOracle(const OracleOptions& opts, std::ostream& out) {
  const Instance instance = ParseInstanceJson(ReadFile(opts.instance));
  const CoverageMatrix matrix = BuildCoverageMatrix(instance);
  const CoverSet covers = EnumerateMinimalCovers(matrix, opts.limit);
  const LpSolution solution = LpOptimalLifetime(covers, instance.battery);
  out << "optimum " << Fixed(solution.objective) << "\n";
  out << "upper_bound " << Fixed(UpperBound(matrix, instance.battery)) << "\n";
  out << "minimal_covers " << covers.covers.size() << "\n";
  for (size_t p = 0; p < covers.covers.size(); ++p) {
    if (solution.weights[p] <= kTolerance) continue;
    out << "cover";
    for (SensorIndex i : covers.covers[p].members()) out << ' ' << i;
    out << " lifetime " << Fixed(solution.weights[p]) << "\n";
  }
  return kExitOk;
}

int RunExp(const ExpOptions& opts, std::ostream& out) {
  ExperimentSpec spec = ExperimentSpec::Default(opts.id);
  spec.base_seed = opts.seed;
  spec.replications = opts.reps;
  spec.record_timing = !opts.no_timing;
  if (opts.range) spec.range = *opts.range;
  if (opts.max_resamples) spec.max_resamples = *opts.max_resamples;

  const ExperimentResult result = RunExperiment(spec);
  const std::filesystem::path dir(opts.out);
  std::filesystem::create_directories(dir);
  const std::string prefix = "exp" + std::to_string(opts.id);
  EmitCsv(result.records, dir / (prefix + ".csv"));
  WriteFile(dir / (prefix + "_table.csv"),
            TableToCsv(result.table, spec.w_grid));
  const auto plots = EmitPlotData(result.cells, prefix, dir);

  out << TableToCsv(result.table, spec.w_grid);
  out << "records " << result.records.size() << " -> "
      << (dir / (prefix + ".csv")).string() << "\n";
  out << "plot files " << plots.size() << "\n";
  return kExitOk;
}

int RunValidate(const ValidateOptions& opts, std::ostream& out) {
  const Instance instance = ParseInstanceJson(ReadFile(opts.instance));
  const CoverageMatrix matrix = BuildCoverageMatrix(instance);
  const Schedule schedule = ParseScheduleJson(ReadFile(opts.schedule));
  const ValidationReport report =
      ValidateSchedule(matrix, instance.battery, schedule, opts.tolerance);
  out << (report.pass ? "pass" : "fail") << "\n";
  out << "total_lifetime " << Fixed(report.total_lifetime) << "\n";
  out << report.Describe();
  return report.pass ? kExitOk : kExitInfeasible;
}

}  // namespace

int CliMain(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Sensor cover scheduling for target coverage lifetime"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("-n,--sensors", gen.config.num_sensors, "Sensor count");
  gen_cmd->add_option("-m,--targets", gen.config.num_targets, "Target count");
  gen_cmd->add_option("--seed", gen.config.seed, "PRNG seed");
  gen_cmd->add_option("--range", gen.config.range, "Sensing range (m)");
  gen_cmd->add_option("--sensor-area", gen.config.sensor_area,
                      "Side of the sensor deployment square (m)");
  gen_cmd->add_option("--target-area", gen.config.target_area,
                      "Side of the centered target square (m)");
  gen_cmd->add_option("--max-resamples", gen.config.max_resamples,
                      "Redraws allowed per uncovered target");
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Schedule one instance");
  solve_cmd->add_option("--instance", solve.instance, "Instance JSON")
      ->required();
  solve_cmd->add_option("--alg", solve.algorithm, "Algorithm")
      ->check(CLI::IsMember({"hef", "cardei", "bgop", "gk", "naive"}));
  solve_cmd->add_option("--w", solve.w, "Granularity in (0, 1]");
  solve_cmd->add_option("--epsilon", solve.epsilon,
                        "GK accuracy (default: derived from --w)");
  solve_cmd->add_option("--schedule-out", solve.schedule_out,
                        "Write the schedule as JSON");

  OracleOptions oracle;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "Exact LP optimum over all minimal covers");
  oracle_cmd->add_option("--instance", oracle.instance, "Instance JSON")
      ->required();
  oracle_cmd->add_option("--limit", oracle.limit, "Maximum cover count");

  ExpOptions exp;
  CLI::App* exp_cmd = app.add_subcommand("exp", "Run a benchmark experiment");
  exp_cmd->add_option("--id", exp.id, "Experiment 1..4")
      ->required()
      ->check(CLI::Range(1, 4));
  exp_cmd->add_option("--seed", exp.seed, "Base seed");
  exp_cmd->add_option("--reps", exp.reps, "Replications per grid cell")
      ->check(CLI::PositiveNumber);
  exp_cmd->add_option("--out", exp.out, "Output directory");
  exp_cmd->add_flag("--no-timing", exp.no_timing, "Report runtimes as 0");
  exp_cmd->add_option("--range", exp.range, "Override the sensing range (m)");
  exp_cmd->add_option("--max-resamples", exp.max_resamples,
                      "Override redraws per target");

  ValidateOptions validate;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Check a schedule against an instance");
  validate_cmd->add_option("--instance", validate.instance, "Instance JSON")
      ->required();
  validate_cmd->add_option("--schedule", validate.schedule, "Schedule JSON")
      ->required();
  validate_cmd->add_option("--tolerance", validate.tolerance,
                           "Battery tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return RunGen(gen, out);
    if (*solve_cmd) return RunSolve(solve, out, err);
    if (*oracle_cmd) return RunOracle(oracle, out);
    if (*exp_cmd) return RunExp(exp, out);
    if (*validate_cmd) return RunValidate(validate, out);
  } catch (const InfeasibleInstance& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const GenerationFailed& e) {
    err << "generation failed: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const TooManyCovers& e) {
    err << "oracle declined: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace coverlife
