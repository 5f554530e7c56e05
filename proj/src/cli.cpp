// Copyright 2026 The Authors.
//
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

#include "ses/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ses/harness.hpp"
#include "ses/instance_io.hpp"
#include "ses/instancegen.hpp"
#include "ses/solvers.hpp"

namespace ses {
namespace {

struct GenerateOptions {
  int k = 0;
  std::uint64_t seed = 1;
  std::string output;
  std::optional<Index> users;
  std::optional<Index> intervals;
  std::optional<Index> events;
  std::optional<int> locations;
  std::optional<double> theta;
  std::optional<double> xi_min;
  std::optional<double> xi_max;
  std::optional<double> competing_mean;
  std::string from_tags;
};

struct SolveOptions {
  std::string instance;
  std::string method = "grd";
  int k = 0;
  std::uint64_t seed = 1;
  std::string output;
};

struct BenchOptions {
  std::string sweep = "k";
  std::vector<int> k_values;
  int fixed_k = 50;
  std::vector<Index> intervals;
  int seeds = 5;
  std::uint64_t seed = 1;
  Index users = 5000;
  std::vector<std::string> methods;
  std::string output;
};

struct VerifyOptions {
  int count = 200;
  std::uint64_t seed = 1;
  TinyParams tiny;
  int rand_seeds = 20;
};

void summarize(const Instance& instance, std::ostream& out) {
  out << "events=" << instance.num_events()
      << " intervals=" << instance.num_intervals()
      << " users=" << instance.num_users()
      << " competing=" << instance.num_competing() << '\n';
}

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  Instance instance;
  if (!o.from_tags.empty()) {
    instance = build_instance_from_tags(load_tag_corpus(o.from_tags));
    if (const auto v = validate_instance(instance); !v.empty()) {
      throw LoadError("tag corpus yields an ill-formed instance: " +
                      std::string(to_string(v.front().kind)) + ": " +
                      v.front().detail);
    }
  } else {
    if (o.k < 1) throw InputError("--k must be at least 1");
    GenParams params = GenParams::defaults_for(o.k, o.seed);
    if (o.users) params.num_users = *o.users;
    if (o.intervals) params.num_intervals = *o.intervals;
    if (o.events) params.num_events = *o.events;
    if (o.locations) params.num_locations = *o.locations;
    if (o.theta) params.theta = *o.theta;
    if (o.xi_min) params.xi_min = *o.xi_min;
    if (o.xi_max) params.xi_max = *o.xi_max;
    if (o.competing_mean) params.competing_mean = *o.competing_mean;
    instance = generate(params);
  }
  save_instance(instance, o.output);
  summarize(instance, out);
  return kExitOk;
}

int cmd_solve(const SolveOptions& o, std::ostream& out) {
  const auto method = parse_method(o.method);
  if (!method) throw InputError("unknown method '" + o.method + "'");
  const Instance instance = load_instance(o.instance);
  const SolveReport report = run_method(instance, *method, o.k, o.seed);
  const std::string json = report_to_json(instance, report,
                                          method_name(*method));
  if (o.output.empty()) {
    out << json;
  } else {
    write_file(o.output, json);
  }
  return kExitOk;
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  BenchConfig config;
  if (o.sweep == "k") {
    config.sweep = Sweep::kK;
  } else if (o.sweep == "intervals") {
    config.sweep = Sweep::kIntervals;
  } else if (o.sweep == "both") {
    config.sweep = Sweep::kBoth;
  } else {
    throw InputError("--sweep must be k, intervals or both");
  }
  if (!o.k_values.empty()) config.k_values = o.k_values;
  config.fixed_k = o.fixed_k;
  config.interval_values = o.intervals;
  config.seeds = o.seeds;
  config.base_seed = o.seed;
  config.num_users = o.users;
  if (!o.methods.empty()) {
    config.methods.clear();
    for (const auto& name : o.methods) {
      const auto m = parse_method(name);
      if (!m) throw InputError("unknown method '" + name + "'");
      config.methods.push_back(*m);
    }
  }

  std::ofstream csv(o.output, std::ios::trunc);
  if (!csv) throw IoError("cannot write '" + o.output + "'");
  csv << kCsvHeader << '\n';
  const auto rows = run_bench(config, [&](const BenchRow& row) {
    csv << csv_row(row) << '\n';
    if (!csv) throw IoError("failed writing '" + o.output + "'");
  });
  csv.flush();
  if (!csv) throw IoError("failed writing '" + o.output + "'");
  out << rows.size() << " rows written to " << o.output << '\n';
  return kExitOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  VerifyConfig config;
  config.count = o.count;
  config.seed = o.seed;
  config.tiny = o.tiny;
  config.rand_seeds = o.rand_seeds;
  const VerifySummary summary = run_verify(config);
  out.precision(6);
  out << "instances=" << summary.instances << " failed=" << summary.failed
      << " grd/exact min=" << summary.min_ratio
      << " mean=" << summary.mean_ratio << '\n';
  if (summary.failed > 0) {
    for (const auto& d : summary.diagnostics) err << d << '\n';
    return kExitVerification;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Social event scheduling solvers"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate_cmd = app.add_subcommand("generate",
                                          "Write a synthetic instance");
  generate_cmd->add_option("--k", gen.k, "Scheduled events the instance targets");
  generate_cmd->add_option("--seed", gen.seed, "RNG seed");
  generate_cmd->add_option("-o,--output", gen.output, "Instance JSON path")
      ->required();
  generate_cmd->add_option("--users", gen.users, "Number of users (5000)");
  generate_cmd->add_option("--intervals", gen.intervals,
                           "Number of intervals (3k/2)");
  generate_cmd->add_option("--events", gen.events,
                           "Number of candidate events (2k)");
  generate_cmd->add_option("--locations", gen.locations,
                           "Number of locations (25)");
  generate_cmd->add_option("--theta", gen.theta,
                           "Available resources per interval (20)");
  generate_cmd->add_option("--xi-min", gen.xi_min, "Minimum required resources");
  generate_cmd->add_option("--xi-max", gen.xi_max, "Maximum required resources");
  generate_cmd->add_option("--competing-mean", gen.competing_mean,
                           "Mean competing events per interval (8.1)");
  generate_cmd->add_option("--from-tags", gen.from_tags,
                           "Build from a tag corpus JSON instead");

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("instance", solve.instance, "Instance JSON path")
      ->required();
  solve_cmd->add_option("--method", solve.method, "grd, top, rand or exact");
  solve_cmd->add_option("--k", solve.k, "Number of events to schedule")
      ->required();
  solve_cmd->add_option("--seed", solve.seed, "Seed for rand");
  solve_cmd->add_option("-o,--output", solve.output,
                        "Write the report here instead of stdout");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run utility/time sweeps");
  bench_cmd->add_option("--sweep", bench.sweep, "k, intervals or both");
  bench_cmd->add_option("--k-values", bench.k_values,
                        "k sweep (25,50,75,100)")
      ->delimiter(',');
  bench_cmd->add_option("--fixed-k", bench.fixed_k,
                        "k for the interval sweep (50)");
  bench_cmd->add_option("--interval-values", bench.intervals,
                        "Interval sweep (k/5,k/2,k,3k/2,2k,3k)")
      ->delimiter(',');
  bench_cmd->add_option("--seeds", bench.seeds, "Repetitions per point (5)");
  bench_cmd->add_option("--seed", bench.seed, "Base seed (1)");
  bench_cmd->add_option("--users", bench.users, "Number of users (5000)");
  bench_cmd->add_option("--methods", bench.methods, "Methods (grd,top,rand)")
      ->delimiter(',');
  bench_cmd->add_option("-o,--output", bench.output, "CSV path")->required();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Compare solvers against exhaustive search on tiny instances");
  verify_cmd->add_option("--count", verify.count, "Number of instances (200)");
  verify_cmd->add_option("--seed", verify.seed, "Base seed (1)");
  verify_cmd->add_option("--max-events", verify.tiny.max_events, "(6)");
  verify_cmd->add_option("--max-intervals", verify.tiny.max_intervals, "(3)");
  verify_cmd->add_option("--max-users", verify.tiny.max_users, "(5)");
  verify_cmd->add_option("--max-k", verify.tiny.max_k, "(3)");
  verify_cmd->add_option("--max-competing", verify.tiny.max_competing,
                         "Competing events per interval (2)");
  verify_cmd->add_option("--rand-seeds", verify.rand_seeds,
                         "RAND repetitions per instance (20)");
  verify_cmd->add_flag("--zero-interest", verify.tiny.zero_interest,
                       "Set every interest to zero");

  std::vector<const char*> argv{"ses"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate_cmd) return cmd_generate(gen, out);
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*bench_cmd) return cmd_bench(bench, out);
    if (*verify_cmd) {
      if (verify.count < 1) throw InputError("--count must be at least 1");
      return cmd_verify(verify, out, err);
    }
  } catch (const InputError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LoadError& e) {
    err << "load error: " << e.what() << '\n';
    return kExitLoad;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitUsage;
}

}  // namespace ses
