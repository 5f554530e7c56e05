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

// Benchmark sweeps and oracle verification shared by the CLI and tests.

#ifndef SES_HARNESS_HPP_
#define SES_HARNESS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ses/instancegen.hpp"
#include "ses/model.hpp"
#include "ses/solvers.hpp"

namespace ses {

enum class Method { kGrd, kTop, kRand, kExact };

std::string_view method_name(Method method);
// Case-insensitive; empty for unknown names.
std::optional<Method> parse_method(std::string_view name);

// `seed` is used by RAND only.
SolveReport run_method(const Instance& instance, Method method, int k,
                       std::uint64_t seed);

// |a - b| <= rel * max(|a|, |b|).
bool close_relative(double a, double b, double rel);

// A harness self-check failed.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchRow {
  Method method = Method::kGrd;
  int k = 0;
  Index num_intervals = 0;
  Index num_users = 0;
  std::uint64_t seed = 0;
  double utility = 0.0;
  double wall_time_ms = 0.0;
  bool shortfall = false;
};

inline constexpr std::string_view kCsvHeader =
    "method,k,intervals,users,seed,utility,wall_time_ms,shortfall";
std::string csv_row(const BenchRow& row);

enum class Sweep { kK, kIntervals, kBoth };

struct BenchConfig {
  Sweep sweep = Sweep::kK;
  std::vector<int> k_values = {25, 50, 75, 100};
  int fixed_k = 50;
  // Empty: k/5, k/2, k, 3k/2, 2k, 3k of fixed_k.
  std::vector<Index> interval_values;
  int seeds = 5;
  std::uint64_t base_seed = 1;
  Index num_users = 5000;
  std::vector<Method> methods = {Method::kGrd, Method::kTop, Method::kRand};
  // Every n-th row is rebuilt and re-scored; 0 disables.
  int spot_check_every = 10;
};

struct BenchPoint {
  int k = 0;
  Index num_intervals = 0;
};

std::vector<Index> default_interval_sweep(int k);
std::vector<BenchPoint> sweep_points(const BenchConfig& config);

// Runs every point x seed x method in order. Instances come from the
// generator defaults for the point's k with the given user count and
// interval count; the seed of repetition s is base_seed + s and is shared
// by the generator and RAND. Throws VerificationFailure when a spot check
// disagrees.
std::vector<BenchRow> run_bench(
    const BenchConfig& config,
    const std::function<void(const BenchRow&)>& sink = {});

struct InstanceVerdict {
  double exact = 0.0;
  double grd = 0.0;
  double top = 0.0;
  double rand_mean = 0.0;
  std::vector<std::string> failures;
};

// Runs all four methods and checks exact >= GRD >= 0, feasibility of every
// schedule, and that GRD's accepted scores add up to its utility.
InstanceVerdict verify_instance(const Instance& instance, int k,
                                int rand_seeds, std::uint64_t seed);

struct VerifyConfig {
  int count = 200;
  TinyParams tiny;
  int rand_seeds = 20;
  std::uint64_t seed = 1;
};

struct VerifySummary {
  int instances = 0;
  int failed = 0;
  double min_ratio = 1.0;  // GRD / exact; 1 when exact is 0
  double mean_ratio = 1.0;
  std::vector<std::string> diagnostics;
};

VerifySummary run_verify(const VerifyConfig& config);

}  // namespace ses

#endif  // SES_HARNESS_HPP_
