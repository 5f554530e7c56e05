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

#include "ses/harness.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "ses/scoring.hpp"

namespace ses {
namespace {

constexpr double kTolerance = 1e-9;

SolveReport rebuilt(const Instance& instance, const SolveReport& report) {
  SolveReport copy = report;
  copy.schedule = Schedule(instance);
  for (const auto& a : report.schedule.assignments()) {
    copy.schedule.insert({a.event, a.interval, 0.0});
  }
  copy.utility = total_utility(instance, copy.schedule);
  return copy;
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kGrd:
      return "GRD";
    case Method::kTop:
      return "TOP";
    case Method::kRand:
      return "RAND";
    case Method::kExact:
      return "EXACT";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (Method m : {Method::kGrd, Method::kTop, Method::kRand, Method::kExact}) {
    if (method_name(m) == upper) return m;
  }
  return std::nullopt;
}

SolveReport run_method(const Instance& instance, Method method, int k,
                       std::uint64_t seed) {
  switch (method) {
    case Method::kGrd:
      return solve_grd(instance, k);
    case Method::kTop:
      return solve_top(instance, k);
    case Method::kRand:
      return solve_rand(instance, k, seed);
    case Method::kExact:
      return solve_exact(instance, k);
  }
  throw InputError("unknown method");
}

bool close_relative(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

std::string csv_row(const BenchRow& row) {
  std::ostringstream out;
  out.precision(17);
  out << method_name(row.method) << ',' << row.k << ',' << row.num_intervals
      << ',' << row.num_users << ',' << row.seed << ',' << row.utility << ','
      << row.wall_time_ms << ',' << (row.shortfall ? "true" : "false");
  return out.str();
}

std::vector<Index> default_interval_sweep(int k) {
  const Index n = k;
  std::vector<Index> out;
  for (Index v : {n / 5, n / 2, n, 3 * n / 2, 2 * n, 3 * n}) {
    out.push_back(std::max<Index>(1, v));
  }
  return out;
}

std::vector<BenchPoint> sweep_points(const BenchConfig& config) {
  std::vector<BenchPoint> points;
  if (config.sweep != Sweep::kIntervals) {
    for (int k : config.k_values) {
      points.push_back({k, GenParams::defaults_for(k).num_intervals});
    }
  }
  if (config.sweep != Sweep::kK) {
    const auto values = config.interval_values.empty()
                            ? default_interval_sweep(config.fixed_k)
                            : config.interval_values;
    for (Index t : values) points.push_back({config.fixed_k, t});
  }
  return points;
}

std::vector<BenchRow> run_bench(
    const BenchConfig& config,
    const std::function<void(const BenchRow&)>& sink) {
  if (config.seeds < 1) throw InputError("bench needs at least one seed");
  std::vector<BenchRow> rows;
  for (const BenchPoint& point : sweep_points(config)) {
    for (int s = 0; s < config.seeds; ++s) {
      GenParams params =
          GenParams::defaults_for(point.k, config.base_seed + s);
      params.num_intervals = point.num_intervals;
      params.num_users = config.num_users;
      const Instance instance = generate(params);
      for (Method method : config.methods) {
        const SolveReport report =
            run_method(instance, method, point.k, params.seed);
        BenchRow row{method,          point.k,
                     point.num_intervals, config.num_users,
                     params.seed,     report.utility,
                     report.wall_time_ms(), report.shortfall};
        if (config.spot_check_every > 0 &&
            rows.size() % static_cast<std::size_t>(config.spot_check_every) ==
                0) {
          const double again = rebuilt(instance, report).utility;
          if (!close_relative(again, row.utility, kTolerance)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "spot check failed for " << csv_row(row)
                << ": recomputed utility " << again;
            throw VerificationFailure(msg.str());
          }
        }
        rows.push_back(row);
        if (sink) sink(row);
      }
    }
  }
  return rows;
}

InstanceVerdict verify_instance(const Instance& instance, int k,
                                int rand_seeds, std::uint64_t seed) {
  InstanceVerdict verdict;
  auto check_schedule = [&](std::string_view name, const SolveReport& r) {
    for (const auto& problem : feasibility_violations(instance, r.schedule)) {
      verdict.failures.push_back(std::string(name) + ": " + problem);
    }
    if (r.schedule.size() > static_cast<std::size_t>(k)) {
      verdict.failures.push_back(std::string(name) + ": more than k events");
    }
  };

  const SolveReport exact = solve_exact(instance, k);
  const SolveReport grd = solve_grd(instance, k);
  const SolveReport top = solve_top(instance, k);
  check_schedule("EXACT", exact);
  check_schedule("GRD", grd);
  check_schedule("TOP", top);
  verdict.exact = exact.utility;
  verdict.grd = grd.utility;
  verdict.top = top.utility;

  double rand_total = 0.0;
  for (int r = 0; r < rand_seeds; ++r) {
    const SolveReport rand = solve_rand(instance, k, seed + r);
    check_schedule("RAND", rand);
    rand_total += rand.utility;
  }
  verdict.rand_mean = rand_seeds > 0 ? rand_total / rand_seeds : 0.0;

  std::ostringstream msg;
  msg.precision(17);
  if (verdict.grd < 0.0) {
    msg << "GRD utility " << verdict.grd << " is negative";
    verdict.failures.push_back(msg.str());
    msg.str("");
  }
  if (verdict.exact < verdict.grd &&
      !close_relative(verdict.exact, verdict.grd, kTolerance)) {
    msg << "GRD utility " << verdict.grd << " exceeds exact "
        << verdict.exact;
    verdict.failures.push_back(msg.str());
    msg.str("");
  }
  if (!close_relative(grd.accepted_score_sum(), grd.utility, kTolerance)) {
    msg << "GRD accepted scores sum to " << grd.accepted_score_sum()
        << " but utility is " << grd.utility;
    verdict.failures.push_back(msg.str());
  }
  return verdict;
}

VerifySummary run_verify(const VerifyConfig& config) {
  if (config.count < 1) throw InputError("verify count must be positive");
  if (config.rand_seeds < 1) throw InputError("rand seeds must be positive");
  const ExactLimits limits;
  if (config.tiny.max_events > limits.max_events ||
      config.tiny.max_intervals > limits.max_intervals ||
      config.tiny.max_k > limits.max_k) {
    throw SizeError("tiny instance bounds exceed the exact solver limits");
  }
  VerifySummary summary;
  double ratio_total = 0.0;
  for (int i = 0; i < config.count; ++i) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(i);
    const TinyInstance tiny = generate_tiny(config.tiny, seed);
    const InstanceVerdict verdict =
        verify_instance(tiny.instance, tiny.k, config.rand_seeds, seed);
    const double ratio =
        verdict.exact > 0.0 ? verdict.grd / verdict.exact : 1.0;
    summary.min_ratio = std::min(summary.min_ratio, ratio);
    ratio_total += ratio;
    ++summary.instances;
    if (!verdict.failures.empty()) {
      ++summary.failed;
      for (const auto& f : verdict.failures) {
        summary.diagnostics.push_back("instance seed " + std::to_string(seed) +
                                      ": " + f);
      }
    }
  }
  summary.mean_ratio = ratio_total / summary.instances;
  return summary;
}

}  // namespace ses
