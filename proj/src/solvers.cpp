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

#include "ses/solvers.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace ses {
namespace {

using Clock = std::chrono::steady_clock;

void check_k(int k) {
  if (k < 1) throw InputError("k must be at least 1, got " + std::to_string(k));
}

bool is_valid(const Schedule& schedule, const Assignment& a) {
  return !schedule.contains_event(a.event) &&
         schedule.fits(a.event, a.interval);
}

std::vector<Assignment> initial_scores(const Instance& instance,
                                       const ScoreState& state,
                                       SolveCounters& counters) {
  std::vector<Assignment> list;
  list.reserve(static_cast<std::size_t>(instance.num_events() *
                                        instance.num_intervals()));
  for (Index e = 0; e < instance.num_events(); ++e) {
    for (Index t = 0; t < instance.num_intervals(); ++t) {
      list.push_back({e, t, assignment_score(instance, state, e, t)});
      ++counters.score_computations;
    }
  }
  return list;
}

void accept(const Instance& instance, SolveReport& report, ScoreState& state,
            const Assignment& a) {
  report.schedule.insert(a);
  state.apply(instance, a.event, a.interval);
}

void finish(const Instance& instance, SolveReport& report,
            Clock::time_point start, int k) {
  report.wall_time =
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                           start);
  report.shortfall = report.schedule.size() < static_cast<std::size_t>(k);
  report.utility = total_utility(instance, report.schedule);
}

}  // namespace

double SolveReport::accepted_score_sum() const {
  double sum = 0.0;
  for (const auto& a : schedule.assignments()) sum += a.score;
  return sum;
}

SolveReport solve_grd(const Instance& instance, int k,
                      const GrdObserver& observer) {
  check_k(k);
  const auto start = Clock::now();
  SolveReport report;
  report.schedule = Schedule(instance);
  ScoreState state(instance);
  std::vector<Assignment> list = initial_scores(instance, state,
                                                report.counters);
  const auto target = static_cast<std::size_t>(k);

  while (report.schedule.size() < target && !list.empty()) {
    auto top = std::min_element(list.begin(), list.end(), ranks_before);
    const Assignment popped = *top;
    *top = list.back();
    list.pop_back();
    ++report.counters.iterations;

    if (!is_valid(report.schedule, popped)) {
      ++report.counters.invalid_pops;
      continue;
    }
    accept(instance, report, state, popped);

    const bool rescore = report.schedule.size() < target;
    if (rescore) {
      for (std::size_t i = 0; i < list.size();) {
        Assignment& a = list[i];
        if (!is_valid(report.schedule, a)) {
          a = list.back();
          list.pop_back();
          continue;
        }
        if (a.interval == popped.interval) {
          a.score = assignment_score(instance, state, a.event, a.interval);
          ++report.counters.score_updates;
        }
        ++i;
      }
    }
    if (observer) {
      observer(GrdStep{report.schedule, state, popped, list, rescore});
    }
  }
  finish(instance, report, start, k);
  return report;
}

SolveReport solve_top(const Instance& instance, int k) {
  check_k(k);
  const auto start = Clock::now();
  SolveReport report;
  report.schedule = Schedule(instance);
  ScoreState state(instance);
  std::vector<Assignment> list = initial_scores(instance, state,
                                                report.counters);
  std::sort(list.begin(), list.end(), ranks_before);
  const auto target = static_cast<std::size_t>(k);
  for (const Assignment& a : list) {
    if (report.schedule.size() >= target) break;
    ++report.counters.iterations;
    if (!is_valid(report.schedule, a)) {
      ++report.counters.invalid_pops;
      continue;
    }
    // The cached score stays the stale initial one.
    report.schedule.insert(a);
  }
  finish(instance, report, start, k);
  return report;
}

SolveReport solve_rand(const Instance& instance, int k, std::uint64_t seed) {
  check_k(k);
  const auto start = Clock::now();
  SolveReport report;
  report.schedule = Schedule(instance);
  ScoreState state(instance);
  std::vector<std::pair<Index, Index>> untried;
  untried.reserve(static_cast<std::size_t>(instance.num_events() *
                                           instance.num_intervals()));
  for (Index e = 0; e < instance.num_events(); ++e) {
    for (Index t = 0; t < instance.num_intervals(); ++t) {
      untried.emplace_back(e, t);
    }
  }

  std::mt19937_64 rng(seed);
  const auto target = static_cast<std::size_t>(k);
  for (std::size_t drawn = 0;
       drawn < untried.size() && report.schedule.size() < target; ++drawn) {
    std::uniform_int_distribution<std::size_t> pick(drawn,
                                                    untried.size() - 1);
    std::swap(untried[drawn], untried[pick(rng)]);
    const auto [e, t] = untried[drawn];
    ++report.counters.iterations;
    Assignment a{e, t, 0.0};
    if (!is_valid(report.schedule, a)) {
      ++report.counters.invalid_pops;
      continue;
    }
    a.score = assignment_score(instance, state, e, t);
    ++report.counters.score_computations;
    accept(instance, report, state, a);
  }
  finish(instance, report, start, k);
  return report;
}

namespace {

struct Candidate {
  double utility;
  std::vector<Assignment> assignments;
};

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const Instance& instance, int k)
      : instance_(instance), k_(static_cast<std::size_t>(k)) {}

  void run(SolveCounters& counters) {
    Schedule empty(instance_);
    std::vector<Assignment> chosen;
    visit(0, empty, chosen);
    counters.iterations = nodes_;
  }

  const Candidate& best() const { return *best_; }

 private:
  // Nodes are visited in lexicographic order of their sorted assignment
  // lists, so among equal candidates the first one seen is kept.
  void visit(Index next_event, const Schedule& schedule,
             std::vector<Assignment>& chosen) {
    ++nodes_;
    const double utility = total_utility(instance_, schedule);
    if (!best_ || utility > best_->utility ||
        (utility == best_->utility &&
         chosen.size() > best_->assignments.size())) {
      best_ = Candidate{utility, chosen};
    }
    if (chosen.size() == k_) return;

    for (Index e = next_event; e < instance_.num_events(); ++e) {
      for (Index t = 0; t < instance_.num_intervals(); ++t) {
        if (!schedule.fits(e, t)) continue;
        Schedule extended = schedule;
        extended.insert({e, t, 0.0});
        chosen.push_back({e, t, 0.0});
        visit(e + 1, extended, chosen);
        chosen.pop_back();
      }
    }
  }

  const Instance& instance_;
  std::size_t k_;
  std::optional<Candidate> best_;
  std::int64_t nodes_ = 0;
};

}  // namespace

SolveReport solve_exact(const Instance& instance, int k,
                        const ExactLimits& limits) {
  check_k(k);
  if (instance.num_events() > limits.max_events ||
      instance.num_intervals() > limits.max_intervals || k > limits.max_k) {
    throw SizeError("exact solver limited to " +
                    std::to_string(limits.max_events) + " events, " +
                    std::to_string(limits.max_intervals) + " intervals, k <= " +
                    std::to_string(limits.max_k));
  }
  const auto start = Clock::now();
  SolveReport report;
  report.schedule = Schedule(instance);
  ExhaustiveSearch search(instance, k);
  search.run(report.counters);

  ScoreState state(instance);
  for (Assignment a : search.best().assignments) {
    a.score = assignment_score(instance, state, a.event, a.interval);
    ++report.counters.score_computations;
    accept(instance, report, state, a);
  }
  finish(instance, report, start, k);
  return report;
}

}  // namespace ses
