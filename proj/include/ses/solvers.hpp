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

// Solvers for social event scheduling: the greedy GRD algorithm, the TOP
// and RAND baselines, and an exhaustive solver for tiny instances.

#ifndef SES_SOLVERS_HPP_
#define SES_SOLVERS_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>

#include "ses/model.hpp"
#include "ses/scoring.hpp"

namespace ses {

struct SolveCounters {
  std::int64_t iterations = 0;          // assignments popped or drawn
  std::int64_t score_computations = 0;  // initial scores
  std::int64_t score_updates = 0;       // rescored after an acceptance
  std::int64_t invalid_pops = 0;
};

struct SolveReport {
  Schedule schedule;
  double utility = 0.0;  // recomputed from scratch
  std::chrono::nanoseconds wall_time{0};
  SolveCounters counters;
  bool shortfall = false;

  double wall_time_ms() const {
    return std::chrono::duration<double, std::milli>(wall_time).count();
  }
  // Sum of the scores cached on the accepted assignments.
  double accepted_score_sum() const;
};

// Pop order shared by all solvers: higher score first, then smaller event,
// then smaller interval.
inline bool ranks_before(const Assignment& a, const Assignment& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.event != b.event) return a.event < b.event;
  return a.interval < b.interval;
}

// State visible to a GRD observer right after an acceptance. `pending` is
// the remaining assignment list; `rescored` is false on the final
// acceptance, where the list is left as is.
struct GrdStep {
  const Schedule& schedule;
  const ScoreState& state;
  Assignment accepted;
  std::span<const Assignment> pending;
  bool rescored;
};

using GrdObserver = std::function<void(const GrdStep&)>;

// Throws InputError for k < 1.
SolveReport solve_grd(const Instance& instance, int k,
                      const GrdObserver& observer = {});
SolveReport solve_top(const Instance& instance, int k);
SolveReport solve_rand(const Instance& instance, int k, std::uint64_t seed);

struct ExactLimits {
  Index max_events = 8;
  Index max_intervals = 4;
  int max_k = 4;
};

// Best schedule over every feasible schedule of at most k events. Ties go
// to the larger schedule, then to the lexicographically smallest list of
// (event, interval) pairs. Throws SizeError beyond `limits`.
SolveReport solve_exact(const Instance& instance, int k,
                        const ExactLimits& limits = {});

}  // namespace ses

#endif  // SES_SOLVERS_HPP_
