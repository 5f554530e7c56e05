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

// Expected attendance and assignment scores over a schedule.

#ifndef SES_SCORING_HPP_
#define SES_SCORING_HPP_

#include <span>
#include <vector>

#include <Eigen/Core>

#include "ses/model.hpp"

namespace ses {

// Per-(user, interval) interest aggregates for one schedule:
//   competing_interest(u, t) = sum of mu(u, c) over competing events at t
//   scheduled_interest(u, t) = sum of mu(u, e) over scheduled events at t
// The scheduled column of an interval is always re-summed over its members
// in ascending event order, so it depends on the member set only.
class ScoreState {
 public:
  ScoreState() = default;
  explicit ScoreState(const Instance& instance);

  static ScoreState from_schedule(const Instance& instance,
                                  const Schedule& schedule);

  const Eigen::MatrixXd& competing_interest() const { return competing_; }
  const Eigen::MatrixXd& scheduled_interest() const { return scheduled_; }

  bool is_applied(Index event) const;
  // Scheduled events at an interval, ascending.
  std::span<const Index> members(Index interval) const;

  // Throws InvariantError when the event was applied before.
  void apply(const Instance& instance, Index event, Index interval);

 private:
  Eigen::MatrixXd competing_;
  Eigen::MatrixXd scheduled_;
  std::vector<Index> interval_of_;
  std::vector<std::vector<Index>> members_;
};

void apply_assignment(ScoreState& state, const Instance& instance,
                      Index event, Index interval);

// Probability that `user` attends `event` at `interval`. The event must
// already be applied to the state at that interval.
double attendance_probability(const Instance& instance,
                              const ScoreState& state, Index user,
                              Index event, Index interval);

// Sum of attendance probabilities over all users.
double expected_attendance(const Instance& instance, const ScoreState& state,
                           Index event, Index interval);

// Total expected attendance of a schedule, from a fresh state. Throws
// InvariantError for an infeasible schedule.
double total_utility(const Instance& instance, const Schedule& schedule);

// Gain in total expected attendance from adding an unscheduled event to an
// interval. Feasibility is not checked. O(|users|).
double assignment_score(const Instance& instance, const ScoreState& state,
                        Index event, Index interval);

}  // namespace ses

#endif  // SES_SCORING_HPP_
