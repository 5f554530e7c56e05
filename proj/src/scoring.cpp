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

#include "ses/scoring.hpp"

#include <algorithm>
#include <string>

#include "ses/luce.hpp"

namespace ses {
namespace {

void check_user(const Instance& instance, Index user) {
  if (user < 0 || user >= instance.num_users()) {
    throw InputError("user index " + std::to_string(user) + " out of range");
  }
}

void check_event(const Instance& instance, Index event) {
  if (event < 0 || event >= instance.num_events()) {
    throw InputError("event index " + std::to_string(event) +
                     " out of range");
  }
}

void check_interval(const Instance& instance, Index interval) {
  if (interval < 0 || interval >= instance.num_intervals()) {
    throw InputError("interval index " + std::to_string(interval) +
                     " out of range");
  }
}

}  // namespace

ScoreState::ScoreState(const Instance& instance)
    : competing_(Eigen::MatrixXd::Zero(instance.num_users(),
                                       instance.num_intervals())),
      scheduled_(Eigen::MatrixXd::Zero(instance.num_users(),
                                       instance.num_intervals())),
      interval_of_(instance.events.size(), -1),
      members_(instance.intervals.size()) {
  for (Index c = 0; c < instance.num_competing(); ++c) {
    const Index t = interval_index(instance, instance.competing[c].interval);
    competing_.col(t) += instance.competing_interest.col(c);
  }
}

ScoreState ScoreState::from_schedule(const Instance& instance,
                                     const Schedule& schedule) {
  ScoreState state(instance);
  for (const auto& a : schedule.assignments()) {
    state.apply(instance, a.event, a.interval);
  }
  return state;
}

bool ScoreState::is_applied(Index event) const {
  if (event < 0 || event >= static_cast<Index>(interval_of_.size())) {
    throw InputError("event index " + std::to_string(event) +
                     " out of range");
  }
  return interval_of_[event] >= 0;
}

std::span<const Index> ScoreState::members(Index interval) const {
  if (interval < 0 || interval >= static_cast<Index>(members_.size())) {
    throw InputError("interval index " + std::to_string(interval) +
                     " out of range");
  }
  return members_[interval];
}

void ScoreState::apply(const Instance& instance, Index event,
                       Index interval) {
  check_event(instance, event);
  check_interval(instance, interval);
  if (interval_of_[event] >= 0) {
    throw InvariantError("event '" + instance.events[event].id +
                         "' is already applied");
  }
  interval_of_[event] = interval;
  auto& members = members_[interval];
  members.insert(std::upper_bound(members.begin(), members.end(), event),
                 event);
  auto column = scheduled_.col(interval);
  column.setZero();
  for (const Index e : members) column += instance.event_interest.col(e);
}

void apply_assignment(ScoreState& state, const Instance& instance,
                      Index event, Index interval) {
  state.apply(instance, event, interval);
}

double attendance_probability(const Instance& instance,
                              const ScoreState& state, Index user,
                              Index event, Index interval) {
  check_user(instance, user);
  check_event(instance, event);
  check_interval(instance, interval);
  const auto members = state.members(interval);
  if (!std::binary_search(members.begin(), members.end(), event)) {
    throw InvariantError("event '" + instance.events[event].id +
                         "' is not scheduled at '" +
                         instance.intervals[interval] + "'");
  }
  const double denominator = state.scheduled_interest()(user, interval) +
                             state.competing_interest()(user, interval);
  if (!(denominator > 0.0)) return 0.0;
  return instance.activity(user, interval) *
         instance.event_interest(user, event) / denominator;
}

double expected_attendance(const Instance& instance, const ScoreState& state,
                           Index event, Index interval) {
  check_event(instance, event);
  check_interval(instance, interval);
  const auto members = state.members(interval);
  if (!std::binary_search(members.begin(), members.end(), event)) {
    throw InvariantError("event '" + instance.events[event].id +
                         "' is not scheduled at '" +
                         instance.intervals[interval] + "'");
  }
  return luce::attendance(instance.activity.col(interval).array(),
                          state.scheduled_interest().col(interval).array(),
                          state.competing_interest().col(interval).array(),
                          instance.event_interest.col(event).array())
      .sum();
}

double total_utility(const Instance& instance, const Schedule& schedule) {
  if (const auto problems = feasibility_violations(instance, schedule);
      !problems.empty()) {
    throw InvariantError("infeasible schedule: " + problems.front());
  }
  const ScoreState state = ScoreState::from_schedule(instance, schedule);
  double total = 0.0;
  for (const auto& a : schedule.assignments()) {
    total += expected_attendance(instance, state, a.event, a.interval);
  }
  return total;
}

double assignment_score(const Instance& instance, const ScoreState& state,
                        Index event, Index interval) {
  check_event(instance, event);
  check_interval(instance, interval);
  if (state.is_applied(event)) {
    throw InvariantError("event '" + instance.events[event].id +
                         "' is already scheduled");
  }
  return luce::total_gain(instance.activity.col(interval).array(),
                          state.scheduled_interest().col(interval).array(),
                          state.competing_interest().col(interval).array(),
                          instance.event_interest.col(event).array());
}

}  // namespace ses
