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

// Problem model for social event scheduling: candidate and competing events,
// users, time intervals, and the schedules built over them.
//
// User attributes are stored densely in user-major matrices (one row per
// user) so that per-interval and per-event columns are contiguous. A zero
// entry is equivalent to an absent interest/activity value.

#ifndef SES_MODEL_HPP_
#define SES_MODEL_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace ses {

using Index = Eigen::Index;

// Bad ids, bad parameters, malformed requests.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller broke a precondition that keeps internal bookkeeping consistent.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A request exceeds configured size guard rails.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct CandidateEvent {
  std::string id;
  std::string location;
  double resources = 0.0;
};

struct CompetingEvent {
  std::string id;
  std::string interval;
};

struct Instance {
  double theta = 0.0;
  std::vector<std::string> intervals;
  std::vector<CandidateEvent> events;
  std::vector<CompetingEvent> competing;
  std::vector<std::string> users;

  Eigen::MatrixXd activity;            // |users| x |intervals|
  Eigen::MatrixXd event_interest;      // |users| x |events|
  Eigen::MatrixXd competing_interest;  // |users| x |competing|

  Index num_users() const { return static_cast<Index>(users.size()); }
  Index num_events() const { return static_cast<Index>(events.size()); }
  Index num_intervals() const { return static_cast<Index>(intervals.size()); }
  Index num_competing() const { return static_cast<Index>(competing.size()); }

  // Sizes the matrices to match the id collections, zero-filled.
  void resize_matrices();
};

// Id lookups. Throw InputError for unknown ids.
Index event_index(const Instance& instance, std::string_view id);
Index interval_index(const Instance& instance, std::string_view id);
Index user_index(const Instance& instance, std::string_view id);
Index competing_index(const Instance& instance, std::string_view id);

struct Violation {
  enum class Kind {
    kNegativeTheta,
    kNegativeResources,
    kDuplicateId,
    kDanglingInterval,
    kInterestOutOfRange,
    kActivityOutOfRange,
    kShapeMismatch,
  };
  Kind kind;
  std::string detail;
};

std::string_view to_string(Violation::Kind kind);

// Reports every breach of the instance invariants; never throws.
std::vector<Violation> validate_instance(const Instance& instance);

struct Assignment {
  Index event = 0;
  Index interval = 0;
  double score = 0.0;
};

// A feasible set of event -> interval assignments with per-interval
// resource and location bookkeeping. Holds copies of the per-event data it
// needs, so it does not reference the instance it was built for.
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(const Instance& instance);

  std::span<const Assignment> assignments() const { return assignments_; }
  std::size_t size() const { return assignments_.size(); }
  bool empty() const { return assignments_.empty(); }

  Index num_events() const { return static_cast<Index>(interval_of_.size()); }
  Index num_intervals() const {
    return static_cast<Index>(resource_use_.size());
  }
  double theta() const { return theta_; }

  bool contains_event(Index event) const;
  // t_e(S); empty when the event is unscheduled.
  std::optional<Index> interval_of(Index event) const;
  // E_t(S) in insertion order.
  std::vector<Index> events_at(Index interval) const;

  double resource_use(Index interval) const;
  std::span<const double> resource_use() const { return resource_use_; }
  // Interned location codes occupied at an interval.
  std::span<const int> locations(Index interval) const;
  int location_code(Index event) const;
  double required_resources(Index event) const;

  bool fits(Index event, Index interval) const;

  // Throws InvariantError unless the pair is valid against this schedule.
  void insert(const Assignment& assignment);

 private:
  void check_event(Index event) const;
  void check_interval(Index interval) const;

  double theta_ = 0.0;
  std::vector<int> event_location_;
  std::vector<double> event_resources_;
  std::vector<Assignment> assignments_;
  std::vector<Index> interval_of_;  // -1 when unscheduled
  std::vector<double> resource_use_;
  std::vector<std::vector<int>> locations_;
};

// Location and resources constraints only.
bool is_feasible_assignment(const Instance& instance, const Schedule& schedule,
                            Index event, Index interval);
bool is_feasible_assignment(const Instance& instance, const Schedule& schedule,
                            std::string_view event, std::string_view interval);

// Feasible and the event is not scheduled yet.
bool is_valid_assignment(const Instance& instance, const Schedule& schedule,
                         Index event, Index interval);
bool is_valid_assignment(const Instance& instance, const Schedule& schedule,
                         std::string_view event, std::string_view interval);

void insert_assignment(Schedule& schedule, const Assignment& assignment);

// Re-checks a schedule against the instance from its assignment list alone,
// ignoring the schedule's cached aggregates. Empty when feasible.
std::vector<std::string> feasibility_violations(const Instance& instance,
                                                const Schedule& schedule);

}  // namespace ses

#endif  // SES_MODEL_HPP_
