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

#include "ses/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ses {
namespace {

template <typename Range, typename Proj>
Index find_id(const Range& range, std::string_view id, Proj proj,
              std::string_view what) {
  for (std::size_t i = 0; i < range.size(); ++i) {
    if (proj(range[i]) == id) return static_cast<Index>(i);
  }
  throw InputError("unknown " + std::string(what) + " id '" + std::string(id) +
                   "'");
}

void check_range(std::vector<Violation>& out, Violation::Kind kind,
                 const Eigen::MatrixXd& values, const Instance& instance,
                 const auto& column_id) {
  for (Index c = 0; c < values.cols(); ++c) {
    for (Index u = 0; u < values.rows(); ++u) {
      const double v = values(u, c);
      if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream msg;
        msg << "user '" << instance.users[u] << "', '" << column_id(c)
            << "': " << v;
        out.push_back({kind, msg.str()});
      }
    }
  }
}

}  // namespace

void Instance::resize_matrices() {
  activity = Eigen::MatrixXd::Zero(num_users(), num_intervals());
  event_interest = Eigen::MatrixXd::Zero(num_users(), num_events());
  competing_interest = Eigen::MatrixXd::Zero(num_users(), num_competing());
}

Index event_index(const Instance& instance, std::string_view id) {
  return find_id(instance.events, id,
                 [](const CandidateEvent& e) -> const std::string& {
                   return e.id;
                 },
                 "event");
}

Index interval_index(const Instance& instance, std::string_view id) {
  return find_id(instance.intervals, id,
                 [](const std::string& s) -> const std::string& { return s; },
                 "interval");
}

Index user_index(const Instance& instance, std::string_view id) {
  return find_id(instance.users, id,
                 [](const std::string& s) -> const std::string& { return s; },
                 "user");
}

Index competing_index(const Instance& instance, std::string_view id) {
  return find_id(instance.competing, id,
                 [](const CompetingEvent& c) -> const std::string& {
                   return c.id;
                 },
                 "competing event");
}

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kNegativeTheta:
      return "negative theta";
    case Violation::Kind::kNegativeResources:
      return "negative required resources";
    case Violation::Kind::kDuplicateId:
      return "duplicate id";
    case Violation::Kind::kDanglingInterval:
      return "dangling interval";
    case Violation::Kind::kInterestOutOfRange:
      return "interest out of range";
    case Violation::Kind::kActivityOutOfRange:
      return "activity out of range";
    case Violation::Kind::kShapeMismatch:
      return "shape mismatch";
  }
  return "unknown";
}

std::vector<Violation> validate_instance(const Instance& instance) {
  using Kind = Violation::Kind;
  std::vector<Violation> out;

  if (!(instance.theta >= 0.0)) {
    out.push_back({Kind::kNegativeTheta, std::to_string(instance.theta)});
  }
  for (const auto& e : instance.events) {
    if (!(e.resources >= 0.0)) {
      out.push_back({Kind::kNegativeResources,
                     e.id + ": " + std::to_string(e.resources)});
    }
  }

  auto report_duplicates = [&](const std::vector<std::string>& ids,
                               std::string_view what) {
    std::set<std::string_view> seen;
    for (const auto& id : ids) {
      if (!seen.insert(id).second) {
        out.push_back({Kind::kDuplicateId,
                       std::string(what) + " '" + id + "'"});
      }
    }
  };
  std::vector<std::string> event_ids;  // events and competing share a namespace
  for (const auto& e : instance.events) event_ids.push_back(e.id);
  for (const auto& c : instance.competing) event_ids.push_back(c.id);
  report_duplicates(event_ids, "event");
  report_duplicates(instance.users, "user");
  report_duplicates(instance.intervals, "interval");

  const std::set<std::string_view> intervals(instance.intervals.begin(),
                                             instance.intervals.end());
  for (const auto& c : instance.competing) {
    if (!intervals.contains(c.interval)) {
      out.push_back({Kind::kDanglingInterval,
                     "competing '" + c.id + "' -> '" + c.interval + "'"});
    }
  }

  const auto shape_ok = [&](const Eigen::MatrixXd& m, Index cols,
                            std::string_view name) {
    if (m.rows() == instance.num_users() && m.cols() == cols) return true;
    std::ostringstream msg;
    msg << name << " is " << m.rows() << "x" << m.cols() << ", expected "
        << instance.num_users() << "x" << cols;
    out.push_back({Kind::kShapeMismatch, msg.str()});
    return false;
  };
  if (shape_ok(instance.activity, instance.num_intervals(), "activity")) {
    check_range(out, Kind::kActivityOutOfRange, instance.activity, instance,
                [&](Index c) { return instance.intervals[c]; });
  }
  if (shape_ok(instance.event_interest, instance.num_events(),
               "event interest")) {
    check_range(out, Kind::kInterestOutOfRange, instance.event_interest,
                instance, [&](Index c) { return instance.events[c].id; });
  }
  if (shape_ok(instance.competing_interest, instance.num_competing(),
               "competing interest")) {
    check_range(out, Kind::kInterestOutOfRange, instance.competing_interest,
                instance, [&](Index c) { return instance.competing[c].id; });
  }
  return out;
}

Schedule::Schedule(const Instance& instance)
    : theta_(instance.theta),
      interval_of_(instance.events.size(), -1),
      resource_use_(instance.intervals.size(), 0.0),
      locations_(instance.intervals.size()) {
  std::map<std::string_view, int> codes;
  for (const auto& e : instance.events) codes.emplace(e.location, 0);
  int next = 0;
  for (auto& [name, code] : codes) code = next++;
  event_location_.reserve(instance.events.size());
  event_resources_.reserve(instance.events.size());
  for (const auto& e : instance.events) {
    event_location_.push_back(codes.at(e.location));
    event_resources_.push_back(e.resources);
  }
}

void Schedule::check_event(Index event) const {
  if (event < 0 || event >= num_events()) {
    throw InputError("event index " + std::to_string(event) +
                     " out of range");
  }
}

void Schedule::check_interval(Index interval) const {
  if (interval < 0 || interval >= num_intervals()) {
    throw InputError("interval index " + std::to_string(interval) +
                     " out of range");
  }
}

bool Schedule::contains_event(Index event) const {
  check_event(event);
  return interval_of_[event] >= 0;
}

std::optional<Index> Schedule::interval_of(Index event) const {
  check_event(event);
  if (interval_of_[event] < 0) return std::nullopt;
  return interval_of_[event];
}

std::vector<Index> Schedule::events_at(Index interval) const {
  check_interval(interval);
  std::vector<Index> out;
  for (const auto& a : assignments_) {
    if (a.interval == interval) out.push_back(a.event);
  }
  return out;
}

double Schedule::resource_use(Index interval) const {
  check_interval(interval);
  return resource_use_[interval];
}

std::span<const int> Schedule::locations(Index interval) const {
  check_interval(interval);
  return locations_[interval];
}

int Schedule::location_code(Index event) const {
  check_event(event);
  return event_location_[event];
}

double Schedule::required_resources(Index event) const {
  check_event(event);
  return event_resources_[event];
}

bool Schedule::fits(Index event, Index interval) const {
  check_event(event);
  check_interval(interval);
  const auto& occupied = locations_[interval];
  if (std::find(occupied.begin(), occupied.end(), event_location_[event]) !=
      occupied.end()) {
    return false;
  }
  return resource_use_[interval] + event_resources_[event] <= theta_;
}

void Schedule::insert(const Assignment& assignment) {
  if (contains_event(assignment.event)) {
    throw InvariantError("event index " + std::to_string(assignment.event) +
                         " is already scheduled");
  }
  if (!fits(assignment.event, assignment.interval)) {
    throw InvariantError("assignment of event index " +
                         std::to_string(assignment.event) +
                         " to interval index " +
                         std::to_string(assignment.interval) +
                         " is infeasible");
  }
  assignments_.push_back(assignment);
  interval_of_[assignment.event] = assignment.interval;
  resource_use_[assignment.interval] += event_resources_[assignment.event];
  locations_[assignment.interval].push_back(event_location_[assignment.event]);
}

namespace {

void check_pair(const Instance& instance, const Schedule& schedule,
                Index event, Index interval) {
  if (event < 0 || event >= instance.num_events()) {
    throw InputError("event index " + std::to_string(event) +
                     " out of range");
  }
  if (interval < 0 || interval >= instance.num_intervals()) {
    throw InputError("interval index " + std::to_string(interval) +
                     " out of range");
  }
  if (schedule.num_events() != instance.num_events() ||
      schedule.num_intervals() != instance.num_intervals()) {
    throw InputError("schedule was built for a different instance");
  }
}

}  // namespace

bool is_feasible_assignment(const Instance& instance, const Schedule& schedule,
                            Index event, Index interval) {
  check_pair(instance, schedule, event, interval);
  return schedule.fits(event, interval);
}

bool is_feasible_assignment(const Instance& instance, const Schedule& schedule,
                            std::string_view event,
                            std::string_view interval) {
  return is_feasible_assignment(instance, schedule,
                                event_index(instance, event),
                                interval_index(instance, interval));
}

bool is_valid_assignment(const Instance& instance, const Schedule& schedule,
                         Index event, Index interval) {
  return is_feasible_assignment(instance, schedule, event, interval) &&
         !schedule.contains_event(event);
}

bool is_valid_assignment(const Instance& instance, const Schedule& schedule,
                         std::string_view event, std::string_view interval) {
  return is_valid_assignment(instance, schedule, event_index(instance, event),
                             interval_index(instance, interval));
}

void insert_assignment(Schedule& schedule, const Assignment& assignment) {
  schedule.insert(assignment);
}

std::vector<std::string> feasibility_violations(const Instance& instance,
                                                const Schedule& schedule) {
  std::vector<std::string> out;
  std::set<Index> seen_events;
  std::map<Index, double> use;
  std::map<Index, std::set<std::string>> places;
  for (const auto& a : schedule.assignments()) {
    if (a.event < 0 || a.event >= instance.num_events() || a.interval < 0 ||
        a.interval >= instance.num_intervals()) {
      out.push_back("assignment references an unknown event or interval");
      continue;
    }
    const auto& event = instance.events[a.event];
    const auto& interval = instance.intervals[a.interval];
    if (!seen_events.insert(a.event).second) {
      out.push_back("event '" + event.id + "' is assigned more than once");
    }
    if (!places[a.interval].insert(event.location).second) {
      out.push_back("location '" + event.location + "' is used twice in '" +
                    interval + "'");
    }
    use[a.interval] += event.resources;
  }
  for (const auto& [t, total] : use) {
    if (total > instance.theta) {
      out.push_back("interval '" + instance.intervals[t] + "' uses " +
                    std::to_string(total) + " > theta " +
                    std::to_string(instance.theta));
    }
  }
  return out;
}

}  // namespace ses
