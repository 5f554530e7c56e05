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

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "ses/instancegen.hpp"
#include "ses/model.hpp"

namespace ses {
namespace {

using testing::make_instance;

Instance three_events(double theta) {
  return make_instance(theta, {"t1", "t2"},
                       {{"a", "L", 5.0}, {"b", "L", 3.0}, {"c", "M", 3.0}},
                       {}, {"u"});
}

TEST_CASE("feasibility on an empty schedule") {
  const Instance in = three_events(20.0);
  const Schedule s(in);
  CHECK(is_feasible_assignment(in, s, "a", "t1"));
  CHECK(is_valid_assignment(in, s, "a", "t1"));
}

TEST_CASE("location clash in the same interval is infeasible") {
  const Instance in = three_events(20.0);
  Schedule s(in);
  insert_assignment(s, {0, 0, 0.0});
  CHECK_FALSE(is_feasible_assignment(in, s, "b", "t1"));
  CHECK(is_feasible_assignment(in, s, "b", "t2"));
  CHECK(is_feasible_assignment(in, s, "c", "t1"));
}

TEST_CASE("resources over theta are infeasible") {
  Instance in = make_instance(20.0, {"t"},
                              {{"a", "L1", 18.0}, {"b", "L2", 3.0},
                               {"c", "L3", 2.0}},
                              {}, {"u"});
  Schedule s(in);
  insert_assignment(s, {0, 0, 0.0});
  CHECK(s.resource_use(0) == 18.0);
  CHECK_FALSE(is_feasible_assignment(in, s, "b", "t"));
  CHECK(is_feasible_assignment(in, s, "c", "t"));  // 20 <= 20
}

TEST_CASE("validity also requires an unscheduled event") {
  const Instance in = three_events(20.0);
  Schedule s(in);
  insert_assignment(s, {2, 0, 0.0});
  CHECK(is_feasible_assignment(in, s, "c", "t2"));
  CHECK_FALSE(is_valid_assignment(in, s, "c", "t2"));
  CHECK(is_valid_assignment(in, s, "a", "t2"));

  const Instance tight = three_events(4.0);
  const Schedule empty(tight);
  CHECK_FALSE(is_valid_assignment(tight, empty, "a", "t1"));  // 5 > 4
}

TEST_CASE("unknown ids are input errors") {
  const Instance in = three_events(20.0);
  const Schedule s(in);
  CHECK_THROWS_AS(is_feasible_assignment(in, s, "zz", "t1"), InputError);
  CHECK_THROWS_AS(is_valid_assignment(in, s, "a", "t9"), InputError);
  CHECK_THROWS_AS(is_feasible_assignment(in, s, Index{3}, Index{0}),
                  InputError);
}

TEST_CASE("insert keeps the bookkeeping") {
  const Instance in = three_events(20.0);
  Schedule s(in);
  insert_assignment(s, {0, 1, 0.0});
  CHECK(s.size() == 1);
  CHECK(s.resource_use(1) == 5.0);
  CHECK(s.interval_of(0) == Index{1});
  CHECK_FALSE(s.interval_of(1).has_value());

  insert_assignment(s, {2, 1, 0.0});
  CHECK(s.size() == 2);
  CHECK(s.resource_use(1) == 8.0);
  CHECK(s.locations(1).size() == 2);
  CHECK(s.events_at(1) == std::vector<Index>{0, 2});

  CHECK_THROWS_AS(insert_assignment(s, {0, 0, 0.0}), InvariantError);
  CHECK_THROWS_AS(insert_assignment(s, {1, 1, 0.0}), InvariantError);
  CHECK(s.size() == 2);
}

TEST_CASE("validate_instance reports each breach") {
  Instance in = three_events(20.0);
  CHECK(validate_instance(in).empty());

  in.event_interest(0, 1) = 1.5;
  auto v = validate_instance(in);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == Violation::Kind::kInterestOutOfRange);

  in.event_interest(0, 1) = 0.5;
  in.competing.push_back({"x", "t7"});
  in.resize_matrices();
  v = validate_instance(in);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == Violation::Kind::kDanglingInterval);

  in.competing.back().interval = "t1";
  in.users.push_back("u");
  in.resize_matrices();
  in.activity(0, 0) = -0.1;
  v = validate_instance(in);
  REQUIRE(v.size() == 2);
  CHECK(v[0].kind == Violation::Kind::kDuplicateId);
  CHECK(v[1].kind == Violation::Kind::kActivityOutOfRange);

  Instance shared = three_events(20.0);
  shared.competing.push_back({"a", "t1"});
  shared.theta = -1.0;
  shared.resize_matrices();
  v = validate_instance(shared);
  REQUIRE(v.size() == 2);
  CHECK(v[0].kind == Violation::Kind::kNegativeTheta);
  CHECK(v[1].kind == Violation::Kind::kDuplicateId);
}

// Random valid inserts on generated tiny instances.
struct Trace {
  Instance instance;
  Schedule schedule;
  std::vector<Schedule> prefixes;
};

Trace random_trace(std::uint64_t seed) {
  TinyParams params;
  params.max_events = 8;
  params.max_intervals = 3;
  Trace trace{generate_tiny(params, seed).instance, {}, {}};
  trace.schedule = Schedule(trace.instance);
  std::mt19937_64 rng(seed);
  const Index n = trace.instance.num_events();
  const Index m = trace.instance.num_intervals();
  for (int attempt = 0; attempt < 20; ++attempt) {
    const Index e = std::uniform_int_distribution<Index>(0, n - 1)(rng);
    const Index t = std::uniform_int_distribution<Index>(0, m - 1)(rng);
    trace.prefixes.push_back(trace.schedule);
    if (is_valid_assignment(trace.instance, trace.schedule, e, t)) {
      insert_assignment(trace.schedule, {e, t, 0.0});
    }
  }
  return trace;
}

TEST_CASE("property: aggregates rebuild exactly from the assignments") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Trace trace = random_trace(seed);
    Schedule rebuilt(trace.instance);
    for (const auto& a : trace.schedule.assignments()) rebuilt.insert(a);
    for (Index t = 0; t < trace.instance.num_intervals(); ++t) {
      CHECK(rebuilt.resource_use(t) == trace.schedule.resource_use(t));
      CHECK(std::vector<int>(rebuilt.locations(t).begin(),
                             rebuilt.locations(t).end()) ==
            std::vector<int>(trace.schedule.locations(t).begin(),
                             trace.schedule.locations(t).end()));
    }
    CHECK(feasibility_violations(trace.instance, trace.schedule).empty());
  }
}

TEST_CASE("property: infeasibility persists in supersets, validity implies "
          "feasibility") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Trace trace = random_trace(seed);
    const Instance& in = trace.instance;
    for (const Schedule& prefix : trace.prefixes) {
      for (Index e = 0; e < in.num_events(); ++e) {
        for (Index t = 0; t < in.num_intervals(); ++t) {
          if (!is_feasible_assignment(in, prefix, e, t)) {
            CHECK_FALSE(is_feasible_assignment(in, trace.schedule, e, t));
          }
          if (is_valid_assignment(in, prefix, e, t)) {
            CHECK(is_feasible_assignment(in, prefix, e, t));
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace ses
