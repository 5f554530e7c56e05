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

#ifndef SES_TESTS_FIXTURES_HPP_
#define SES_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "ses/model.hpp"

namespace ses::testing {

// Builds an instance with every matrix zeroed; tests fill in values.
inline Instance make_instance(double theta, std::vector<std::string> intervals,
                              std::vector<CandidateEvent> events,
                              std::vector<CompetingEvent> competing,
                              std::vector<std::string> users) {
  Instance in;
  in.theta = theta;
  in.intervals = std::move(intervals);
  in.events = std::move(events);
  in.competing = std::move(competing);
  in.users = std::move(users);
  in.resize_matrices();
  return in;
}

// The 4-event / 2-interval / 3-user instance of tests/oracle/ses_oracle.py.
inline Instance tiny_instance() {
  Instance in = make_instance(
      10.0, {"t1", "t2"},
      {{"e1", "L1", 4.0}, {"e2", "L1", 3.0}, {"e3", "L2", 5.0},
       {"e4", "L3", 6.0}},
      {{"c1", "t1"}, {"c2", "t2"}}, {"u1", "u2", "u3"});
  in.activity << 0.9, 0.5,  //
      0.4, 0.8,             //
      0.6, 0.6;
  in.event_interest << 0.5, 0.2, 0.4, 0.1,  //
      0.1, 0.7, 0.3, 0.6,                   //
      0.4, 0.4, 0.2, 0.8;
  in.competing_interest << 0.3, 0.6,  //
      0.5, 0.2,                       //
      0.1, 0.4;
  return in;
}

}  // namespace ses::testing

#endif  // SES_TESTS_FIXTURES_HPP_
