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

// Synthetic instance generation and tag-based interest construction.

#ifndef SES_INSTANCEGEN_HPP_
#define SES_INSTANCEGEN_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ses/model.hpp"

namespace ses {

struct GenParams {
  int k = 100;
  Index num_intervals = 150;
  Index num_events = 200;
  Index num_users = 5000;
  int num_locations = 25;
  double theta = 20.0;
  double xi_min = 1.0;
  double xi_max = 20.0 / 3.0;
  double competing_mean = 8.1;
  std::uint64_t seed = 1;

  // Tag vocabulary used to derive interests.
  int vocabulary = 30;
  int min_tags = 3;
  int max_tags = 8;

  // |events| = 2k, |intervals| = floor(3k / 2).
  static GenParams defaults_for(int k, std::uint64_t seed = 1);
};

// Throws InputError for invalid parameters.
void check_params(const GenParams& params);

// Deterministic in `params`. Competing events per interval are uniform on
// [m - w, m + w] with m = floor(mean) and w = min(3, m); the fractional
// part of the mean is covered by one extra competing event on that share
// of the intervals.
Instance generate(const GenParams& params);

// Jaccard similarity of two tag sets; 0 when both are empty.
double build_interest(const std::set<std::string>& user_tags,
                      const std::set<std::string>& event_tags);
// Same, on tag bitmasks over a vocabulary of at most 64 tokens.
double build_interest(std::uint64_t user_tags, std::uint64_t event_tags);

struct TaggedUser {
  std::string id;
  std::set<std::string> tags;
  std::map<std::string, double> activity;  // interval id -> probability
};

struct TaggedEvent {
  std::string id;
  std::set<std::string> tags;
  std::string location;
  double resources = 0.0;
};

struct TaggedCompeting {
  std::string id;
  std::set<std::string> tags;
  std::string interval;
};

struct TagCorpus {
  std::vector<TaggedUser> users;
  std::vector<TaggedEvent> events;
  std::vector<TaggedCompeting> competing;
  std::vector<std::string> intervals;
  double theta = 0.0;
};

// Interest of every user in every candidate and competing event is the
// Jaccard similarity of their tags. Throws InputError on duplicate ids or
// references to unknown intervals.
Instance build_instance_from_tags(const TagCorpus& corpus);

// Small random instance for oracle comparisons.
struct TinyParams {
  Index max_events = 6;
  Index max_intervals = 3;
  Index max_users = 5;
  int max_k = 3;
  int max_competing = 2;
  bool zero_interest = false;
};

struct TinyInstance {
  Instance instance;
  int k = 1;
};

TinyInstance generate_tiny(const TinyParams& params, std::uint64_t seed);

}  // namespace ses

#endif  // SES_INSTANCEGEN_HPP_
