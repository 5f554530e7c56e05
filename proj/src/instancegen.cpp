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

#include "ses/instancegen.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string_view>

namespace ses {
namespace {

using Rng = std::mt19937_64;

std::string padded_id(std::string_view prefix, Index one_based, Index count) {
  const int width = static_cast<int>(std::to_string(count).size());
  std::string digits = std::to_string(one_based);
  if (static_cast<int>(digits.size()) < width) {
    digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
  }
  return std::string(prefix) + digits;
}

std::uint64_t random_tags(Rng& rng, int vocabulary, int min_tags,
                          int max_tags) {
  std::uniform_int_distribution<int> size_dist(min_tags, max_tags);
  const int size = size_dist(rng);
  std::vector<int> tokens(static_cast<std::size_t>(vocabulary));
  std::iota(tokens.begin(), tokens.end(), 0);
  std::uint64_t mask = 0;
  for (int i = 0; i < size; ++i) {
    std::uniform_int_distribution<int> pick(i, vocabulary - 1);
    std::swap(tokens[i], tokens[pick(rng)]);
    mask |= std::uint64_t{1} << tokens[i];
  }
  return mask;
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

GenParams GenParams::defaults_for(int k, std::uint64_t seed) {
  GenParams p;
  p.k = k;
  p.num_events = 2 * static_cast<Index>(k);
  p.num_intervals = 3 * static_cast<Index>(k) / 2;
  p.seed = seed;
  return p;
}

void check_params(const GenParams& p) {
  auto fail = [](const std::string& what) {
    throw InputError("invalid generator parameters: " + what);
  };
  if (p.k < 1) fail("k must be positive");
  if (p.num_intervals < 1) fail("num_intervals must be positive");
  if (p.num_events < 1) fail("num_events must be positive");
  if (p.num_users < 1) fail("num_users must be positive");
  if (p.num_locations < 1) fail("num_locations must be positive");
  if (!(p.theta >= 0.0)) fail("theta must be non-negative");
  if (!(p.xi_min >= 0.0 && p.xi_min <= p.xi_max && p.xi_max <= p.theta)) {
    fail("xi range must lie within [0, theta]");
  }
  if (!(p.competing_mean > 0.0)) fail("competing_mean must be positive");
  if (p.vocabulary < 1 || p.vocabulary > 64) {
    fail("vocabulary must be in [1, 64]");
  }
  if (p.min_tags < 0 || p.min_tags > p.max_tags ||
      p.max_tags > p.vocabulary) {
    fail("tag counts must satisfy 0 <= min <= max <= vocabulary");
  }
}

Instance generate(const GenParams& p) {
  check_params(p);
  Rng rng(p.seed);
  Instance instance;
  instance.theta = p.theta;

  for (Index t = 0; t < p.num_intervals; ++t) {
    instance.intervals.push_back(padded_id("t", t + 1, p.num_intervals));
  }

  std::uniform_int_distribution<int> location_dist(0, p.num_locations - 1);
  std::vector<std::uint64_t> event_tags;
  for (Index e = 0; e < p.num_events; ++e) {
    CandidateEvent event;
    event.id = padded_id("e", e + 1, p.num_events);
    event.location = padded_id("L", location_dist(rng) + 1, p.num_locations);
    event.resources = uniform(rng, p.xi_min, p.xi_max);
    instance.events.push_back(std::move(event));
    event_tags.push_back(random_tags(rng, p.vocabulary, p.min_tags,
                                     p.max_tags));
  }

  const int base = static_cast<int>(std::floor(p.competing_mean));
  const int width = std::min(3, base);
  std::uniform_int_distribution<int> count_dist(base - width, base + width);
  std::vector<int> per_interval(static_cast<std::size_t>(p.num_intervals));
  for (auto& c : per_interval) c = count_dist(rng);
  const auto extra = static_cast<std::size_t>(std::llround(
      (p.competing_mean - base) * static_cast<double>(p.num_intervals)));
  std::vector<std::size_t> order(per_interval.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < std::min(extra, order.size()); ++i) {
    ++per_interval[order[i]];
  }
  const Index total_competing =
      std::accumulate(per_interval.begin(), per_interval.end(), Index{0});
  std::vector<std::uint64_t> competing_tags;
  for (Index t = 0; t < p.num_intervals; ++t) {
    for (int j = 0; j < per_interval[t]; ++j) {
      const auto c = static_cast<Index>(instance.competing.size());
      instance.competing.push_back(
          {padded_id("c", c + 1, total_competing), instance.intervals[t]});
      competing_tags.push_back(random_tags(rng, p.vocabulary, p.min_tags,
                                           p.max_tags));
    }
  }

  for (Index u = 0; u < p.num_users; ++u) {
    instance.users.push_back(padded_id("u", u + 1, p.num_users));
  }
  instance.resize_matrices();
  for (Index u = 0; u < p.num_users; ++u) {
    const std::uint64_t tags = random_tags(rng, p.vocabulary, p.min_tags,
                                           p.max_tags);
    for (Index t = 0; t < p.num_intervals; ++t) {
      instance.activity(u, t) = uniform(rng, 0.0, 1.0);
    }
    for (Index e = 0; e < p.num_events; ++e) {
      instance.event_interest(u, e) = build_interest(tags, event_tags[e]);
    }
    for (Index c = 0; c < total_competing; ++c) {
      instance.competing_interest(u, c) =
          build_interest(tags, competing_tags[c]);
    }
  }
  return instance;
}

double build_interest(const std::set<std::string>& user_tags,
                      const std::set<std::string>& event_tags) {
  std::size_t common = 0;
  for (const auto& tag : user_tags) common += event_tags.count(tag);
  const std::size_t joined = user_tags.size() + event_tags.size() - common;
  if (joined == 0) return 0.0;
  return static_cast<double>(common) / static_cast<double>(joined);
}

double build_interest(std::uint64_t user_tags, std::uint64_t event_tags) {
  const int joined = std::popcount(user_tags | event_tags);
  if (joined == 0) return 0.0;
  return static_cast<double>(std::popcount(user_tags & event_tags)) /
         static_cast<double>(joined);
}

Instance build_instance_from_tags(const TagCorpus& corpus) {
  Instance instance;
  instance.theta = corpus.theta;
  instance.intervals = corpus.intervals;
  for (const auto& e : corpus.events) {
    instance.events.push_back({e.id, e.location, e.resources});
  }
  for (const auto& c : corpus.competing) {
    instance.competing.push_back({c.id, c.interval});
  }
  for (const auto& u : corpus.users) instance.users.push_back(u.id);
  instance.resize_matrices();

  for (const auto& v : validate_instance(instance)) {
    if (v.kind == Violation::Kind::kDuplicateId ||
        v.kind == Violation::Kind::kDanglingInterval) {
      throw InputError("tag corpus: " + std::string(to_string(v.kind)) +
                       ": " + v.detail);
    }
  }

  for (Index u = 0; u < instance.num_users(); ++u) {
    const auto& user = corpus.users[u];
    for (const auto& [interval, probability] : user.activity) {
      instance.activity(u, interval_index(instance, interval)) = probability;
    }
    for (Index e = 0; e < instance.num_events(); ++e) {
      instance.event_interest(u, e) =
          build_interest(user.tags, corpus.events[e].tags);
    }
    for (Index c = 0; c < instance.num_competing(); ++c) {
      instance.competing_interest(u, c) =
          build_interest(user.tags, corpus.competing[c].tags);
    }
  }
  return instance;
}

TinyInstance generate_tiny(const TinyParams& params, std::uint64_t seed) {
  if (params.max_events < 1 || params.max_intervals < 1 ||
      params.max_users < 1 || params.max_k < 1 || params.max_competing < 0) {
    throw InputError("tiny instance bounds must be positive");
  }
  Rng rng(seed);
  auto draw = [&rng](Index lo, Index hi) {
    return std::uniform_int_distribution<Index>(lo, hi)(rng);
  };
  constexpr int kVocabulary = 8;

  const Index num_events = draw(std::min<Index>(2, params.max_events),
                                params.max_events);
  const Index num_intervals = draw(1, params.max_intervals);
  const Index num_users = draw(1, params.max_users);
  const int num_locations = static_cast<int>(draw(1, 3));

  TinyInstance tiny;
  tiny.k = static_cast<int>(
      draw(1, std::min<Index>(params.max_k, num_events)));
  Instance& instance = tiny.instance;
  instance.theta = uniform(rng, 4.0, 20.0);
  for (Index t = 0; t < num_intervals; ++t) {
    instance.intervals.push_back(padded_id("t", t + 1, num_intervals));
  }
  std::vector<std::uint64_t> event_tags;
  for (Index e = 0; e < num_events; ++e) {
    instance.events.push_back(
        {padded_id("e", e + 1, num_events),
         padded_id("L", draw(1, num_locations), num_locations),
         uniform(rng, 1.0, 20.0 / 3.0)});
    event_tags.push_back(random_tags(rng, kVocabulary, 1, 4));
  }
  std::vector<std::uint64_t> competing_tags;
  for (Index t = 0; t < num_intervals; ++t) {
    const Index count = draw(0, params.max_competing);
    for (Index j = 0; j < count; ++j) {
      instance.competing.push_back(
          {"c" + std::to_string(instance.competing.size() + 1),
           instance.intervals[t]});
      competing_tags.push_back(random_tags(rng, kVocabulary, 1, 4));
    }
  }
  for (Index u = 0; u < num_users; ++u) {
    instance.users.push_back(padded_id("u", u + 1, num_users));
  }
  instance.resize_matrices();
  for (Index u = 0; u < num_users; ++u) {
    const std::uint64_t tags = random_tags(rng, kVocabulary, 1, 4);
    for (Index t = 0; t < num_intervals; ++t) {
      instance.activity(u, t) = uniform(rng, 0.0, 1.0);
    }
    if (params.zero_interest) continue;
    for (Index e = 0; e < num_events; ++e) {
      instance.event_interest(u, e) = build_interest(tags, event_tags[e]);
    }
    for (Index c = 0; c < instance.num_competing(); ++c) {
      instance.competing_interest(u, c) =
          build_interest(tags, competing_tags[c]);
    }
  }
  return tiny;
}

}  // namespace ses
