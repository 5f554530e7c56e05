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

#include "ses/instance_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ses {
namespace {

using nlohmann::json;

template <typename T>
T field(const json& object, const char* key, std::string_view where) {
  if (!object.is_object() || !object.contains(key)) {
    throw LoadError(std::string(where) + ": missing '" + key + "'");
  }
  try {
    return object.at(key).get<T>();
  } catch (const json::exception& e) {
    throw LoadError(std::string(where) + ": bad '" + key + "': " + e.what());
  }
}

const json& array_field(const json& object, const char* key,
                        std::string_view where) {
  if (!object.contains(key) || !object.at(key).is_array()) {
    throw LoadError(std::string(where) + ": '" + key + "' must be an array");
  }
  return object.at(key);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw LoadError(std::string("invalid JSON: ") + e.what());
  }
}

void reject_duplicates(const std::vector<std::string>& ids,
                       std::string_view what) {
  std::set<std::string_view> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) {
      throw LoadError("duplicate " + std::string(what) + " id '" + id + "'");
    }
  }
}

std::set<std::string> tag_set(const json& object, std::string_view where) {
  if (!object.contains("tags")) return {};
  return field<std::set<std::string>>(object, "tags", where);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw LoadError("instance must be a JSON object");

  Instance instance;
  instance.theta = field<double>(doc, "theta", "instance");
  instance.intervals =
      field<std::vector<std::string>>(doc, "intervals", "instance");
  for (const auto& e : array_field(doc, "events", "instance")) {
    instance.events.push_back({field<std::string>(e, "id", "event"),
                               field<std::string>(e, "location", "event"),
                               field<double>(e, "resources", "event")});
  }
  if (doc.contains("competing")) {
    for (const auto& c : array_field(doc, "competing", "instance")) {
      instance.competing.push_back(
          {field<std::string>(c, "id", "competing"),
           field<std::string>(c, "interval", "competing")});
    }
  }
  const json& users = array_field(doc, "users", "instance");
  for (const auto& u : users) {
    instance.users.push_back(field<std::string>(u, "id", "user"));
  }

  reject_duplicates(instance.intervals, "interval");
  reject_duplicates(instance.users, "user");
  std::vector<std::string> event_ids;
  std::map<std::string, std::pair<bool, Index>> columns;  // competing?, col
  for (Index e = 0; e < instance.num_events(); ++e) {
    event_ids.push_back(instance.events[e].id);
    columns[instance.events[e].id] = {false, e};
  }
  for (Index c = 0; c < instance.num_competing(); ++c) {
    event_ids.push_back(instance.competing[c].id);
    columns[instance.competing[c].id] = {true, c};
  }
  reject_duplicates(event_ids, "event");

  std::map<std::string, Index> interval_columns;
  for (Index t = 0; t < instance.num_intervals(); ++t) {
    interval_columns[instance.intervals[t]] = t;
  }

  instance.resize_matrices();
  for (Index u = 0; u < instance.num_users(); ++u) {
    const json& user = users[static_cast<std::size_t>(u)];
    const std::string where = "user '" + instance.users[u] + "'";
    if (user.contains("activity")) {
      for (const auto& [interval, value] :
           field<std::map<std::string, double>>(user, "activity", where)) {
        const auto it = interval_columns.find(interval);
        if (it == interval_columns.end()) {
          throw LoadError(where + ": activity for unknown interval '" +
                          interval + "'");
        }
        instance.activity(u, it->second) = value;
      }
    }
    if (user.contains("interest")) {
      for (const auto& [id, value] :
           field<std::map<std::string, double>>(user, "interest", where)) {
        const auto it = columns.find(id);
        if (it == columns.end()) {
          throw LoadError(where + ": interest in unknown event '" + id + "'");
        }
        const auto [is_competing, col] = it->second;
        (is_competing ? instance.competing_interest
                      : instance.event_interest)(u, col) = value;
      }
    }
  }

  if (const auto violations = validate_instance(instance);
      !violations.empty()) {
    std::ostringstream msg;
    msg << violations.size() << " instance violation(s):";
    for (const auto& v : violations) {
      msg << "\n  " << to_string(v.kind) << ": " << v.detail;
    }
    throw LoadError(msg.str());
  }
  return instance;
}

std::string dump_instance(const Instance& instance) {
  json doc;
  doc["theta"] = instance.theta;
  doc["intervals"] = instance.intervals;
  doc["events"] = json::array();
  for (const auto& e : instance.events) {
    doc["events"].push_back(
        {{"id", e.id}, {"location", e.location}, {"resources", e.resources}});
  }
  doc["competing"] = json::array();
  for (const auto& c : instance.competing) {
    doc["competing"].push_back({{"id", c.id}, {"interval", c.interval}});
  }
  doc["users"] = json::array();
  for (Index u = 0; u < instance.num_users(); ++u) {
    json activity = json::object();
    for (Index t = 0; t < instance.num_intervals(); ++t) {
      if (instance.activity(u, t) != 0.0) {
        activity[instance.intervals[t]] = instance.activity(u, t);
      }
    }
    json interest = json::object();
    for (Index e = 0; e < instance.num_events(); ++e) {
      if (instance.event_interest(u, e) != 0.0) {
        interest[instance.events[e].id] = instance.event_interest(u, e);
      }
    }
    for (Index c = 0; c < instance.num_competing(); ++c) {
      if (instance.competing_interest(u, c) != 0.0) {
        interest[instance.competing[c].id] = instance.competing_interest(u, c);
      }
    }
    doc["users"].push_back({{"id", instance.users[u]},
                            {"activity", std::move(activity)},
                            {"interest", std::move(interest)}});
  }
  return doc.dump() + "\n";
}

Instance load_instance(const std::filesystem::path& path) {
  return parse_instance(read_file(path));
}

void save_instance(const Instance& instance,
                   const std::filesystem::path& path) {
  write_file(path, dump_instance(instance));
}

TagCorpus parse_tag_corpus(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw LoadError("tag corpus must be a JSON object");
  TagCorpus corpus;
  corpus.theta = field<double>(doc, "theta", "corpus");
  corpus.intervals =
      field<std::vector<std::string>>(doc, "intervals", "corpus");
  for (const auto& u : array_field(doc, "users", "corpus")) {
    TaggedUser user{field<std::string>(u, "id", "user"), tag_set(u, "user"),
                    {}};
    if (u.contains("activity")) {
      user.activity =
          field<std::map<std::string, double>>(u, "activity", "user");
    }
    corpus.users.push_back(std::move(user));
  }
  for (const auto& e : array_field(doc, "events", "corpus")) {
    corpus.events.push_back({field<std::string>(e, "id", "event"),
                             tag_set(e, "event"),
                             field<std::string>(e, "location", "event"),
                             field<double>(e, "resources", "event")});
  }
  if (doc.contains("competing")) {
    for (const auto& c : array_field(doc, "competing", "corpus")) {
      corpus.competing.push_back(
          {field<std::string>(c, "id", "competing"), tag_set(c, "competing"),
           field<std::string>(c, "interval", "competing")});
    }
  }
  return corpus;
}

TagCorpus load_tag_corpus(const std::filesystem::path& path) {
  return parse_tag_corpus(read_file(path));
}

std::string report_to_json(const Instance& instance,
                           const SolveReport& report, std::string_view method,
                           int indent) {
  json schedule = json::array();
  for (const auto& a : report.schedule.assignments()) {
    schedule.push_back({{"event", instance.events[a.event].id},
                        {"interval", instance.intervals[a.interval]},
                        {"score", a.score}});
  }
  json doc = {
      {"method", method},
      {"schedule", std::move(schedule)},
      {"utility", report.utility},
      {"wall_time_ms", report.wall_time_ms()},
      {"shortfall", report.shortfall},
      {"counters",
       {{"iterations", report.counters.iterations},
        {"score_computations", report.counters.score_computations},
        {"score_updates", report.counters.score_updates},
        {"invalid_pops", report.counters.invalid_pops}}},
  };
  return doc.dump(indent) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << content;
  if (!out.flush()) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace ses
