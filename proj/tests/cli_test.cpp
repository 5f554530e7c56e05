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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "ses/cli.hpp"
#include "ses/harness.hpp"
#include "ses/instance_io.hpp"

namespace ses {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("ses_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const {
    return (path / name).string();
  }
};

TEST_CASE("generate writes an instance sized from k") {
  TempDir dir;
  const Run a = cli({"generate", "--k", "20", "--seed", "1", "-o",
                     dir / "a.json"});
  REQUIRE(a.code == kExitOk);
  CHECK(a.out.find("events=40 intervals=30 users=5000") != std::string::npos);
  const Instance in = load_instance(dir / "a.json");
  CHECK(in.num_events() == 40);
  CHECK(in.num_intervals() == 30);

  const Run b = cli({"generate", "--k", "20", "--seed", "1", "-o",
                     dir / "b.json"});
  REQUIRE(b.code == kExitOk);
  CHECK(read_file(dir / "a.json") == read_file(dir / "b.json"));
}

TEST_CASE("generate rejects bad flags") {
  TempDir dir;
  CHECK(cli({"generate", "--k", "0", "-o", dir / "x.json"}).code ==
        kExitUsage);
  CHECK(cli({"generate", "--k", "abc", "-o", dir / "x.json"}).code ==
        kExitUsage);
  CHECK(cli({"generate", "--k", "5"}).code == kExitUsage);
  CHECK(cli({"generate", "--k", "5", "--xi-max", "50", "-o",
             dir / "x.json"})
            .code == kExitUsage);
  CHECK(cli({"generate", "--k", "5", "-o", "/nonexistent/dir/x.json"}).code ==
        kExitIo);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("generate from a tag corpus") {
  TempDir dir;
  write_file(dir / "corpus.json", R"({
    "theta": 10, "intervals": ["t1", "t2"],
    "users": [{"id": "u1", "tags": ["a", "b"], "activity": {"t1": 1}}],
    "events": [{"id": "e1", "tags": ["a"], "location": "L1", "resources": 2}],
    "competing": [{"id": "c1", "tags": ["b"], "interval": "t1"}]})");
  const Run r = cli({"generate", "--from-tags", dir / "corpus.json", "-o",
                     dir / "inst.json"});
  REQUIRE(r.code == kExitOk);
  const Instance in = load_instance(dir / "inst.json");
  CHECK(in.event_interest(0, 0) == 0.5);
  CHECK(in.competing_interest(0, 0) == 0.5);
}

TEST_CASE("solve prints a JSON report") {
  TempDir dir;
  REQUIRE(cli({"generate", "--k", "10", "--users", "300", "--seed", "4", "-o",
               dir / "inst.json"})
              .code == kExitOk);
  const Instance in = load_instance(dir / "inst.json");

  const Run grd = cli({"solve", dir / "inst.json", "--method", "grd", "--k",
                       "10"});
  REQUIRE(grd.code == kExitOk);
  const json report = json::parse(grd.out);
  CHECK(report["method"] == "GRD");
  CHECK(report["schedule"].size() == 10);
  CHECK(report["shortfall"] == false);
  Schedule s(in);
  for (const auto& a : report["schedule"]) {
    const Index e = event_index(in, a["event"].get<std::string>());
    const Index t = interval_index(in, a["interval"].get<std::string>());
    REQUIRE(is_valid_assignment(in, s, e, t));
    s.insert({e, t, 0.0});
  }
  CHECK(total_utility(in, s) ==
        doctest::Approx(report["utility"].get<double>()).epsilon(1e-12));

  auto stable = [](const std::string& text) {
    json doc = json::parse(text);
    doc.erase("wall_time_ms");
    return doc;
  };
  const Run r1 = cli({"solve", dir / "inst.json", "--method", "rand", "--k",
                      "10", "--seed", "7"});
  const Run r2 = cli({"solve", dir / "inst.json", "--method", "rand", "--k",
                      "10", "--seed", "7"});
  REQUIRE(r1.code == kExitOk);
  CHECK(stable(r1.out) == stable(r2.out));

  CHECK(cli({"solve", dir / "inst.json", "--method", "best", "--k", "3"})
            .code == kExitUsage);
  CHECK(cli({"solve", dir / "inst.json", "--method", "grd", "--k", "0"})
            .code == kExitUsage);
  CHECK(cli({"solve", dir / "inst.json", "--method", "exact", "--k", "2"})
            .code == kExitUsage);  // beyond the exhaustive guard rails
  CHECK(cli({"solve", dir / "missing.json", "--k", "2"}).code == kExitIo);
  write_file(dir / "bad.json", R"({"theta": 1, "intervals": ["t"]})");
  CHECK(cli({"solve", dir / "bad.json", "--k", "2"}).code == kExitLoad);
}

TEST_CASE("solve exact dominates grd on a tiny instance") {
  TempDir dir;
  save_instance(testing::tiny_instance(), dir / "tiny.json");
  for (const char* k : {"1", "2", "3"}) {
    const Run exact = cli({"solve", dir / "tiny.json", "--method", "exact",
                           "--k", k});
    const Run grd = cli({"solve", dir / "tiny.json", "--method", "grd", "--k",
                         k});
    REQUIRE(exact.code == kExitOk);
    REQUIRE(grd.code == kExitOk);
    CHECK(json::parse(exact.out)["utility"].get<double>() >=
          json::parse(grd.out)["utility"].get<double>());
  }
}

TEST_CASE("bench writes one CSV row per point, seed and method") {
  TempDir dir;
  const Run r = cli({"bench", "--k-values", "6,8", "--seeds", "2", "--users",
                     "50", "-o", dir / "k.csv"});
  REQUIRE(r.code == kExitOk);
  std::ifstream csv(dir / "k.csv");
  std::string line;
  std::getline(csv, line);
  CHECK(line == kCsvHeader);
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  CHECK(rows == 2 * 2 * 3);

  const Run t = cli({"bench", "--sweep", "intervals", "--fixed-k", "10",
                     "--seeds", "1", "--users", "30", "--methods", "grd", "-o",
                     dir / "t.csv"});
  REQUIRE(t.code == kExitOk);
  CHECK(t.out.find("6 rows") != std::string::npos);

  CHECK(cli({"bench", "--sweep", "diagonal", "-o", dir / "x.csv"}).code ==
        kExitUsage);
  CHECK(cli({"bench", "--methods", "fast", "-o", dir / "x.csv"}).code ==
        kExitUsage);
  CHECK(cli({"bench", "--k-values", "4", "--seeds", "1", "--users", "10",
             "-o", "/nonexistent/dir/x.csv"})
            .code == kExitIo);
}

TEST_CASE("bench rows are recomputable") {
  BenchConfig config;
  config.k_values = {6, 10};
  config.seeds = 2;
  config.num_users = 60;
  config.spot_check_every = 1;
  const auto rows = run_bench(config);
  CHECK(rows.size() == 12);
  for (const auto& row : rows) {
    CHECK(row.utility >= 0.0);
    CHECK(row.wall_time_ms >= 0.0);
  }
  CHECK(sweep_points(BenchConfig{}).size() == 4);
  CHECK(default_interval_sweep(50) == std::vector<Index>{10, 25, 50, 75, 100,
                                                         150});
}

TEST_CASE("verify compares against exhaustive search") {
  const Run r = cli({"verify", "--count", "200", "--seed", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("instances=200 failed=0") != std::string::npos);
  CHECK(r.out.find("grd/exact min=") != std::string::npos);

  CHECK(cli({"verify", "--count", "0"}).code == kExitUsage);
  CHECK(cli({"verify", "--max-events", "12"}).code == kExitUsage);

  const Run zero = cli({"verify", "--count", "20", "--zero-interest"});
  CHECK(zero.code == kExitOk);
  TinyParams params;
  params.zero_interest = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TinyInstance t = generate_tiny(params, seed);
    const InstanceVerdict v = verify_instance(t.instance, t.k, 5, seed);
    CHECK(v.failures.empty());
    CHECK(v.exact == 0.0);
    CHECK(v.grd == 0.0);
    CHECK(v.top == 0.0);
    CHECK(v.rand_mean == 0.0);
  }
}

TEST_CASE("method names") {
  CHECK(parse_method("grd") == Method::kGrd);
  CHECK(parse_method("Top") == Method::kTop);
  CHECK(parse_method("RAND") == Method::kRand);
  CHECK(parse_method("exact") == Method::kExact);
  CHECK_FALSE(parse_method("greedy").has_value());
  CHECK(csv_row({Method::kTop, 5, 7, 9, 3, 0.5, 1.25, true}) ==
        "TOP,5,7,9,3,0.5,1.25,true");
}

}  // namespace
}  // namespace ses
