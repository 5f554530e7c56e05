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

// JSON formats: instances, tag corpora, and solve reports.
//
// Instance:
//   {"theta": 20, "intervals": ["t1"],
//    "events": [{"id": "e1", "location": "L1", "resources": 3.5}],
//    "competing": [{"id": "c1", "interval": "t1"}],
//    "users": [{"id": "u1", "activity": {"t1": 0.7},
//               "interest": {"e1": 0.4, "c1": 0.2}}]}
// Absent activity/interest keys mean 0 and zeros are not written.

#ifndef SES_INSTANCE_IO_HPP_
#define SES_INSTANCE_IO_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ses/instancegen.hpp"
#include "ses/model.hpp"
#include "ses/solvers.hpp"

namespace ses {

// Malformed or ill-formed input documents.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses and validates; any invariant violation is a LoadError.
Instance parse_instance(std::string_view text);
std::string dump_instance(const Instance& instance);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& instance,
                   const std::filesystem::path& path);

TagCorpus parse_tag_corpus(std::string_view text);
TagCorpus load_tag_corpus(const std::filesystem::path& path);

std::string report_to_json(const Instance& instance,
                           const SolveReport& report, std::string_view method,
                           int indent = 2);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace ses

#endif  // SES_INSTANCE_IO_HPP_
