// Copyright 2026 The Coverlife Authors
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

#ifndef COVERLIFE_INSTANCE_IO_H_
#define COVERLIFE_INSTANCE_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>

#include "coverlife/model.h"

// JSON file formats.
//
// Instance:
//   {"n": 3, "m": 3, "range": 70.0,
//    "sensors": [[x, y], ...], "targets": [[x, y], ...],
//    "battery": [1.0, ...]}
//
// Schedule:
//   {"schedule": [{"cover": [0, 1], "lifetime": 0.5}, ...]}

namespace coverlife {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parsing checks "n"/"m" against the array lengths and runs
// Instance::Validate(); failures throw FormatError.
Instance ParseInstanceJson(const std::string& text);
std::string InstanceToJson(const Instance& instance);

Schedule ParseScheduleJson(const std::string& text);
std::string ScheduleToJson(const Schedule& schedule);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, const std::string& contents);

}  // namespace coverlife

#endif  // COVERLIFE_INSTANCE_IO_H_
